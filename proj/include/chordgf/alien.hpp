#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chordgf/power_series.hpp"

namespace chordgf {

/// Image of a factorially divergent series under the alien derivative with
/// scale alpha^{n+beta} Gamma(n+beta), alpha = 2 throughout:
///   e^{e_exp} * (2 pi)^{sqrt_two_pi_exp / 2} * series(x).
/// The transcendental part lives entirely in the two exponents, so the
/// series has exact rational coefficients.
struct AsymptoticImage {
  Rational e_exp;
  int sqrt_two_pi_exp = 0;
  Rational beta{1, 2};
  PowerSeries series = PowerSeries::zero(0);

  static AsymptoticImage zero(std::size_t order, const Rational& beta);
  bool is_zero() const { return series.is_zero(); }
};

/// Splits off the constant term: returns (c0, exp(f - c0)).
std::pair<Rational, PowerSeries> exp_with_constant(const PowerSeries& f);

/// Image of the connected-diagram series: (x/C) exp(-(C^2 + 2C)/(2x)) / sqrt(2 pi).
AsymptoticImage alien_C(std::size_t order);
/// Image of the 2-connected series:
///   x^2/(C2 S) exp(-((S + x)^2 - 1)/(2x)) / sqrt(2 pi).
AsymptoticImage alien_C2(std::size_t order);

/// Intermediate series used to build alien_C2, truncated to `order`.
struct AlienTableRows {
  PowerSeries s;               // 1/(1 - C2/x)
  PowerSeries s_plus_x_sq;     // (S + x)^2
  PowerSeries exponent;        // ((S + x)^2 - 1)/(2x)
  PowerSeries c2_times_s;      // C2 * S
  PowerSeries x2_over_c2_s;    // x^2/(C2 * S)
  PowerSeries scaled_exp;      // e^2 * exp(-exponent)
};
AlienTableRows alien_table_rows(std::size_t order);

// Calculus on images. Plain series carry no prefactor; images do.

/// Sum of two images. A zero image adopts the other's prefactor; two
/// nonzero images with different prefactors or beta throw PreconditionError.
AsymptoticImage add_images(const AsymptoticImage& a, const AsymptoticImage& b);
/// f * A, keeping A's prefactor.
AsymptoticImage multiply(const PowerSeries& f, const AsymptoticImage& a);
/// Image at beta + m from the image at beta: multiply by x^m.
AsymptoticImage shift_beta(const AsymptoticImage& a, int m);

/// Image of f*g: f * Ag + g * Af.
AsymptoticImage alien_product(const PowerSeries& f, const AsymptoticImage& af, const PowerSeries& g,
                              const AsymptoticImage& ag);
/// Image of f(g) for g = x + O(x^2):
///   f'(g) Ag + (x/g)^beta exp((g - x)/(alpha x g)) (Af)(g).
/// The constant term of the exponent (g_2/alpha) moves into e_exp.
AsymptoticImage alien_compose(const PowerSeries& f, const AsymptoticImage& af, const PowerSeries& g,
                              const AsymptoticImage& ag, const Rational& alpha, const Rational& beta);
/// Image of the compositional inverse h of g:
///   -h' (x/h)^beta exp((h - x)/(alpha x h)) (Ag)(h).
AsymptoticImage alien_inverse(const PowerSeries& g, const AsymptoticImage& ag, const Rational& alpha,
                              const Rational& beta);

/// One checked identity of the derivation of alien_C2 from alien_C.
struct ChainStep {
  std::string name;
  bool passed = false;
  std::optional<std::size_t> first_bad_index;  // first differing coefficient
  std::string detail;
};

struct ChainReport {
  std::size_t order = 0;
  std::vector<ChainStep> steps;
  bool passed() const;
};

/// Runs every step of the derivation to `order` (>= 6) as exact series
/// identities, starting from alien_C(order).
ChainReport verify_derivation_chain(std::size_t order);
/// Same, starting from a caller-supplied image of C (for sensitivity tests).
/// The image must have beta = 1/2 and order >= order + 6.
ChainReport verify_derivation_chain(std::size_t order, const AsymptoticImage& alien_c);

}  // namespace chordgf
