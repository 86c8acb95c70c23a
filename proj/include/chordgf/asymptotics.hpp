#pragma once

#include <vector>

#include <gmpxx.h>

#include "chordgf/alien.hpp"
#include "chordgf/decimal.hpp"

namespace chordgf {

/// (2(n-k)-1)!!, the Gamma-scale factor of term k with the sqrt(2 pi)
/// stripped. Requires n - k >= 1.
mpz_class gamma_scale(long n, long k);

/// Exact partial sum sum_{k<R} c_k (2(n-k)-1)!! of an image's expansion.
Rational expansion_sum(const AsymptoticImage& img, long n, long terms);

/// e^{e_exp} (2 pi)^{(sqrt_two_pi_exp + 1)/2} * expansion_sum, evaluated to
/// `digits` fractional digits. Requires 1 <= terms <= series.order() + 1
/// and n >= terms.
HighPrecisionDecimal estimate(const AsymptoticImage& img, long n, long terms, int digits);

/// Below this gap n - R the truncated expansion says little.
inline constexpr long kReliableGap = 5;
inline bool estimate_reliable(long n, long terms) { return n - terms >= kReliableGap; }

struct EstimateRow {
  long n = 0;
  long terms = 0;
  HighPrecisionDecimal estimate;
  mpz_class exact;
  HighPrecisionDecimal rel_error;   // |exact - estimate| / exact
  HighPrecisionDecimal norm_error;  // |exact - estimate| / (2(n - R) - 1)!!
};

/// One row per (n, R) with n in [n_from, n_to] and R in [r_from, r_to],
/// ordered by n then R. `exact` must reach n_to.
std::vector<EstimateRow> error_table(const AsymptoticImage& img, const PowerSeries& exact, long n_from, long n_to,
                                     long r_from, long r_to, int digits);

/// Fraction of diagrams on n chords that are 2-connected, against the
/// two-term model e^{-2}(1 - 3/n).
struct ProbabilityCheck {
  long n = 0;
  Rational ratio;
  HighPrecisionDecimal ratio_decimal;
  HighPrecisionDecimal model;
  HighPrecisionDecimal deviation_n2;  // (ratio - model) * n^2
};
ProbabilityCheck probability_check(long n, int digits);

}  // namespace chordgf
