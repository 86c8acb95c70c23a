#include "chordgf/alien.hpp"

#include <algorithm>
#include <sstream>

#include "chordgf/error.hpp"
#include "chordgf/generating_functions.hpp"

namespace chordgf {

AsymptoticImage AsymptoticImage::zero(std::size_t order, const Rational& beta) {
  AsymptoticImage a;
  a.beta = beta;
  a.series = PowerSeries::zero(order);
  return a;
}

std::pair<Rational, PowerSeries> exp_with_constant(const PowerSeries& f) {
  const Rational c0 = f[0];
  return {c0, exp_series(f - PowerSeries::constant(c0, f.order()))};
}

AsymptoticImage alien_C(std::size_t order) {
  if (order < 1) throw PreconditionError("alien_C needs order >= 1");
  const PowerSeries c = series_C(order + 1);
  const PowerSeries c_over_x = divide_by_x_pow(c, 1);
  const PowerSeries arg = scale(divide_by_x_pow(c * c + scale(c, 2), 1), Rational(-1, 2));
  auto [k, e] = exp_with_constant(arg);
  AsymptoticImage a;
  a.e_exp = k;
  a.sqrt_two_pi_exp = -1;
  a.beta = Rational(1, 2);
  a.series = reciprocal(c_over_x) * e;
  return a;
}

AlienTableRows alien_table_rows(std::size_t order) {
  const std::size_t m = order + 2;
  const PowerSeries s = series_S(m);
  const PowerSeries c2 = series_C2(m);
  const PowerSeries sx = s + PowerSeries::x(m);
  const PowerSeries sx_sq = sx * sx;
  const PowerSeries exponent = scale(divide_by_x_pow(sx_sq - PowerSeries::one(m), 1), Rational(1, 2));
  const PowerSeries c2s = c2 * s;
  const PowerSeries x2_over = reciprocal(divide_by_x_pow(c2s, 2));
  auto [k, e] = exp_with_constant(neg(exponent));
  (void)k;
  return {s.truncate(order),         sx_sq.truncate(order), exponent.truncate(order), c2s.truncate(order),
          x2_over.truncate(order), e.truncate(order)};
}

AsymptoticImage alien_C2(std::size_t order) {
  const std::size_t m = order + 2;
  const PowerSeries s = series_S(m);
  const PowerSeries c2 = series_C2(m);
  const PowerSeries sx = s + PowerSeries::x(m);
  const PowerSeries exponent = scale(divide_by_x_pow(sx * sx - PowerSeries::one(m), 1), Rational(1, 2));
  auto [k, e] = exp_with_constant(neg(exponent));
  AsymptoticImage a;
  a.e_exp = k;
  a.sqrt_two_pi_exp = -1;
  a.beta = Rational(1, 2);
  a.series = (reciprocal(divide_by_x_pow(c2 * s, 2)) * e).truncate(order);
  return a;
}

AsymptoticImage add_images(const AsymptoticImage& a, const AsymptoticImage& b) {
  const std::size_t order = std::min(a.series.order(), b.series.order());
  if (a.is_zero()) {
    AsymptoticImage r = b;
    r.series = b.series.truncate(order);
    return r;
  }
  if (b.is_zero()) {
    AsymptoticImage r = a;
    r.series = a.series.truncate(order);
    return r;
  }
  if (a.e_exp != b.e_exp || a.sqrt_two_pi_exp != b.sqrt_two_pi_exp) {
    throw PreconditionError("cannot add images with different transcendental prefactors");
  }
  if (a.beta != b.beta) throw PreconditionError("cannot add images taken at different beta");
  AsymptoticImage r = a;
  r.series = a.series + b.series;
  return r;
}

AsymptoticImage multiply(const PowerSeries& f, const AsymptoticImage& a) {
  AsymptoticImage r = a;
  r.series = f * a.series;
  return r;
}

AsymptoticImage shift_beta(const AsymptoticImage& a, int m) {
  AsymptoticImage r = a;
  r.beta = a.beta + Rational(m);
  if (m >= 0) {
    r.series = mul_by_x_pow(a.series, static_cast<std::size_t>(m));
  } else {
    r.series = divide_by_x_pow(a.series, static_cast<std::size_t>(-m));
  }
  return r;
}

AsymptoticImage alien_product(const PowerSeries& f, const AsymptoticImage& af, const PowerSeries& g,
                              const AsymptoticImage& ag) {
  return add_images(multiply(f, ag), multiply(g, af));
}

namespace {

void require_tangent_to_identity(const PowerSeries& g) {
  if (g.order() < 2 || !g[0].is_zero() || g[1] != Rational(1)) {
    throw PreconditionError("chain rule needs g = x + O(x^2)");
  }
}

// (x/g)^beta * exp((g - x)/(alpha x g)) * (Af)(g), with the exponent's
// constant term moved into e_exp.
AsymptoticImage transported(const AsymptoticImage& af, const PowerSeries& g, const Rational& alpha,
                            const Rational& beta) {
  const PowerSeries g_over_x = divide_by_x_pow(g, 1);
  const PowerSeries x_over_g = reciprocal(g_over_x);
  const PowerSeries arg =
      scale(divide_by_x_pow(g - PowerSeries::x(g.order()), 2) * x_over_g, alpha.inverse());
  auto [k, e] = exp_with_constant(arg);
  AsymptoticImage r = af;
  r.e_exp = af.e_exp + k;
  r.beta = beta;
  r.series = pow_rational(x_over_g, beta) * e * compose(af.series, g);
  return r;
}

void require_beta(const AsymptoticImage& a, const Rational& beta) {
  if (!a.is_zero() && a.beta != beta) throw PreconditionError("image beta does not match the chain-rule beta");
}

}  // namespace

AsymptoticImage alien_compose(const PowerSeries& f, const AsymptoticImage& af, const PowerSeries& g,
                              const AsymptoticImage& ag, const Rational& alpha, const Rational& beta) {
  require_tangent_to_identity(g);
  require_beta(af, beta);
  require_beta(ag, beta);
  AsymptoticImage first = multiply(compose(derivative(f), g), ag);
  first.beta = beta;
  return add_images(first, transported(af, g, alpha, beta));
}

AsymptoticImage alien_inverse(const PowerSeries& g, const AsymptoticImage& ag, const Rational& alpha,
                              const Rational& beta) {
  require_tangent_to_identity(g);
  require_beta(ag, beta);
  const PowerSeries h = reverse(g);
  AsymptoticImage r = transported(ag, h, alpha, beta);
  r.series = neg(derivative(h)) * r.series;
  return r;
}

bool ChainReport::passed() const {
  return std::all_of(steps.begin(), steps.end(), [](const ChainStep& s) { return s.passed; });
}

namespace {

ChainStep compare_series(std::string name, const PowerSeries& got, const PowerSeries& want, std::size_t order) {
  ChainStep step;
  step.name = std::move(name);
  if (got.order() < order || want.order() < order) {
    step.detail = "series known only to order " + std::to_string(std::min(got.order(), want.order()));
    return step;
  }
  for (std::size_t k = 0; k <= order; ++k) {
    if (got[k] != want[k]) {
      step.first_bad_index = k;
      std::ostringstream os;
      os << "coefficient " << k << ": " << got[k] << " != " << want[k];
      step.detail = os.str();
      return step;
    }
  }
  step.passed = true;
  return step;
}

ChainStep compare_images(std::string name, const AsymptoticImage& got, const AsymptoticImage& want,
                         std::size_t order) {
  if (got.e_exp != want.e_exp || got.sqrt_two_pi_exp != want.sqrt_two_pi_exp || got.beta != want.beta) {
    ChainStep step;
    step.name = std::move(name);
    std::ostringstream os;
    os << "prefactor mismatch: e^" << got.e_exp << " (2pi)^(" << got.sqrt_two_pi_exp << "/2) beta " << got.beta
       << " vs e^" << want.e_exp << " (2pi)^(" << want.sqrt_two_pi_exp << "/2) beta " << want.beta;
    step.detail = os.str();
    return step;
  }
  return compare_series(std::move(name), got.series, want.series, order);
}

}  // namespace

ChainReport verify_derivation_chain(std::size_t order) { return verify_derivation_chain(order, alien_C(order + 6)); }

ChainReport verify_derivation_chain(std::size_t order, const AsymptoticImage& alien_c) {
  if (order < 6) throw PreconditionError("verify_derivation_chain needs order >= 6");
  if (alien_c.beta != Rational(1, 2)) throw PreconditionError("image of C must be taken at beta = 1/2");
  const std::size_t m = order + 6;
  if (alien_c.series.order() < m) throw PreconditionError("image of C must be known to order + 6");

  ChainReport report;
  report.order = order;
  const Rational three_halves(3, 2);
  const PowerSeries x = PowerSeries::x(m);
  const PowerSeries c = series_C(m);
  const PowerSeries c2 = series_C2(m);
  const PowerSeries t = series_t(m);
  const AsymptoticImage ac = multiply(PowerSeries::one(m), alien_c);

  // Image of t = C^2/x at beta 3/2 is the image of C^2 at beta 1/2.
  AsymptoticImage a_t = alien_product(c, ac, c, ac);
  a_t.beta = three_halves;
  const AsymptoticImage a_c_shifted = shift_beta(ac, 1);
  // C2(t) = t - C, so its image is A t - A C.
  const AsymptoticImage lhs = add_images(a_t, multiply(PowerSeries::constant(-1, m), a_c_shifted));
  const AsymptoticImage a_c2_shifted = shift_beta(alien_C2(m), 1);
  const AsymptoticImage rhs = alien_compose(c2, a_c2_shifted, t, a_t, 2, three_halves);
  report.steps.push_back(compare_images("chain rule on C2(C^2/x)", lhs, rhs, order));

  report.steps.push_back(compare_series("derivative identity", derivative_identity_residual(c, c2),
                                        PowerSeries::zero(m), order));

  // (2C - x) - 2C C2'(t) = x C^2/(C - x)
  const PowerSeries c2_prime_t = compose(derivative(c2), t);
  const PowerSeries inv_c_minus_x = reciprocal(divide_by_x_pow(c - x, 2));
  const PowerSeries reduced = scale(c, 2) - x - scale(c, 2) * c2_prime_t;
  report.steps.push_back(compare_series("reduced chain coefficient", reduced, t * inv_c_minus_x, order));

  // Solve the chain rule for (A C2)(t) using only the image of C.
  const AsymptoticImage remainder =
      add_images(lhs, multiply(PowerSeries::constant(-1, m), multiply(c2_prime_t, a_t)));
  const PowerSeries x_over_t = reciprocal(divide_by_x_pow(t, 1));
  auto [k, e] = exp_with_constant(scale(divide_by_x_pow(t - x, 2) * x_over_t, Rational(1, 2)));
  AsymptoticImage solved = remainder;
  solved.e_exp = remainder.e_exp - k;
  solved.beta = Rational(1, 2);
  const PowerSeries divisor = pow_rational(x_over_t, three_halves) * e;
  solved.series = divide_by_x_pow(remainder.series * reciprocal(divisor), 1) * x_over_t;

  const PowerSeries x_sq_over_c_sq = reciprocal(divide_by_x_pow(c * c, 2));
  const PowerSeries bracket = c * c + scale(c, 2) + PowerSeries::one(m) - x_sq_over_c_sq;
  auto [k_pre, e_pre] = exp_with_constant(scale(divide_by_x_pow(bracket, 1), Rational(-1, 2)));
  AsymptoticImage pre;
  pre.e_exp = k_pre;
  pre.sqrt_two_pi_exp = -1;
  pre.beta = Rational(1, 2);
  pre.series = divide_by_x_pow(c * c, 2) * inv_c_minus_x * e_pre;
  report.steps.push_back(compare_images("closed form at t = C^2/x", solved, pre, order));

  const PowerSeries y = reverse(t);
  const PowerSeries x_minus_c2 = x - c2;
  report.steps.push_back(
      compare_series("y-substitution", y, divide_by_x_pow(x_minus_c2 * x_minus_c2, 1), order));

  AsymptoticImage substituted = solved;
  substituted.series = compose(solved.series, y);
  report.steps.push_back(compare_images("image of C2 after substitution", substituted, alien_C2(m), order));
  return report;
}

}  // namespace chordgf
