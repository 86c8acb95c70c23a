#include "chordgf/asymptotics.hpp"

#include "chordgf/error.hpp"
#include "chordgf/generating_functions.hpp"

namespace chordgf {

mpz_class gamma_scale(long n, long k) {
  if (n - k < 1) throw PreconditionError("gamma_scale needs n - k >= 1");
  mpz_class r = 1;
  for (long j = 3; j <= 2 * (n - k) - 1; j += 2) r *= j;
  return r;
}

Rational expansion_sum(const AsymptoticImage& img, long n, long terms) {
  if (terms < 1 || static_cast<std::size_t>(terms) > img.series.order() + 1) {
    throw PreconditionError("number of terms must lie in [1, series order + 1]");
  }
  if (n < terms) throw PreconditionError("estimate needs n >= number of terms");
  Rational sum;
  for (long k = 0; k < terms; ++k) {
    const Rational& c = img.series[static_cast<std::size_t>(k)];
    if (!c.is_zero()) sum += c * Rational(gamma_scale(n, k));
  }
  return sum;
}

namespace {

HighPrecisionDecimal narrow(const HighPrecisionDecimal& d, int digits) {
  const int drop = d.digits() - digits;
  if (drop == 0) return d;
  const mpz_class unit = pow10(drop);
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), d.scaled().get_mpz_t(), unit.get_mpz_t());
  mpz_class e;
  mpz_cdiv_q(e.get_mpz_t(), d.error_ulps().get_mpz_t(), unit.get_mpz_t());
  return HighPrecisionDecimal(q, digits, e + 1);
}

int decimal_width(const Rational& r) {
  mpz_class mag = abs(r.numerator()) / r.denominator();
  return static_cast<int>(mag.get_str().size());
}

}  // namespace

HighPrecisionDecimal estimate(const AsymptoticImage& img, long n, long terms, int digits) {
  const Rational sum = expansion_sum(img, n, terms);
  const int work = digits + decimal_width(sum) + 2;
  HighPrecisionDecimal factor = exp_rational(img.e_exp, work);
  const int residual = img.sqrt_two_pi_exp + 1;
  if (residual != 0) {
    const HighPrecisionDecimal root = const_sqrt_two_pi(work);
    HighPrecisionDecimal power = residual > 0 ? root : root.inverse();
    for (int i = 1; i < (residual > 0 ? residual : -residual); ++i) power = power * (residual > 0 ? root : root.inverse());
    factor = factor * power;
  }
  return narrow(factor.times(sum), digits);
}

std::vector<EstimateRow> error_table(const AsymptoticImage& img, const PowerSeries& exact, long n_from, long n_to,
                                     long r_from, long r_to, int digits) {
  if (n_to < n_from || r_to < r_from) throw PreconditionError("empty range in error table");
  if (n_to < 0 || static_cast<std::size_t>(n_to) > exact.order()) {
    throw PreconditionError("exact coefficients do not reach the end of the n range");
  }
  std::vector<EstimateRow> rows;
  for (long n = n_from; n <= n_to; ++n) {
    const Rational exact_n = exact[static_cast<std::size_t>(n)];
    for (long r = r_from; r <= r_to; ++r) {
      EstimateRow row{n, r, estimate(img, n, r, digits), exact_n.numerator(),
                      HighPrecisionDecimal(0, digits, 0), HighPrecisionDecimal(0, digits, 0)};
      const Rational gap = (exact_n - row.estimate.value()).abs();
      if (!exact_n.is_zero()) row.rel_error = HighPrecisionDecimal::from_rational(gap / exact_n.abs(), digits);
      row.norm_error = HighPrecisionDecimal::from_rational(gap / Rational(gamma_scale(n, r)), digits);
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

ProbabilityCheck probability_check(long n, int digits) {
  if (n < 2) throw PreconditionError("probability check needs n >= 2");
  const Rational count = series_C2(static_cast<std::size_t>(n))[static_cast<std::size_t>(n)];
  const Rational ratio = count / Rational(gamma_scale(n, 0));
  const HighPrecisionDecimal e2 = exp_rational(-2, digits + 4);
  const HighPrecisionDecimal model = e2.times(Rational(n - 3, n));
  const HighPrecisionDecimal dev = (HighPrecisionDecimal::from_rational(ratio, digits + 4) - model).times(Rational(n * n));
  return {n, ratio, HighPrecisionDecimal::from_rational(ratio, digits), narrow(model, digits), narrow(dev, digits)};
}

}  // namespace chordgf
