#include <doctest.h>

#include <cmath>

#include "chordgf/asymptotics.hpp"
#include "chordgf/error.hpp"
#include "chordgf/generating_functions.hpp"
#include "oracles.hpp"

using namespace chordgf;

namespace {

// Reference digits of the constants.
const char* const kE = "2.718281828459045235360287471352662497757";
const char* const kSqrtTwoPi = "2.506628274631000502415765284811045253006";
const char* const kEMinus2 = "0.135335283236612691893999494972484403407";

Rational reference(const char* text) {
  const std::string s(text);
  const auto dot = s.find('.');
  const std::string digits = s.substr(0, dot) + s.substr(dot + 1);
  return Rational(mpz_class(digits, 10), pow10(static_cast<int>(s.size() - dot - 1)));
}

void check_close(const HighPrecisionDecimal& d, const char* ref, int digits) {
  const Rational gap = (d.value() - reference(ref)).abs();
  CHECK(gap < Rational(mpz_class(1), pow10(digits)));
  CHECK(gap <= d.error_bound() + Rational(mpz_class(1), pow10(35)));
}

}  // namespace

TEST_CASE("constants") {
  check_close(const_e(30), kE, 30);
  check_close(const_sqrt_two_pi(30), kSqrtTwoPi, 30);
  check_close(exp_rational(-2, 30), kEMinus2, 30);
  check_close(exp_rational(1, 25), kE, 25);
  CHECK(const_e(10).to_string() == "2.7182818285");
  CHECK(const_sqrt_two_pi(10).to_string() == "2.5066282746");
  CHECK(const_pi(20).to_string() == "3.14159265358979323846");
  // Constant error bounds stay below half a unit in the last requested place.
  CHECK(const_e(30).error_bound() < Rational(mpz_class(1), 2 * pow10(30)));
  CHECK(const_pi(30).error_bound() < Rational(mpz_class(1), 2 * pow10(30)));
}

TEST_CASE("e squared times its inverse square") {
  const HighPrecisionDecimal e = const_e(30);
  const HighPrecisionDecimal sq = e * e;
  const HighPrecisionDecimal one = sq * sq.inverse();
  CHECK((one.value() - Rational(1)).abs() < Rational(mpz_class(1), pow10(29)));
}

TEST_CASE("gamma scale") {
  CHECK(gamma_scale(3, 0) == 15);
  CHECK(gamma_scale(6, 0) == oracle::double_factorial(11));
  CHECK(gamma_scale(5, 2) == 15);
  CHECK(gamma_scale(1, 0) == 1);
  CHECK_THROWS_AS(gamma_scale(3, 3), PreconditionError);
}

TEST_CASE("estimate") {
  const AsymptoticImage c2 = alien_C2(6);
  const HighPrecisionDecimal lead = estimate(c2, 6, 1, 30);
  // e^-2 * 10395 from the reference digits.
  const Rational ref = reference(kEMinus2) * Rational(10395);
  CHECK((lead.value() - ref).abs() < Rational(mpz_class(1), pow10(28)));
  CHECK(lead.to_string().rfind("1406.8102692445889", 0) == 0);

  AsymptoticImage zero = c2;
  zero.series = PowerSeries::zero(6);
  CHECK(estimate(zero, 10, 3, 20).value() == Rational(0));

  CHECK_THROWS_AS(estimate(c2, 6, 0, 10), PreconditionError);
  CHECK_THROWS_AS(estimate(c2, 6, 8, 10), PreconditionError);
  CHECK_THROWS_AS(estimate(c2, 3, 4, 10), PreconditionError);
  CHECK_FALSE(estimate_reliable(8, 4));
  CHECK(estimate_reliable(9, 4));
}

TEST_CASE("consecutive truncations differ by one term") {
  const AsymptoticImage c2 = alien_C2(6);
  for (long n = 12; n <= 30; n += 6) {
    for (long r = 1; r < 6; ++r) {
      const Rational diff = expansion_sum(c2, n, r + 1) - expansion_sum(c2, n, r);
      CHECK(diff == c2.series[static_cast<std::size_t>(r)] * Rational(gamma_scale(n, r)));
    }
  }
}

// At n = 20 the six-term remainder is still about 2.3 times the first
// omitted term; the ratio drifts toward 1 as n grows.
TEST_CASE("six-term remainder against the first omitted term") {
  const AsymptoticImage c2 = alien_C2(6);
  const Rational e2 = reference(kEMinus2);
  const PowerSeries exact = series_C2(40);
  Rational previous(1000);
  for (long n = 20; n <= 40; n += 5) {
    const Rational gap = (exact[static_cast<std::size_t>(n)] - estimate(c2, n, 6, 30).value()).abs();
    const Rational next = c2.series[6].abs() * Rational(gamma_scale(n, 6)) * e2;
    const Rational ratio = gap / next;
    CHECK(ratio <= Rational(10));
    if (n >= 25) CHECK(ratio < previous);
    previous = ratio;
  }
}

TEST_CASE("error table") {
  const AsymptoticImage c2 = alien_C2(6);
  const PowerSeries exact = series_C2(30);
  const auto rows = error_table(c2, exact, 30, 30, 1, 6, 20);
  REQUIRE(rows.size() == 6);
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].rel_error.value() < rows[i - 1].rel_error.value());
  const auto band = error_table(c2, exact, 15, 30, 3, 3, 20);
  Rational worst;
  for (const auto& r : band) worst = std::max(worst, r.norm_error.value());
  CHECK(worst < Rational(100));
  CHECK_THROWS_AS(error_table(c2, exact, 20, 31, 1, 1, 10), PreconditionError);
}

TEST_CASE("connected diagrams are asymptotically e^-1 of all") {
  const AsymptoticImage c = alien_C(3);
  const auto rows = error_table(c, series_C(25), 25, 25, 1, 1, 10);
  CHECK(rows[0].rel_error.value() < Rational(1, 10));
}

TEST_CASE("probability of 2-connectivity") {
  const ProbabilityCheck p6 = probability_check(6, 20);
  CHECK(p6.ratio == Rational(729, 10395));
  CHECK(p6.ratio_decimal.to_string().rfind("0.070129", 0) == 0);
  Rational previous_gap = Rational(1);
  const Rational e2 = reference(kEMinus2);
  for (long n = 20; n <= 40; ++n) {
    const ProbabilityCheck p = probability_check(n, 20);
    CHECK(p.deviation_n2.value().abs() < Rational(1));
    const Rational gap = (e2 - p.ratio).abs();
    CHECK(gap < previous_gap);
    previous_gap = gap;
  }
}
