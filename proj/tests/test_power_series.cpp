#include <doctest.h>

#include <random>

#include "chordgf/error.hpp"
#include "chordgf/generating_functions.hpp"
#include "chordgf/power_series.hpp"
#include "oracles.hpp"

using namespace chordgf;

namespace {

PowerSeries series_of(std::initializer_list<long> c) { return PowerSeries(c, c.size() - 1); }

bool all_canonical(const PowerSeries& f) {
  for (const Rational& c : f.coefficients()) {
    if (!c.is_canonical()) return false;
  }
  return true;
}

// Random f with f_0 = 0 and f_1 = 1.
PowerSeries random_tangent(std::mt19937& rng, std::size_t order) {
  std::vector<Rational> c{Rational(0), Rational(1)};
  for (std::size_t k = 2; k <= order; ++k) c.push_back(oracle::random_rational(rng, 5));
  return PowerSeries(std::move(c));
}

}  // namespace

TEST_CASE("truncation follows the shorter operand") {
  const PowerSeries f = series_of({1, 2, 3, 4});
  const PowerSeries g = series_of({1, 1});
  CHECK((f + g).order() == 1);
  CHECK((f * g).order() == 1);
  CHECK(f.truncate(2) == series_of({1, 2, 3}));
  CHECK_THROWS_AS(f[4], PreconditionError);
}

TEST_CASE("basic examples") {
  CHECK(PowerSeries::x(2) + PowerSeries::monomial(2, 1, 2) == series_of({0, 1, 1}));
  const PowerSeries geometric = series_of({1, 1, 1, 1, 1});
  CHECK(series_of({1, -1, 0, 0, 0}) * geometric == PowerSeries::one(4));
  CHECK(derivative(series_of({0, 0, 1})) == series_of({0, 2}));
  CHECK(divide_by_x_pow(series_of({0, 0, 1, 1}), 2) == series_of({1, 1}));
  CHECK_THROWS_WITH_AS(divide_by_x_pow(series_of({1, 1}), 1), doctest::Contains("not divisible by x^1"),
                       PreconditionError);
  CHECK(pow_rational(series_of({1, 1, 0, 0}), 2) == series_of({1, 2, 1, 0}));
  CHECK_THROWS_AS(derivative(PowerSeries::one(0)), PreconditionError);
}

TEST_CASE("connected series against published values") {
  const PowerSeries c = series_C(7).truncate(6);
  const PowerSeries c2 = series_C2(6);
  CHECK(c - c2 == series_of({0, 1, 0, 3, 20, 185, 2101}));
  CHECK(divide_by_x_pow(series_C(7) * series_C(7), 1) == series_of({0, 1, 2, 9, 62, 566, 6372}));
  // derivative of C, termwise
  CHECK(derivative(series_C(5)) == series_of({1, 2, 12, 108, 1240}));
}

TEST_CASE("composition and reversion") {
  const PowerSeries f = series_of({3, 1, 4, 1, 5});
  CHECK(compose(f, PowerSeries::x(4)) == f);
  CHECK_THROWS_AS(compose(f, series_of({1, 1, 0, 0, 0})), PreconditionError);
  CHECK(reverse(PowerSeries::x(5)) == PowerSeries::x(5));
  CHECK_THROWS_WITH_AS(reverse(series_of({0, 0, 1})), doctest::Contains("not reversible"), PreconditionError);
  CHECK_THROWS_AS(reverse(series_of({1, 1, 1})), PreconditionError);

  const PowerSeries t = series_t(12);
  CHECK(compose(t, reverse(t)) == PowerSeries::x(12));
  CHECK(compose(t - series_C(12), reverse(t)).truncate(6) == series_of({0, 0, 1, 1, 7, 63, 729}));
}

TEST_CASE("reciprocal, exp and log") {
  CHECK(reciprocal(PowerSeries::one(6) - divide_by_x_pow(series_C2(7), 1)) == series_of({1, 1, 2, 10, 82, 898, 12018}));
  CHECK_THROWS_AS(reciprocal(PowerSeries::x(3)), PreconditionError);
  CHECK_THROWS_AS(exp_series(PowerSeries::one(3)), PreconditionError);
  CHECK_THROWS_AS(log_series(series_of({2, 1})), PreconditionError);
  CHECK_THROWS_AS(pow_rational(series_of({2, 1}), Rational(1, 2)), PreconditionError);
  const PowerSeries e = exp_series(PowerSeries::x(4));
  CHECK(e == PowerSeries({Rational(1), Rational(1), Rational(1, 2), Rational(1, 6), Rational(1, 24)}));
  const PowerSeries half = pow_rational(series_of({1, 1, 0, 0, 0, 0}), Rational(1, 2));
  CHECK(half * half == series_of({1, 1, 0, 0, 0, 0}));
}

TEST_CASE("ring axioms on random series") {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t order = 1 + trial % 9;
    const PowerSeries a = oracle::random_series(rng, order);
    const PowerSeries b = oracle::random_series(rng, order);
    const PowerSeries c = oracle::random_series(rng, order);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + PowerSeries::zero(order) == a);
    CHECK(a * PowerSeries::one(order) == a);
    CHECK(all_canonical(a * b + c));
  }
}

TEST_CASE("derivative is a derivation") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t order = 2 + trial % 10;
    const PowerSeries f = oracle::random_series(rng, order);
    const PowerSeries g = oracle::random_series(rng, order);
    CHECK(derivative(f * g) == derivative(f) * g.truncate(order - 1) + f.truncate(order - 1) * derivative(g));
  }
}

TEST_CASE("reversion round trips") {
  std::mt19937 rng(1234);
  for (std::size_t order : {1u, 2u, 5u, 11u, 18u, 25u}) {
    const PowerSeries f = random_tangent(rng, order);
    const PowerSeries g = reverse(f);
    CHECK(compose(f, g) == PowerSeries::x(order));
    CHECK(compose(g, f) == PowerSeries::x(order));
    CHECK(all_canonical(g));
  }
}

TEST_CASE("exp inverts log") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t order = 1 + trial % 12;
    std::vector<Rational> c{Rational(0)};
    for (std::size_t k = 1; k <= order; ++k) c.push_back(oracle::random_rational(rng));
    const PowerSeries g(std::move(c));
    const PowerSeries one_plus_g = PowerSeries::one(order) + g;
    CHECK(exp_series(log_series(one_plus_g)) == one_plus_g);
    CHECK(log_series(exp_series(g)) == g);
  }
}
