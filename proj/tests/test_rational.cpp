#include <doctest.h>

#include <random>

#include "chordgf/error.hpp"
#include "chordgf/rational.hpp"
#include "oracles.hpp"

using chordgf::Rational;

TEST_CASE("construction canonicalizes") {
  const Rational r(mpz_class(6), mpz_class(-4));
  CHECK(r.numerator() == -3);
  CHECK(r.denominator() == 2);
  CHECK(r.is_canonical());
  CHECK(Rational(mpz_class(0), mpz_class(-7)).to_string() == "0");
  CHECK(Rational().denominator() == 1);
}

TEST_CASE("zero denominator and division by zero throw") {
  CHECK_THROWS_AS(Rational(mpz_class(1), mpz_class(0)), chordgf::PreconditionError);
  CHECK_THROWS_AS(Rational(1) / Rational(0), chordgf::PreconditionError);
  CHECK_THROWS_AS(Rational(0).inverse(), chordgf::PreconditionError);
}

TEST_CASE("parse") {
  CHECK(Rational::parse("-196838/15") == Rational(mpz_class(-196838), mpz_class(15)));
  CHECK(Rational::parse("12/8").to_string() == "3/2");
  CHECK(Rational::parse("42") == Rational(42));
  CHECK_THROWS_AS(Rational::parse("1/"), chordgf::ParseError);
  CHECK_THROWS_AS(Rational::parse("x"), chordgf::ParseError);
  CHECK_THROWS_AS(Rational::parse("1/0"), chordgf::ParseError);
}

TEST_CASE("field operations stay canonical") {
  std::mt19937 rng(7);
  for (int i = 0; i < 500; ++i) {
    const Rational a = oracle::random_rational(rng, 50);
    const Rational b = oracle::random_rational(rng, 50);
    CHECK((a + b).is_canonical());
    CHECK((a * b).is_canonical());
    CHECK(a + b - b == a);
    if (!b.is_zero()) CHECK(a / b * b == a);
  }
}

TEST_CASE("ordering and powers") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(0));
  CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
  CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
  CHECK(Rational(-5, 7).abs() == Rational(5, 7));
}
