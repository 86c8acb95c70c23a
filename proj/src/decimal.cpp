#include "chordgf/decimal.hpp"

#include <algorithm>

#include "chordgf/error.hpp"

namespace chordgf {

mpz_class pow10(int exponent) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(exponent));
  return r;
}

namespace {

mpz_class floor_div(const mpz_class& a, const mpz_class& b) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

mpz_class ceil_div(const mpz_class& a, const mpz_class& b) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

void require_digits(int digits) {
  if (digits < 1) throw PreconditionError("digits must be >= 1");
}

}  // namespace

HighPrecisionDecimal::HighPrecisionDecimal(mpz_class scaled, int digits, mpz_class error_ulps)
    : scaled_(std::move(scaled)), digits_(digits), error_(std::move(error_ulps)) {
  require_digits(digits);
}

HighPrecisionDecimal HighPrecisionDecimal::from_rational(const Rational& r, int digits) {
  require_digits(digits);
  const mpz_class scaled = floor_div(r.numerator() * pow10(digits + kGuardDigits), r.denominator());
  return HighPrecisionDecimal(scaled, digits, 1);
}

Rational HighPrecisionDecimal::value() const { return Rational(scaled_, pow10(precision())); }

Rational HighPrecisionDecimal::error_bound() const { return Rational(error_, pow10(precision())); }

std::string HighPrecisionDecimal::to_string() const {
  // Round half away from zero to `digits` fractional places.
  const mpz_class unit = pow10(kGuardDigits);
  mpz_class mag = abs(scaled_);
  mpz_class rounded = floor_div(mag + unit / 2, unit);
  std::string body = rounded.get_str();
  if (static_cast<int>(body.size()) <= digits_) body.insert(0, static_cast<std::size_t>(digits_ + 1) - body.size(), '0');
  body.insert(body.size() - static_cast<std::size_t>(digits_), ".");
  const bool negative = sgn(scaled_) < 0 && rounded != 0;
  return negative ? "-" + body : body;
}

double HighPrecisionDecimal::to_double() const { return value().to_double(); }

HighPrecisionDecimal HighPrecisionDecimal::operator*(const HighPrecisionDecimal& o) const {
  if (o.digits_ != digits_) throw PreconditionError("decimal precision mismatch");
  const mpz_class unit = pow10(precision());
  const mpz_class product = floor_div(scaled_ * o.scaled_, unit);
  const mpz_class err = ceil_div(abs(scaled_) * o.error_ + abs(o.scaled_) * error_ + error_ * o.error_, unit) + 1;
  return HighPrecisionDecimal(product, digits_, err);
}

HighPrecisionDecimal HighPrecisionDecimal::operator+(const HighPrecisionDecimal& o) const {
  if (o.digits_ != digits_) throw PreconditionError("decimal precision mismatch");
  return HighPrecisionDecimal(scaled_ + o.scaled_, digits_, error_ + o.error_);
}

HighPrecisionDecimal HighPrecisionDecimal::operator-(const HighPrecisionDecimal& o) const {
  if (o.digits_ != digits_) throw PreconditionError("decimal precision mismatch");
  return HighPrecisionDecimal(scaled_ - o.scaled_, digits_, error_ + o.error_);
}

HighPrecisionDecimal HighPrecisionDecimal::times(const Rational& q) const {
  const mpz_class num = q.numerator();
  const mpz_class den = q.denominator();
  const mpz_class product = floor_div(scaled_ * num, den);
  const mpz_class err = ceil_div(error_ * abs(num), den) + 1;
  return HighPrecisionDecimal(product, digits_, err);
}

HighPrecisionDecimal HighPrecisionDecimal::inverse() const {
  const mpz_class mag = abs(scaled_);
  if (mag <= error_) throw PreconditionError("cannot invert a decimal that may be zero");
  const mpz_class unit2 = pow10(2 * precision());
  const mpz_class inv = floor_div(unit2, scaled_);
  // |1/a - 1/b| <= e / (|a| (|a| - e)) in scaled units.
  const mpz_class err = ceil_div(unit2 * error_, mag * (mag - error_)) + 1;
  return HighPrecisionDecimal(inv, digits_, err);
}

HighPrecisionDecimal const_e(int digits) {
  require_digits(digits);
  const int p = digits + HighPrecisionDecimal::kGuardDigits;
  mpz_class term = pow10(p);
  mpz_class sum = term;
  unsigned long k = 1;
  while (term > 0) {
    term /= k;  // each step truncates by less than one ulp
    sum += term;
    ++k;
  }
  // k truncations plus a tail below one ulp.
  return HighPrecisionDecimal(sum, digits, mpz_class(k + 2));
}

namespace {

// atan(1/m) * 10^p and an error bound in ulps.
std::pair<mpz_class, unsigned long> atan_inverse(unsigned long m, int p) {
  const mpz_class m_sq = m * m;
  mpz_class power = pow10(p) / m;
  mpz_class sum = power;
  unsigned long n = 1;
  unsigned long terms = 1;
  while (power > 0) {
    power /= m_sq;
    const mpz_class term = power / (2 * n + 1);
    if (n % 2 == 1) {
      sum -= term;
    } else {
      sum += term;
    }
    ++n;
    ++terms;
  }
  // Two truncations per term; the alternating tail is below one ulp.
  return {sum, 2 * terms + 1};
}

}  // namespace

HighPrecisionDecimal const_pi(int digits) {
  require_digits(digits);
  const int p = digits + HighPrecisionDecimal::kGuardDigits;
  auto [a5, e5] = atan_inverse(5, p);
  auto [a239, e239] = atan_inverse(239, p);
  return HighPrecisionDecimal(16 * a5 - 4 * a239, digits, mpz_class(16 * e5 + 4 * e239));
}

HighPrecisionDecimal const_sqrt_two_pi(int digits) {
  require_digits(digits);
  const HighPrecisionDecimal pi = const_pi(digits);
  const mpz_class two_pi = 2 * pi.scaled();
  mpz_class root;
  const mpz_class radicand = two_pi * pow10(pi.precision());
  mpz_sqrt(root.get_mpz_t(), radicand.get_mpz_t());
  // d sqrt(v) <= dv / (2 sqrt(v)) and sqrt(2 pi) > 2, so the propagated
  // error is at most a quarter of 2 * pi's, plus one for the floor.
  const mpz_class err = ceil_div(2 * pi.error_ulps(), 4) + 1;
  return HighPrecisionDecimal(root, digits, err);
}

HighPrecisionDecimal exp_rational(const Rational& q, int digits) {
  require_digits(digits);
  const Rational mag = q.abs();
  // Extra working digits absorb the growth of e^|q| before inversion.
  const int extra = static_cast<int>(mag.to_double() / 2.3) + 2;
  const int work_digits = digits + extra;
  const int p = work_digits + HighPrecisionDecimal::kGuardDigits;
  const mpz_class num = mag.numerator();
  const mpz_class den = mag.denominator();

  mpz_class term = pow10(p);
  mpz_class term_err = 0;
  mpz_class sum = term;
  mpz_class sum_err = 0;
  for (unsigned long k = 1;; ++k) {
    term_err = ceil_div(term_err * num, den * k) + 1;
    term = floor_div(term * num, den * k);
    sum += term;
    sum_err += term_err;
    // Once k + 1 >= 2|q| the remaining terms shrink at least geometrically
    // by 1/2, so the tail is at most the current term.
    if (Rational(static_cast<long>(k + 1)) >= mag * Rational(2) && term <= 1) {
      sum_err += term + 1;
      break;
    }
  }
  HighPrecisionDecimal wide(sum, work_digits, sum_err);
  if (q.sign() < 0) wide = wide.inverse();
  // Drop the extra digits, rounding down.
  const mpz_class unit = pow10(extra);
  return HighPrecisionDecimal(floor_div(wide.scaled(), unit), digits, ceil_div(wide.error_ulps(), unit) + 1);
}

}  // namespace chordgf
