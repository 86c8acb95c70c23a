#pragma once

#include <string>

#include <gmpxx.h>

#include "chordgf/rational.hpp"

namespace chordgf {

/// Fixed-point decimal: value = scaled / 10^(digits + kGuardDigits), with a
/// worst-case error bound of error_ulps units in the last (guard) place.
/// `digits` is the number of fractional digits requested by the caller.
class HighPrecisionDecimal {
 public:
  static constexpr int kGuardDigits = 12;

  HighPrecisionDecimal(mpz_class scaled, int digits, mpz_class error_ulps);
  /// Nearest-below fixed-point value of r; error at most one ulp.
  static HighPrecisionDecimal from_rational(const Rational& r, int digits);

  int digits() const { return digits_; }
  int precision() const { return digits_ + kGuardDigits; }
  const mpz_class& scaled() const { return scaled_; }
  const mpz_class& error_ulps() const { return error_; }
  /// The represented value and its absolute error bound, exactly.
  Rational value() const;
  Rational error_bound() const;

  /// Rounded to `digits` fractional digits, e.g. "1406.857...".
  std::string to_string() const;
  double to_double() const;

  HighPrecisionDecimal operator*(const HighPrecisionDecimal& o) const;
  HighPrecisionDecimal operator+(const HighPrecisionDecimal& o) const;
  HighPrecisionDecimal operator-(const HighPrecisionDecimal& o) const;
  /// Exact rational multiple; the error bound scales by |q|.
  HighPrecisionDecimal times(const Rational& q) const;
  /// 1/value; requires the value to stay bounded away from zero.
  HighPrecisionDecimal inverse() const;

 private:
  mpz_class scaled_;
  int digits_;
  mpz_class error_;
};

mpz_class pow10(int exponent);

/// e by its Taylor series; each term truncated, tail bounded by the last term.
HighPrecisionDecimal const_e(int digits);
/// pi by Machin's formula 16 atan(1/5) - 4 atan(1/239).
HighPrecisionDecimal const_pi(int digits);
/// sqrt(2 pi) by integer square root of the scaled value.
HighPrecisionDecimal const_sqrt_two_pi(int digits);
/// e^q for rational q by Taylor series in |q| with a geometric tail bound.
HighPrecisionDecimal exp_rational(const Rational& q, int digits);

}  // namespace chordgf
