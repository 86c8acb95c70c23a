#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "chordgf/rational.hpp"

namespace chordgf {

/// Truncated formal power series c_0 + c_1 x + ... + c_N x^N + O(x^{N+1})
/// with exact rational coefficients. The truncation order N is part of the
/// value: two series are equal only if their orders and coefficients agree.
///
/// Values are immutable. Binary operations return a result truncated at the
/// smaller of the two input orders; nothing is ever padded with zeros.
class PowerSeries {
 public:
  /// coefficients.size() must be >= 1; the order is size() - 1.
  explicit PowerSeries(std::vector<Rational> coefficients);
  PowerSeries(std::initializer_list<long> coefficients, std::size_t order);

  static PowerSeries zero(std::size_t order);
  static PowerSeries constant(const Rational& c, std::size_t order);
  static PowerSeries one(std::size_t order) { return constant(1, order); }
  /// The identity series x (order >= 1).
  static PowerSeries x(std::size_t order);
  static PowerSeries monomial(std::size_t power, const Rational& c, std::size_t order);

  std::size_t order() const { return coeffs_.size() - 1; }
  const Rational& operator[](std::size_t k) const;
  std::span<const Rational> coefficients() const { return coeffs_; }

  /// Drops terms above new_order (new_order <= order()).
  PowerSeries truncate(std::size_t new_order) const;
  bool is_zero() const;
  /// Index of the first nonzero coefficient, or order()+1 if all vanish.
  std::size_t valuation() const;

  std::string to_string() const;

  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

 private:
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const PowerSeries& f);

PowerSeries add(const PowerSeries& f, const PowerSeries& g);
PowerSeries sub(const PowerSeries& f, const PowerSeries& g);
PowerSeries neg(const PowerSeries& f);
PowerSeries scale(const PowerSeries& f, const Rational& c);
/// Cauchy product truncated to min(f.order, g.order).
PowerSeries mul(const PowerSeries& f, const PowerSeries& g);

inline PowerSeries operator+(const PowerSeries& f, const PowerSeries& g) { return add(f, g); }
inline PowerSeries operator-(const PowerSeries& f, const PowerSeries& g) { return sub(f, g); }
inline PowerSeries operator-(const PowerSeries& f) { return neg(f); }
inline PowerSeries operator*(const PowerSeries& f, const PowerSeries& g) { return mul(f, g); }
inline PowerSeries operator*(const Rational& c, const PowerSeries& f) { return scale(f, c); }

/// Termwise derivative; the result has order f.order - 1. Requires order >= 1.
PowerSeries derivative(const PowerSeries& f);

/// x^k f; known to order f.order + k.
PowerSeries mul_by_x_pow(const PowerSeries& f, std::size_t k);
/// f / x^k; requires c_0 = ... = c_{k-1} = 0 exactly and k <= order.
PowerSeries divide_by_x_pow(const PowerSeries& f, std::size_t k);

/// f(g(x)) by Horner evaluation; requires g.c_0 = 0.
PowerSeries compose(const PowerSeries& f, const PowerSeries& g);

/// Compositional inverse: g with f(g(x)) = g(f(x)) = x to f.order.
/// Requires f.c_0 = 0 and f.c_1 != 0.
PowerSeries reverse(const PowerSeries& f);

/// 1/f; requires f.c_0 != 0.
PowerSeries reciprocal(const PowerSeries& f);
/// exp(f); requires f.c_0 = 0.
PowerSeries exp_series(const PowerSeries& f);
/// log(f); requires f.c_0 = 1.
PowerSeries log_series(const PowerSeries& f);
/// f^q for rational q; requires f.c_0 = 1. Equal to exp(q log f).
PowerSeries pow_rational(const PowerSeries& f, const Rational& q);

}  // namespace chordgf
