#include "chordgf/power_series.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "chordgf/error.hpp"

namespace chordgf {

PowerSeries::PowerSeries(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  if (coeffs_.empty()) throw PreconditionError("power series needs at least one coefficient");
}

PowerSeries::PowerSeries(std::initializer_list<long> coefficients, std::size_t order)
    : coeffs_(order + 1) {
  std::size_t k = 0;
  for (long c : coefficients) {
    if (k > order) break;
    coeffs_[k++] = Rational(c);
  }
}

PowerSeries PowerSeries::zero(std::size_t order) { return PowerSeries(std::vector<Rational>(order + 1)); }

PowerSeries PowerSeries::constant(const Rational& c, std::size_t order) {
  std::vector<Rational> v(order + 1);
  v[0] = c;
  return PowerSeries(std::move(v));
}

PowerSeries PowerSeries::x(std::size_t order) {
  if (order < 1) throw PreconditionError("the series x needs order >= 1");
  return monomial(1, 1, order);
}

PowerSeries PowerSeries::monomial(std::size_t power, const Rational& c, std::size_t order) {
  std::vector<Rational> v(order + 1);
  if (power <= order) v[power] = c;
  return PowerSeries(std::move(v));
}

const Rational& PowerSeries::operator[](std::size_t k) const {
  if (k >= coeffs_.size()) {
    throw PreconditionError("coefficient " + std::to_string(k) + " beyond truncation order " +
                            std::to_string(order()));
  }
  return coeffs_[k];
}

PowerSeries PowerSeries::truncate(std::size_t new_order) const {
  if (new_order > order()) {
    throw PreconditionError("cannot extend a series of order " + std::to_string(order()) +
                            " to order " + std::to_string(new_order));
  }
  return PowerSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + new_order + 1));
}

bool PowerSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.is_zero(); });
}

std::size_t PowerSeries::valuation() const {
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (!coeffs_[k].is_zero()) return k;
  }
  return coeffs_.size();
}

std::string PowerSeries::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const PowerSeries& f) {
  os << '[';
  for (std::size_t k = 0; k <= f.order(); ++k) {
    if (k) os << ", ";
    os << f[k];
  }
  return os << "] + O(x^" << f.order() + 1 << ')';
}

PowerSeries add(const PowerSeries& f, const PowerSeries& g) {
  const std::size_t n = std::min(f.order(), g.order());
  std::vector<Rational> out(n + 1);
  for (std::size_t k = 0; k <= n; ++k) out[k] = f[k] + g[k];
  return PowerSeries(std::move(out));
}

PowerSeries sub(const PowerSeries& f, const PowerSeries& g) {
  const std::size_t n = std::min(f.order(), g.order());
  std::vector<Rational> out(n + 1);
  for (std::size_t k = 0; k <= n; ++k) out[k] = f[k] - g[k];
  return PowerSeries(std::move(out));
}

PowerSeries neg(const PowerSeries& f) { return scale(f, -1); }

PowerSeries scale(const PowerSeries& f, const Rational& c) {
  std::vector<Rational> out(f.order() + 1);
  for (std::size_t k = 0; k <= f.order(); ++k) out[k] = f[k] * c;
  return PowerSeries(std::move(out));
}

PowerSeries mul(const PowerSeries& f, const PowerSeries& g) {
  const std::size_t n = std::min(f.order(), g.order());
  const std::size_t fv = f.valuation();
  const std::size_t gv = g.valuation();
  std::vector<Rational> out(n + 1);
  mpq_class acc;
  mpq_class term;
  for (std::size_t k = fv + gv; k <= n; ++k) {
    acc = 0;
    for (std::size_t i = fv; i + gv <= k; ++i) {
      const mpq_class& a = f[i].raw();
      if (sgn(a) == 0) continue;
      const mpq_class& b = g[k - i].raw();
      if (sgn(b) == 0) continue;
      term = a * b;
      acc += term;
    }
    out[k] = Rational::from_canonical(acc);
  }
  return PowerSeries(std::move(out));
}

PowerSeries derivative(const PowerSeries& f) {
  if (f.order() < 1) throw PreconditionError("derivative of an order-0 series is not representable");
  std::vector<Rational> out(f.order());
  for (std::size_t k = 1; k <= f.order(); ++k) out[k - 1] = f[k] * Rational(static_cast<long>(k));
  return PowerSeries(std::move(out));
}

PowerSeries mul_by_x_pow(const PowerSeries& f, std::size_t k) {
  std::vector<Rational> out(f.order() + k + 1);
  for (std::size_t i = 0; i <= f.order(); ++i) out[i + k] = f[i];
  return PowerSeries(std::move(out));
}

PowerSeries divide_by_x_pow(const PowerSeries& f, std::size_t k) {
  if (k > f.order()) {
    throw PreconditionError("not divisible by x^" + std::to_string(k) + ": series of order " +
                            std::to_string(f.order()) + " is too short");
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (!f[i].is_zero()) {
      throw PreconditionError("not divisible by x^" + std::to_string(k) + ": coefficient " +
                              std::to_string(i) + " is " + f[i].to_string());
    }
  }
  return PowerSeries(std::vector<Rational>(f.coefficients().begin() + static_cast<std::ptrdiff_t>(k),
                                           f.coefficients().end()));
}

PowerSeries compose(const PowerSeries& f, const PowerSeries& g) {
  if (!g[0].is_zero()) throw PreconditionError("compose: inner series has nonzero constant term");
  const std::size_t n = std::min(f.order(), g.order());
  const PowerSeries inner = g.truncate(n);
  // Horner: f_0 + g (f_1 + g (f_2 + ...)).
  PowerSeries acc = PowerSeries::constant(f[n], n);
  for (std::size_t k = n; k-- > 0;) {
    acc = add(mul(acc, inner), PowerSeries::constant(f[k], n));
  }
  return acc;
}

PowerSeries reverse(const PowerSeries& f) {
  if (f.order() < 1 || !f[0].is_zero() || f[1].is_zero()) {
    throw PreconditionError("not reversible: need c0 = 0 and c1 != 0");
  }
  // Order-by-order solve of f(g(x)) = x. powers[j][k] = [x^k] g^j; the
  // unknown g_k only enters [x^k] f(g) through the linear term f_1 g_k.
  const std::size_t n = f.order();
  std::vector<std::vector<mpq_class>> powers(n + 1, std::vector<mpq_class>(n + 1));
  const mpq_class inv_f1 = mpq_class(1) / f[1].raw();
  powers[1][1] = inv_f1;
  mpq_class acc;
  for (std::size_t k = 2; k <= n; ++k) {
    acc = 0;
    for (std::size_t j = 2; j <= k; ++j) {
      // [x^k] g^j = sum_{i=1}^{k-j+1} g_i [x^{k-i}] g^{j-1}
      mpq_class& cell = powers[j][k];
      cell = 0;
      for (std::size_t i = 1; i + (j - 1) <= k; ++i) {
        if (sgn(powers[1][i]) == 0 || sgn(powers[j - 1][k - i]) == 0) continue;
        cell += powers[1][i] * powers[j - 1][k - i];
      }
      if (sgn(cell) != 0 && !f[j].is_zero()) acc += f[j].raw() * cell;
    }
    powers[1][k] = -acc * inv_f1;
  }
  std::vector<Rational> out(n + 1);
  for (std::size_t k = 1; k <= n; ++k) out[k] = Rational::from_canonical(powers[1][k]);
  return PowerSeries(std::move(out));
}

PowerSeries reciprocal(const PowerSeries& f) {
  if (f[0].is_zero()) throw PreconditionError("reciprocal: constant term is zero");
  const std::size_t n = f.order();
  std::vector<mpq_class> b(n + 1);
  const mpq_class inv = mpq_class(1) / f[0].raw();
  b[0] = inv;
  mpq_class acc;
  for (std::size_t k = 1; k <= n; ++k) {
    acc = 0;
    for (std::size_t i = 1; i <= k; ++i) {
      if (sgn(f[i].raw()) == 0) continue;
      acc += f[i].raw() * b[k - i];
    }
    b[k] = -acc * inv;
  }
  std::vector<Rational> out(n + 1);
  for (std::size_t k = 0; k <= n; ++k) out[k] = Rational::from_canonical(b[k]);
  return PowerSeries(std::move(out));
}

PowerSeries exp_series(const PowerSeries& f) {
  if (!f[0].is_zero()) throw PreconditionError("exp_series: constant term must be zero");
  // E' = f' E  =>  k e_k = sum_{j=1}^k j f_j e_{k-j}
  const std::size_t n = f.order();
  std::vector<mpq_class> e(n + 1);
  e[0] = 1;
  mpq_class acc;
  for (std::size_t k = 1; k <= n; ++k) {
    acc = 0;
    for (std::size_t j = 1; j <= k; ++j) {
      if (sgn(f[j].raw()) == 0) continue;
      acc += static_cast<unsigned long>(j) * f[j].raw() * e[k - j];
    }
    e[k] = acc / static_cast<unsigned long>(k);
  }
  std::vector<Rational> out(n + 1);
  for (std::size_t k = 0; k <= n; ++k) out[k] = Rational::from_canonical(e[k]);
  return PowerSeries(std::move(out));
}

PowerSeries log_series(const PowerSeries& f) {
  if (f[0] != Rational(1)) throw PreconditionError("log_series: constant term must be 1");
  // L' f = f'  =>  k L_k = k f_k - sum_{j=1}^{k-1} j L_j f_{k-j}
  const std::size_t n = f.order();
  std::vector<mpq_class> l(n + 1);
  mpq_class acc;
  for (std::size_t k = 1; k <= n; ++k) {
    acc = static_cast<unsigned long>(k) * f[k].raw();
    for (std::size_t j = 1; j < k; ++j) {
      if (sgn(f[k - j].raw()) == 0) continue;
      acc -= static_cast<unsigned long>(j) * l[j] * f[k - j].raw();
    }
    l[k] = acc / static_cast<unsigned long>(k);
  }
  std::vector<Rational> out(n + 1);
  for (std::size_t k = 1; k <= n; ++k) out[k] = Rational::from_canonical(l[k]);
  return PowerSeries(std::move(out));
}

PowerSeries pow_rational(const PowerSeries& f, const Rational& q) {
  if (f[0] != Rational(1)) throw PreconditionError("pow_rational: constant term must be 1");
  // P' f = q f' P  =>  k p_k = sum_{j=1}^k ((q+1) j - k) f_j p_{k-j}
  const std::size_t n = f.order();
  std::vector<mpq_class> p(n + 1);
  p[0] = 1;
  const mpq_class q1 = q.raw() + 1;
  mpq_class acc;
  mpq_class weight;
  for (std::size_t k = 1; k <= n; ++k) {
    acc = 0;
    for (std::size_t j = 1; j <= k; ++j) {
      if (sgn(f[j].raw()) == 0) continue;
      weight = q1 * static_cast<unsigned long>(j);
      weight -= static_cast<unsigned long>(k);
      acc += weight * f[j].raw() * p[k - j];
    }
    p[k] = acc / static_cast<unsigned long>(k);
  }
  std::vector<Rational> out(n + 1);
  for (std::size_t k = 0; k <= n; ++k) out[k] = Rational::from_canonical(p[k]);
  return PowerSeries(std::move(out));
}

}  // namespace chordgf
