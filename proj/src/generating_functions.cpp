#include "chordgf/generating_functions.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "chordgf/error.hpp"

namespace chordgf {

namespace {

// Every family is truncation-consistent, so one cached series per family
// at the largest order computed so far serves all smaller requests.
class SeriesCache {
 public:
  template <class Build>
  PowerSeries get(const std::string& family, std::size_t order, Build build) {
    {
      std::lock_guard<std::mutex> lock(mutex_);
      auto it = cache_.find(family);
      if (it != cache_.end() && it->second.order() >= order) return it->second.truncate(order);
    }
    PowerSeries fresh = build(order);
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = cache_.find(family);
    if (it == cache_.end() || it->second.order() < fresh.order()) cache_.insert_or_assign(family, fresh);
    return fresh;
  }

 private:
  std::mutex mutex_;
  std::map<std::string, PowerSeries> cache_;
};

SeriesCache& cache() {
  static SeriesCache instance;
  return instance;
}

PowerSeries build_C(std::size_t order) {
  // Coefficient n of 2x C C' = C + C^2 - x gives
  // C_n = (n - 1) * sum_{a=1}^{n-1} C_a C_{n-a}.
  std::vector<mpq_class> c(order + 1, 0);
  c[1] = 1;
  for (std::size_t n = 2; n <= order; ++n) {
    mpz_class s = 0;
    for (std::size_t a = 1; a < n; ++a) s += c[a].get_num() * c[n - a].get_num();
    c[n] = mpq_class(s * static_cast<unsigned long>(n - 1));
  }
  std::vector<Rational> out;
  out.reserve(order + 1);
  for (auto& v : c) out.push_back(Rational::from_canonical(std::move(v)));
  return PowerSeries(std::move(out));
}

PowerSeries build_C2(std::size_t order) {
  const PowerSeries t = series_t(order);
  const PowerSeries c = series_C(order);
  return compose(t - c, reverse(t));
}

}  // namespace

PowerSeries series_D(std::size_t order) {
  std::vector<Rational> out;
  out.reserve(order + 1);
  mpz_class df = 1;
  out.emplace_back(df);
  for (std::size_t n = 1; n <= order; ++n) {
    df *= static_cast<unsigned long>(2 * n - 1);
    out.emplace_back(df);
  }
  return PowerSeries(std::move(out));
}

PowerSeries series_C(std::size_t order) {
  if (order < 1) throw PreconditionError("series_C needs order >= 1");
  return cache().get("C", order, build_C);
}

PowerSeries series_t(std::size_t order) {
  const PowerSeries c = series_C(order + 1);
  return divide_by_x_pow(c * c, 1);
}

PowerSeries series_C2(std::size_t order) {
  if (order < 2) throw PreconditionError("series_C2 needs order >= 2");
  return cache().get("C2", order, build_C2);
}

PowerSeries series_C1(std::size_t order) {
  if (order < 1) throw PreconditionError("series_C1 needs order >= 1");
  return series_C(order) - series_C2(std::max<std::size_t>(order, 2)).truncate(order);
}

PowerSeries series_S(std::size_t order) {
  if (order < 1) throw PreconditionError("series_S needs order >= 1");
  const PowerSeries c2 = series_C2(order + 1);
  return reciprocal(PowerSeries::one(order) - divide_by_x_pow(c2, 1));
}

PowerSeries series_by_name(const std::string& family, std::size_t order) {
  if (family == "D") return series_D(order);
  if (family == "C") return series_C(order);
  if (family == "C1") return series_C1(order);
  if (family == "C2") return series_C2(order);
  if (family == "S") return series_S(order);
  throw PreconditionError("unknown series family '" + family + "' (expected D, C, C1, C2 or S)");
}

PowerSeries lemma_composition_residual(std::size_t order) {
  const PowerSeries d = series_D(order);
  const PowerSeries inner = mul_by_x_pow(d * d, 1).truncate(order);
  return d - PowerSeries::one(order) - compose(series_C(order), inner);
}

PowerSeries lemma_linear_residual(std::size_t order) {
  const PowerSeries d = series_D(order);
  return d - PowerSeries::one(order) - mul_by_x_pow(d, 1) -
         scale(mul_by_x_pow(derivative(d), 2), 2);
}

PowerSeries lemma_ode_residual(std::size_t order) {
  const PowerSeries c = series_C(order);
  const PowerSeries lhs = scale(mul_by_x_pow(c * derivative(c), 1), 2);
  return lhs - c * (PowerSeries::one(order) + c) + PowerSeries::x(order);
}

PowerSeries derivative_identity_residual(const PowerSeries& c, const PowerSeries& c2) {
  const std::size_t m = std::min(c.order(), c2.order());
  if (m < 3) throw PreconditionError("derivative identity needs series of order >= 3");
  const PowerSeries cm = c.truncate(m);
  const PowerSeries t = divide_by_x_pow(cm * cm, 1);
  const PowerSeries inner = PowerSeries::one(m - 1) - compose(derivative(c2.truncate(m)), t);
  const PowerSeries factor = divide_by_x_pow(cm - PowerSeries::x(m), 2);
  return derivative(cm) - factor * inner;
}

bool verify_derivative_identity(std::size_t order) {
  if (order < 3) throw PreconditionError("verify_derivative_identity needs order >= 3");
  return derivative_identity_residual(series_C(order + 1), series_C2(order + 1)).is_zero();
}

DecompositionSeries decomposition_series(std::size_t order) {
  const std::size_t m = order + 2;
  const PowerSeries c = series_C(m);
  const PowerSeries t = series_t(order);
  const PowerSeries ratio = compose(divide_by_x_pow(series_C2(m), 2), t);
  const PowerSeries c_sq = (c * c).truncate(order);
  const PowerSeries root_free = c_sq * ratio;
  const PowerSeries root_covered = divide_by_x_pow(c - PowerSeries::x(m), 1).truncate(order) * root_free;
  return {t, ratio, root_free, root_covered};
}

}  // namespace chordgf
