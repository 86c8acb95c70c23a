#include "chordgf/verify.hpp"

#include <algorithm>
#include <sstream>

#include "chordgf/alien.hpp"
#include "chordgf/census.hpp"
#include "chordgf/error.hpp"
#include "chordgf/generating_functions.hpp"
#include "chordgf/published.hpp"
#include "chordgf/qft.hpp"

namespace chordgf {

bool SuiteResult::passed() const { return first_failure() == nullptr; }

const CheckItem* SuiteResult::first_failure() const {
  for (const CheckItem& item : items) {
    if (!item.passed) return &item;
  }
  return nullptr;
}

std::vector<std::string> suite_names() { return {"lemmas", "proposition", "chain-rule", "tables", "bijection"}; }

std::uint64_t reason_criterion_mismatches(int n, int cap) {
  if (n > cap || n > kMaxEnumerationChords) throw ResourceError("chord count exceeds the enumeration cap");
  if (n < 2) return 0;
  const int blocks = enumeration_blocks(n);
  std::uint64_t bad = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : bad)
  for (int b = 0; b < blocks; ++b) {
    const EnumerationBlock blk = enumeration_block(n, b);
    for_each_diagram_in_block(n, blk.root_partner, blk.second_choice, [&](const ChordDiagram& d) {
      if (!is_connected(d)) return;
      if (find_reasons_connectivity1(d).empty() != is_k_connected(d, 2)) ++bad;
    });
  }
  return bad;
}

namespace {

CheckItem zero_check(std::string name, const PowerSeries& residual) {
  CheckItem item{std::move(name), residual.is_zero(), ""};
  if (!item.passed) item.detail = "first nonzero coefficient at x^" + std::to_string(residual.valuation());
  return item;
}

CheckItem list_check(std::string name, const PowerSeries& got, const std::vector<std::string>& want) {
  CheckItem item{std::move(name), true, ""};
  if (got.order() + 1 < want.size()) {
    item.passed = false;
    item.detail = "series too short";
    return item;
  }
  for (std::size_t k = 0; k < want.size(); ++k) {
    if (got[k] != Rational::parse(want[k])) {
      item.passed = false;
      item.detail = "x^" + std::to_string(k) + ": got " + got[k].to_string() + ", expected " + want[k];
      return item;
    }
  }
  return item;
}

CheckItem count_check(std::string name, std::uint64_t got, const Rational& want) {
  CheckItem item{std::move(name), Rational(mpz_class(std::to_string(got))) == want, ""};
  if (!item.passed) item.detail = "got " + std::to_string(got) + ", expected " + want.to_string();
  return item;
}

int exhaustive_limit(const VerifyOptions& o) { return std::min(o.order, o.max_chords); }

std::size_t series_order(const VerifyOptions& o) { return static_cast<std::size_t>(std::max(o.order, 3)); }

SuiteResult lemmas(const VerifyOptions& o) {
  SuiteResult r{"lemmas", {}};
  const std::size_t n = series_order(o);
  r.items.push_back(zero_check("D = 1 + C(x D^2)", lemma_composition_residual(n)));
  r.items.push_back(zero_check("D = 1 + x D + 2 x^2 D'", lemma_linear_residual(n)));
  r.items.push_back(zero_check("2x C C' = C(1 + C) - x", lemma_ode_residual(n)));
  r.items.push_back({"C' = (C - x)/x^2 [1 - C2'(C^2/x)]", verify_derivative_identity(n), ""});
  const PowerSeries d = series_D(n);
  const PowerSeries c = series_C(n);
  for (int k = 1; k <= exhaustive_limit(o); ++k) {
    r.items.push_back(count_check("all diagrams, n = " + std::to_string(k),
                                  census_parallel(k, DiagramClass::all(), o.max_chords), d[static_cast<std::size_t>(k)]));
    r.items.push_back(count_check("connected diagrams, n = " + std::to_string(k),
                                  census_parallel(k, DiagramClass::connected(), o.max_chords),
                                  c[static_cast<std::size_t>(k)]));
  }
  return r;
}

SuiteResult proposition(const VerifyOptions& o) {
  SuiteResult r{"proposition", {}};
  const std::size_t n = series_order(o);
  const PowerSeries c = series_C(n);
  const PowerSeries c2 = series_C2(n);
  const PowerSeries t = series_t(n);
  r.items.push_back(zero_check("C = C^2/x - C2(C^2/x)", c - (t - compose(c2, t))));
  const PowerSeries y = reverse(t);
  const PowerSeries x_minus_c2 = PowerSeries::x(n) - c2;
  r.items.push_back(zero_check("reverse(C^2/x) = (x - C2)^2/x", y - divide_by_x_pow(x_minus_c2 * x_minus_c2, 1)));
  const DecompositionSeries dec = decomposition_series(n);
  r.items.push_back(zero_check("x + root-free + root-covered = C",
                               PowerSeries::x(n) + dec.root_free + dec.root_covered - c));
  const PowerSeries c1 = series_C1(n);
  for (int k = 1; k <= exhaustive_limit(o); ++k) {
    const std::string tag = ", n = " + std::to_string(k);
    const std::uint64_t two = census_parallel(k, DiagramClass::k_connected(2), o.max_chords);
    r.items.push_back(count_check("2-connected diagrams" + tag, two, c2[static_cast<std::size_t>(k)]));
    const std::uint64_t conn = census_parallel(k, DiagramClass::connected(), o.max_chords);
    r.items.push_back(count_check("connectivity-1 diagrams" + tag, conn - two, c1[static_cast<std::size_t>(k)]));
    const CaseCensus cases = case_census_parallel(k, o.max_chords);
    r.items.push_back(count_check("single-chord case" + tag, cases.single_chord, Rational(k == 1 ? 1 : 0)));
    r.items.push_back(count_check("root-free case" + tag, cases.root_free, dec.root_free[static_cast<std::size_t>(k)]));
    r.items.push_back(
        count_check("root-covered case" + tag, cases.root_covered, dec.root_covered[static_cast<std::size_t>(k)]));
    r.items.push_back(count_check("decomposition round trip" + tag, round_trip_failures_parallel(k, o.max_chords), 0));
    r.items.push_back(count_check("no reason iff 2-connected" + tag, reason_criterion_mismatches(k, o.max_chords), 0));
  }
  return r;
}

SuiteResult chain_rule(const VerifyOptions& o) {
  SuiteResult r{"chain-rule", {}};
  const ChainReport report = verify_derivation_chain(static_cast<std::size_t>(std::max(o.order, 6)));
  for (const ChainStep& step : report.steps) r.items.push_back({step.name, step.passed, step.detail});
  const AsymptoticImage c2 = alien_C2(5);
  CheckItem prefactor{"image of C2 carries e^-2 / sqrt(2 pi)", c2.e_exp == Rational(-2) && c2.sqrt_two_pi_exp == -1, ""};
  if (!prefactor.passed) prefactor.detail = "e_exp " + c2.e_exp.to_string();
  r.items.push_back(prefactor);
  return r;
}

SuiteResult tables(const VerifyOptions& o) {
  SuiteResult r{"tables", {}};
  const std::size_t n = static_cast<std::size_t>(std::max(o.order, 7));
  r.items.push_back(list_check("C", series_C(n), published::kConnected));
  r.items.push_back(list_check("C1", series_C1(n), published::kConnectivityOne));
  r.items.push_back(list_check("C2", series_C2(n), published::kTwoConnected));
  r.items.push_back(list_check("S", series_S(n), published::kS));
  const DecompositionSeries dec = decomposition_series(n);
  const PowerSeries* rows1[] = {&dec.t_series, &dec.ratio, &dec.root_free, &dec.root_covered};
  for (std::size_t i = 0; i < published::kDecompositionTable.size(); ++i) {
    const auto& row = published::kDecompositionTable[i];
    r.items.push_back(list_check("decomposition table: " + row.label, *rows1[i], row.coefficients));
  }
  const AlienTableRows at = alien_table_rows(n);
  const PowerSeries* rows3[] = {&at.s, &at.s_plus_x_sq, &at.exponent, &at.c2_times_s, &at.x2_over_c2_s, &at.scaled_exp};
  for (std::size_t i = 0; i < published::kAlienTable.size(); ++i) {
    const auto& row = published::kAlienTable[i];
    r.items.push_back(list_check("alien table: " + row.label, *rows3[i], row.coefficients));
  }
  r.items.push_back(list_check("image of C2", alien_C2(n).series, published::kAlienC2));
  r.items.push_back(list_check("phi^3 partition function", partition_function(Action::phi3(), 2).reduced, published::kPhi3));
  return r;
}

SuiteResult bijection(const VerifyOptions& o) {
  SuiteResult r{"bijection", {}};
  const PowerSeries c2 = series_C2(static_cast<std::size_t>(std::max(o.max_chords, 2)));
  for (int k = 1; k <= exhaustive_limit(o); ++k) {
    const BijectionReport rep = verify_bijection(k, o.max_chords);
    CheckItem item{"primitive iff 2-connected, n = " + std::to_string(k), rep.passed(), ""};
    if (!item.passed) {
      item.detail = std::to_string(rep.mismatches) + " mismatches, " + std::to_string(rep.round_trip_failures) +
                    " round-trip failures; first counterexample " + rep.counterexample;
    }
    r.items.push_back(item);
    r.items.push_back(count_check("primitive graphs, n = " + std::to_string(k), rep.primitive,
                                  c2[static_cast<std::size_t>(k)]));
  }
  return r;
}

}  // namespace

std::vector<SuiteResult> run_suite(const std::string& name, const VerifyOptions& options) {
  if (options.order < 1) throw PreconditionError("order must be >= 1");
  if (name == "all") {
    std::vector<SuiteResult> out;
    for (const std::string& s : suite_names()) out.push_back(run_suite(s, options).front());
    return out;
  }
  if (name == "lemmas") return {lemmas(options)};
  if (name == "proposition") return {proposition(options)};
  if (name == "chain-rule") return {chain_rule(options)};
  if (name == "tables") return {tables(options)};
  if (name == "bijection") return {bijection(options)};
  throw PreconditionError("unknown suite '" + name + "'");
}

}  // namespace chordgf
