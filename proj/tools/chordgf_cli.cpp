// chordgf: command-line front end for the chord diagram library.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or precondition error.

#include <cstdlib>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "chordgf/alien.hpp"
#include "chordgf/asymptotics.hpp"
#include "chordgf/census.hpp"
#include "chordgf/error.hpp"
#include "chordgf/generating_functions.hpp"
#include "chordgf/qft.hpp"
#include "chordgf/series_io.hpp"
#include "chordgf/verify.hpp"

using namespace chordgf;
using nlohmann::json;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr const char* kCapVariable = "CHORDGF_MAX_CHORDS";

struct Config {
  int order = 30;
  int digits = 30;
  std::string format = "json";
  int cap_n = 8;
};

// The enumeration cap is 8 unless the environment raises (or lowers) it,
// never beyond the hard bound.
int cap_from_environment() {
  const char* raw = std::getenv(kCapVariable);
  if (raw == nullptr || *raw == '\0') return 8;
  int value = 0;
  try {
    std::size_t used = 0;
    value = std::stoi(raw, &used);
    if (raw[used] != '\0') throw std::invalid_argument(raw);
  } catch (const std::exception&) {
    throw PreconditionError(std::string(kCapVariable) + " must be an integer");
  }
  if (value < 1 || value > kMaxEnumerationChords) {
    throw PreconditionError(std::string(kCapVariable) + " must lie in [1, " +
                            std::to_string(kMaxEnumerationChords) + "]");
  }
  return value;
}

void print_series(const PowerSeries& f, const std::string& format) {
  if (format == "json") {
    std::cout << io::to_json(f).dump() << '\n';
  } else if (format == "csv") {
    std::cout << io::to_csv(f);
  } else {
    std::cout << io::to_plain(f) << '\n';
  }
}

AsymptoticImage image_by_name(const std::string& family, std::size_t order) {
  if (family == "C") {
    AsymptoticImage img = alien_C(std::max<std::size_t>(order, 1));
    img.series = img.series.truncate(order);
    return img;
  }
  if (family == "C2") return alien_C2(order);
  throw PreconditionError("unknown image family '" + family + "' (expected C or C2)");
}

int run_series(const Config& cfg, const std::string& family) {
  print_series(series_by_name(family, static_cast<std::size_t>(cfg.order)), cfg.format);
  return 0;
}

int run_enumerate(const Config& cfg, int chords, const std::string& class_name, bool count_only) {
  const DiagramClass cls = DiagramClass::parse(class_name);
  if (chords < 0) throw PreconditionError("--chords must be nonnegative");
  if (chords > cfg.cap_n) {
    throw ResourceError(std::to_string(chords) + " chords exceeds the enumeration cap of " +
                        std::to_string(cfg.cap_n) + " (raise it with " + kCapVariable + ")");
  }
  if (count_only) {
    const std::uint64_t count = census_parallel(chords, cls, cfg.cap_n);
    if (cfg.format == "json") {
      std::cout << json{{"n", chords}, {"class", cls.name()}, {"count", std::to_string(count)}}.dump() << '\n';
    } else if (cfg.format == "csv") {
      std::cout << "n,class,count\n" << chords << ',' << cls.name() << ',' << count << '\n';
    } else {
      std::cout << count << '\n';
    }
    return 0;
  }
  for_each_diagram(chords, [&](const ChordDiagram& d) {
    if (cls.matches(d)) std::cout << d.to_string() << '\n';
  }, cfg.cap_n);
  return 0;
}

int run_verify(const Config& cfg, const std::string& suite, int max_chords) {
  if (max_chords > cfg.cap_n) {
    throw ResourceError("--max-chords " + std::to_string(max_chords) + " exceeds the enumeration cap of " +
                        std::to_string(cfg.cap_n));
  }
  const std::vector<SuiteResult> results = run_suite(suite, {cfg.order, max_chords});
  const CheckItem* failure = nullptr;
  std::string failed_suite;
  for (const SuiteResult& r : results) {
    for (const CheckItem& item : r.items) {
      std::cout << (item.passed ? "PASS " : "FAIL ") << r.suite << ": " << item.name;
      if (!item.detail.empty()) std::cout << " (" << item.detail << ')';
      std::cout << '\n';
    }
    if (failure == nullptr && r.first_failure() != nullptr) {
      failure = r.first_failure();
      failed_suite = r.suite;
    }
  }
  if (failure != nullptr) {
    std::cerr << "verification failed in " << failed_suite << ": " << failure->name << ' ' << failure->detail << '\n';
    return kExitFailure;
  }
  return 0;
}

int run_alien(const Config& cfg, const std::string& family) {
  const AsymptoticImage img = image_by_name(family, static_cast<std::size_t>(cfg.order));
  if (cfg.format == "json") {
    std::cout << json{{"family", family},
                      {"e_exp", io::to_json(img.e_exp)},
                      {"sqrt_two_pi_exp", img.sqrt_two_pi_exp},
                      {"beta", io::to_json(img.beta)},
                      {"series", io::to_json(img.series)}}
                     .dump()
              << '\n';
  } else if (cfg.format == "csv") {
    std::cout << "# e_exp=" << img.e_exp << " sqrt_two_pi_exp=" << img.sqrt_two_pi_exp << " beta=" << img.beta << '\n' << io::to_csv(img.series);
  } else {
    std::cout << "e^(" << img.e_exp << ") * (2pi)^(" << img.sqrt_two_pi_exp << "/2) * [" << io::to_plain(img.series)
              << "]\n";
  }
  return 0;
}

int run_estimate(const Config& cfg, const std::string& family, long terms, long n_from, long n_to) {
  if (n_to < n_from) throw PreconditionError("--n-to must be >= --n-from");
  if (terms < 1) throw PreconditionError("--terms must be >= 1");
  const AsymptoticImage img = image_by_name(family, static_cast<std::size_t>(terms - 1));
  const PowerSeries exact = series_by_name(family, static_cast<std::size_t>(std::max<long>(n_to, 2)));
  if (!estimate_reliable(n_from, terms)) {
    std::cerr << "warning: n - R < " << kReliableGap << "; the truncated expansion is unreliable there\n";
  }
  const std::vector<EstimateRow> rows = error_table(img, exact, n_from, n_to, terms, terms, cfg.digits);
  if (cfg.format == "json") {
    json out = json::array();
    for (const EstimateRow& r : rows) {
      out.push_back({{"n", r.n}, {"R", r.terms}, {"estimate", r.estimate.to_string()}, {"exact", r.exact.get_str()},
                     {"rel_error", r.rel_error.to_string()}, {"norm_error", r.norm_error.to_string()}});
    }
    std::cout << out.dump() << '\n';
  } else {
    if (cfg.format == "csv") std::cout << "n,R,estimate,exact,rel_error,norm_error\n";
    for (const EstimateRow& r : rows) {
      std::cout << r.n << ',' << r.terms << ',' << r.estimate.to_string() << ',' << r.exact.get_str() << ','
                << r.rel_error.to_string() << ',' << r.norm_error.to_string() << '\n';
    }
  }
  return 0;
}

Action action_from_flags(const std::string& model, const std::string& a, const std::vector<std::string>& couplings) {
  Action action;
  if (model == "phi3") {
    action = Action::phi3();
  } else if (model != "custom") {
    throw PreconditionError("unknown model '" + model + "' (expected phi3 or custom)");
  }
  if (!a.empty()) action.a = Rational::parse(a);
  for (const std::string& spec : couplings) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos) throw ParseError("coupling must look like k:value, got '" + spec + "'");
    int k = 0;
    try {
      k = std::stoi(spec.substr(0, colon));
    } catch (const std::exception&) {
      throw ParseError("bad coupling power in '" + spec + "'");
    }
    action.couplings[k] = Rational::parse(spec.substr(colon + 1));
  }
  action.validate();
  return action;
}

int run_qft(const Config& cfg, const std::string& model, const std::string& a, const std::vector<std::string>& couplings,
            const std::string& diagram) {
  if (!diagram.empty()) {
    const QedGraph g = chord_to_qed(ChordDiagram::parse(diagram));
    const std::vector<Subdivergence> subs = find_subdivergences(g);
    if (cfg.format == "json") {
      json list = json::array();
      for (const Subdivergence& s : subs) list.push_back({{"first", s.first}, {"last", s.last}, {"kind", to_string(s.kind)}});
      json photons = json::array();
      for (const auto& [p, q] : g.photons) photons.push_back({p, q});
      std::cout << json{{"path_length", g.path_length}, {"photons", photons}, {"root", g.root_vertex},
                        {"loops", loop_number(g)}, {"primitive", is_primitive(g)}, {"subdivergences", list}}
                       .dump()
                << '\n';
    } else {
      std::cout << g.to_string() << "\nloops: " << loop_number(g) << "\nprimitive: " << (is_primitive(g) ? "yes" : "no")
                << '\n';
      for (const Subdivergence& s : subs) std::cout << "subdivergence: " << s.first << '-' << s.last << ' ' << to_string(s.kind) << '\n';
    }
    return 0;
  }
  const Action action = action_from_flags(model, a, couplings);
  const PartitionFunction pf = partition_function(action, static_cast<std::size_t>(cfg.order));
  if (cfg.format == "json") {
    std::cout << json{{"model", model}, {"sqrt_of", io::to_json(pf.a)}, {"series", io::to_json(pf.reduced)}}.dump()
              << '\n';
  } else {
    if (pf.a != Rational(1)) std::cerr << "note: coefficients omit the overall factor sqrt(" << pf.a << ")\n";
    print_series(pf.reduced, cfg.format);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rooted chord diagrams: census, generating functions, asymptotics, QED graphs"};
  app.require_subcommand(1);
  Config cfg;
  const std::vector<std::string> formats = {"json", "csv", "plain"};

  const auto add_common = [&](CLI::App* sub, bool with_order, bool with_digits) {
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember(formats));
    if (with_order) sub->add_option("--order", cfg.order, "Truncation order")->check(CLI::PositiveNumber);
    if (with_digits) sub->add_option("--digits", cfg.digits, "Decimal digits")->check(CLI::PositiveNumber);
  };

  std::string family;
  auto* series = app.add_subcommand("series", "Print a generating function");
  series->add_option("--family", family, "D, C, C1, C2 or S")->required();
  add_common(series, true, false);

  int chords = 0;
  std::string class_name = "all";
  bool count_only = false;
  auto* enumerate = app.add_subcommand("enumerate", "List or count rooted chord diagrams");
  enumerate->add_option("--chords", chords, "Number of chords")->required();
  enumerate->add_option("--class", class_name, "all, connected, 2connected or k:K");
  enumerate->add_flag("--count-only", count_only, "Print only the count");
  add_common(enumerate, false, false);

  std::string suite = "all";
  int max_chords = 6;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", suite, "lemmas, proposition, chain-rule, tables, bijection or all");
  verify->add_option("--max-chords", max_chords, "Largest chord count for exhaustive checks")
      ->check(CLI::Range(1, kMaxEnumerationChords));
  verify->add_option("--order", cfg.order, "Series order; also bounds exhaustive chord counts")
      ->check(CLI::PositiveNumber);

  std::string alien_family;
  auto* alien = app.add_subcommand("alien", "Print the asymptotic-expansion image of C or C2");
  alien->add_option("--family", alien_family, "C or C2")->required();
  add_common(alien, true, false);

  std::string est_family = "C2";
  long terms = 6;
  long n_from = 0;
  long n_to = -1;
  auto* est = app.add_subcommand("estimate", "Compare truncated asymptotic expansions with exact counts");
  est->add_option("--family", est_family, "C or C2");
  est->add_option("--terms", terms, "Number of expansion terms R");
  est->add_option("--n-from", n_from, "First n")->required();
  est->add_option("--n-to", n_to, "Last n (defaults to --n-from)");
  add_common(est, false, true);

  std::string model = "phi3";
  std::string a_text;
  std::vector<std::string> couplings;
  std::string diagram;
  auto* qft = app.add_subcommand("qft", "Zero-dimensional partition functions and QED graph images");
  qft->add_option("--model", model, "phi3 or custom");
  qft->add_option("--a", a_text, "Quadratic coefficient a (rational)");
  qft->add_option("--coupling", couplings, "Coupling k:value, repeatable");
  qft->add_option("--diagram", diagram, "Show the QED graph of a diagram, e.g. \"2: 3 4 1 2\"");
  add_common(qft, true, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    cfg.cap_n = cap_from_environment();
    if (*series) return run_series(cfg, family);
    if (*enumerate) return run_enumerate(cfg, chords, class_name, count_only);
    if (*verify) return run_verify(cfg, suite, max_chords);
    if (*alien) return run_alien(cfg, alien_family);
    if (*est) return run_estimate(cfg, est_family, terms, n_from, n_to < 0 ? n_from : n_to);
    if (*qft) return run_qft(cfg, model, a_text, couplings, diagram);
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
