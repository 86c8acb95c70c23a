#include "chordgf/qft.hpp"

#include <algorithm>
#include <sstream>

#include "chordgf/error.hpp"

namespace chordgf {

void Action::validate() const {
  if (a.sign() <= 0) throw PreconditionError("quadratic coefficient a must be positive");
  for (const auto& [k, lambda] : couplings) {
    if (k < 3) throw PreconditionError("couplings start at x^3; got k = " + std::to_string(k));
  }
}

PartitionFunction partition_function(const Action& action, std::size_t order) {
  action.validate();
  // [hbar^m] collects j-th powers of V at x^{2(m+j)}; V^j starts at x^{3j},
  // so j <= 2m and x^{6m} is the highest power needed.
  const std::size_t x_order = std::max<std::size_t>(6 * order, 1);
  std::vector<Rational> v(x_order + 1);
  mpz_class factorial = 1;
  for (int k = 1; k <= static_cast<int>(x_order); ++k) {
    factorial *= k;
    auto it = action.couplings.find(k);
    if (it != action.couplings.end()) v[static_cast<std::size_t>(k)] = it->second / Rational(factorial);
  }
  const PowerSeries potential(std::move(v));

  std::vector<Rational> out(order + 1);
  std::vector<Rational> moment(x_order / 2 + 1);  // a^n (2n-1)!!
  moment[0] = 1;
  for (std::size_t n = 1; n < moment.size(); ++n) {
    moment[n] = moment[n - 1] * action.a * Rational(static_cast<long>(2 * n - 1));
  }
  PowerSeries power = PowerSeries::one(x_order);  // V^j / j!
  for (std::size_t j = 0; j <= 2 * order; ++j) {
    if (j > 0) power = scale(power * potential, Rational(1, static_cast<long>(j)));
    for (std::size_t m = 0; m <= order; ++m) {
      const std::size_t x_power = 2 * (m + j);
      if (x_power > x_order) break;
      const Rational& c = power[x_power];
      if (!c.is_zero()) out[m] += moment[m + j] * c;
    }
  }
  return {action.a, PowerSeries(std::move(out))};
}

Rational phi3_closed_form(long n) {
  mpz_class odd = 1;
  for (long j = 3; j <= 6 * n - 1; j += 2) odd *= j;
  mpz_class fact = 1;
  for (long j = 2; j <= 2 * n; ++j) fact *= j;
  mpz_class six_pow;
  mpz_ui_pow_ui(six_pow.get_mpz_t(), 6, static_cast<unsigned long>(2 * n));
  return Rational(odd, six_pow * fact);
}

std::string QedGraph::to_string() const {
  std::ostringstream os;
  os << "path_length: " << path_length << "\nphotons:";
  for (const auto& [a, b] : photons) os << ' ' << a << '-' << b;
  os << "\nroot: " << root_vertex;
  return os.str();
}

QedGraph chord_to_qed(const ChordDiagram& d) {
  if (d.chords() == 0) throw PreconditionError("chord_to_qed needs a nonempty diagram");
  QedGraph g;
  g.path_length = d.positions() - 1;
  g.root_vertex = d.partner(0) - 1;
  for (int c = 1; c < d.chords(); ++c) g.photons.emplace_back(d.left_end(c) - 1, d.right_end(c) - 1);
  return g;
}

ChordDiagram qed_to_chord(const QedGraph& g) {
  const int size = g.path_length + 1;
  if (size % 2 != 0 || static_cast<int>(g.photons.size()) != size / 2 - 1) {
    throw PreconditionError("graph is not the image of a chord diagram");
  }
  std::vector<int> partner(static_cast<std::size_t>(size), -1);
  const auto link = [&](int p, int q) {
    if (p < 0 || q < 0 || p >= size || q >= size || partner[static_cast<std::size_t>(p)] != -1 ||
        partner[static_cast<std::size_t>(q)] != -1 || p == q) {
      throw PreconditionError("graph vertices must carry exactly one photon end each");
    }
    partner[static_cast<std::size_t>(p)] = q;
    partner[static_cast<std::size_t>(q)] = p;
  };
  link(0, g.root_vertex + 1);
  for (const auto& [a, b] : g.photons) link(a + 1, b + 1);
  return ChordDiagram(std::move(partner));
}

int loop_number(const QedGraph& g) { return g.internal_edges() - g.path_length + 1; }

const char* to_string(SubdivergenceKind k) {
  return k == SubdivergenceKind::Propagator ? "propagator" : "vertex";
}

namespace {

// Photon partner per path vertex; -1 marks the root vertex.
std::vector<int> photon_partner(const QedGraph& g) {
  std::vector<int> other(static_cast<std::size_t>(g.path_length), -2);
  other[static_cast<std::size_t>(g.root_vertex)] = -1;
  for (const auto& [a, b] : g.photons) {
    other[static_cast<std::size_t>(a)] = b;
    other[static_cast<std::size_t>(b)] = a;
  }
  return other;
}

// A fermion edge (k, k+1) inside [first, last] is a bridge of the interval
// subgraph unless some internal photon of the interval spans it.
bool interval_bridgeless(const std::vector<int>& other, int first, int last) {
  int reach = -1;  // furthest right end of internal photons seen so far
  for (int k = first; k < last; ++k) {
    const int p = other[static_cast<std::size_t>(k)];
    if (p > k && p <= last) reach = std::max(reach, p);
    if (reach <= k) return false;
  }
  return true;
}

}  // namespace

std::vector<Subdivergence> find_subdivergences(const QedGraph& g) {
  const std::vector<int> other = photon_partner(g);
  const int len = g.path_length;
  std::vector<Subdivergence> out;
  for (int first = 0; first < len; ++first) {
    int stubs = 0;
    int internal = 0;
    for (int last = first; last < len; ++last) {
      const int p = other[static_cast<std::size_t>(last)];
      if (p == -1) {
        ++stubs;
      } else if (p >= first && p < last) {
        --stubs;
        ++internal;
      } else {
        ++stubs;
      }
      if (first == 0 && last == len - 1) continue;
      if (internal == 0 || stubs > 1) continue;
      if (!interval_bridgeless(other, first, last)) continue;
      out.push_back({first, last, stubs == 0 ? SubdivergenceKind::Propagator : SubdivergenceKind::Vertex});
    }
  }
  return out;
}

bool is_primitive(const QedGraph& g) {
  if (loop_number(g) < 1) return false;
  if (!interval_bridgeless(photon_partner(g), 0, g.path_length - 1)) return false;
  return find_subdivergences(g).empty();
}

BijectionReport verify_bijection(int n, int cap) {
  if (n < 1) throw PreconditionError("verify_bijection needs n >= 1");
  if (n > cap || n > kMaxEnumerationChords) {
    throw ResourceError("bijection check on " + std::to_string(n) + " chords exceeds the cap of " +
                        std::to_string(std::min(cap, kMaxEnumerationChords)));
  }
  BijectionReport report;
  report.n = n;
  const int blocks = enumeration_blocks(n);
  std::uint64_t diagrams = 0;
  std::uint64_t primitive = 0;
  std::uint64_t two_connected = 0;
  std::uint64_t mismatches = 0;
  std::uint64_t round_trips = 0;
  std::vector<std::string> examples(static_cast<std::size_t>(blocks));
#pragma omp parallel for schedule(dynamic) reduction(+ : diagrams, primitive, two_connected, mismatches, round_trips)
  for (int b = 0; b < blocks; ++b) {
    const EnumerationBlock blk = enumeration_block(n, b);
    std::string local_example;
    for_each_diagram_in_block(n, blk.root_partner, blk.second_choice, [&](const ChordDiagram& d) {
      ++diagrams;
      const QedGraph g = chord_to_qed(d);
      const bool prim = is_primitive(g);
      const bool two = is_k_connected(d, 2);
      primitive += prim ? 1 : 0;
      two_connected += two ? 1 : 0;
      if (qed_to_chord(g) != d) ++round_trips;
      if (prim != two) {
        ++mismatches;
        if (local_example.empty()) local_example = d.to_string();
      }
    });
    examples[static_cast<std::size_t>(b)] = std::move(local_example);
  }
  report.diagrams = diagrams;
  report.primitive = primitive;
  report.two_connected = two_connected;
  report.mismatches = mismatches;
  report.round_trip_failures = round_trips;
  // Earliest block wins so the report does not depend on scheduling.
  for (const std::string& e : examples) {
    if (!e.empty()) {
      report.counterexample = e;
      break;
    }
  }
  return report;
}

}  // namespace chordgf
