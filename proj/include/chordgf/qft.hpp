#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "chordgf/chord_diagram.hpp"
#include "chordgf/power_series.hpp"

namespace chordgf {

/// S(x) = -x^2/(2a) + sum_k lambda_k x^k / k!, couplings from k = 3 on.
struct Action {
  Rational a{1};
  std::map<int, Rational> couplings;

  static Action phi3() { return {Rational(1), {{3, Rational(1)}}}; }
  /// Throws PreconditionError unless a > 0 and every coupling has k >= 3.
  void validate() const;
};

/// The perturbative partition function as sqrt(a) * reduced(hbar). The
/// sqrt(a) factor is kept apart because it need not be rational.
struct PartitionFunction {
  Rational a;
  PowerSeries reduced;
};

/// Coefficients through hbar^order of
///   sqrt(a) sum_n (a hbar)^n (2n-1)!! [x^{2n}] exp(V(x)/hbar).
PartitionFunction partition_function(const Action& action, std::size_t order);

/// [hbar^n] of the phi^3 partition function: (6n-1)!!/((3!)^{2n} (2n)!).
Rational phi3_closed_form(long n);

/// Quenched-QED vertex graph: a fermion path with vertices 0..path_length-1,
/// internal photons joining pairs of path vertices, and the external photon
/// attached at root_vertex. The fermion legs hang off both path ends.
struct QedGraph {
  int path_length = 0;
  std::vector<std::pair<int, int>> photons;  // (a, b) with a < b, sorted by a
  int root_vertex = 0;

  int internal_edges() const { return path_length - 1 + static_cast<int>(photons.size()); }
  /// "path_length: L\nphotons: a-b c-d ...\nroot: r"
  std::string to_string() const;
  friend bool operator==(const QedGraph&, const QedGraph&) = default;
};

/// Straightens the diagram into a fermion path through positions 2..2n;
/// the root chord becomes the external photon.
QedGraph chord_to_qed(const ChordDiagram& d);
ChordDiagram qed_to_chord(const QedGraph& g);

/// |E| - |V| + 1 over internal edges and vertices.
int loop_number(const QedGraph& g);

enum class SubdivergenceKind { Propagator, Vertex };
const char* to_string(SubdivergenceKind k);

struct Subdivergence {
  int first = 0;  // path interval [first, last]
  int last = 0;
  SubdivergenceKind kind = SubdivergenceKind::Propagator;
  friend bool operator==(const Subdivergence&, const Subdivergence&) = default;
};

/// Proper bridgeless subgraphs supported on a path interval, with at least
/// one internal photon and at most one photon stub (the external photon
/// counts when the root vertex lies inside).
std::vector<Subdivergence> find_subdivergences(const QedGraph& g);
/// Bridgeless (internal edges only), at least one loop, no subdivergences.
bool is_primitive(const QedGraph& g);

struct BijectionReport {
  int n = 0;
  std::uint64_t diagrams = 0;
  std::uint64_t primitive = 0;
  std::uint64_t two_connected = 0;
  std::uint64_t mismatches = 0;
  std::uint64_t round_trip_failures = 0;
  std::string counterexample;  // first mismatching diagram, if any
  bool passed() const { return mismatches == 0 && round_trip_failures == 0; }
};

/// For every diagram on n chords: is_primitive(chord_to_qed(d)) iff d is
/// 2-connected, and qed_to_chord inverts chord_to_qed.
BijectionReport verify_bijection(int n, int cap = kMaxEnumerationChords);

}  // namespace chordgf
