#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chordgf/chord_diagram.hpp"

namespace chordgf {

/// Which diagrams a census counts.
struct DiagramClass {
  enum class Kind { All, Connected, KConnected };
  Kind kind = Kind::All;
  int k = 0;  // only for KConnected

  static DiagramClass all() { return {Kind::All, 0}; }
  static DiagramClass connected() { return {Kind::Connected, 1}; }
  static DiagramClass k_connected(int k) { return {Kind::KConnected, k}; }

  /// "all", "connected", "2connected", "k:K"; throws PreconditionError.
  static DiagramClass parse(const std::string& text);
  std::string name() const;
  bool matches(const ChordDiagram& d) const;
};

// Census kernels. The serial versions walk the enumeration in one pass and
// are the reference; the parallel versions split the enumeration into
// blocks by the first two matching choices and reduce with OpenMP.

std::uint64_t census_serial(int n, DiagramClass cls, int cap = kMaxEnumerationChords);
std::uint64_t census_parallel(int n, DiagramClass cls, int cap = kMaxEnumerationChords);

/// Counts of connected diagrams on n chords per decomposition case.
struct CaseCensus {
  std::uint64_t single_chord = 0;
  std::uint64_t root_free = 0;     // root endpoint in no reason for connectivity-1
  std::uint64_t root_covered = 0;  // root endpoint inside some reason
  friend bool operator==(const CaseCensus&, const CaseCensus&) = default;
};

CaseCensus case_census_serial(int n, int cap = kMaxEnumerationChords);
CaseCensus case_census_parallel(int n, int cap = kMaxEnumerationChords);

/// Runs decompose -> recompose over every connected diagram on n chords and
/// returns the number of diagrams that did not round-trip (0 on success).
std::uint64_t round_trip_failures_parallel(int n, int cap = kMaxEnumerationChords);

}  // namespace chordgf
