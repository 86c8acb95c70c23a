#include "chordgf/census.hpp"

#include <algorithm>

#include "chordgf/decomposition.hpp"
#include "chordgf/error.hpp"

namespace chordgf {

DiagramClass DiagramClass::parse(const std::string& text) {
  if (text == "all") return all();
  if (text == "connected") return connected();
  if (text == "2connected") return k_connected(2);
  if (text.rfind("k:", 0) == 0) {
    try {
      const int k = std::stoi(text.substr(2));
      if (k >= 1) return k_connected(k);
    } catch (const std::exception&) {
    }
  }
  throw PreconditionError("unknown diagram class '" + text + "'");
}

std::string DiagramClass::name() const {
  switch (kind) {
    case Kind::All: return "all";
    case Kind::Connected: return "connected";
    case Kind::KConnected: return k == 2 ? "2connected" : "k:" + std::to_string(k);
  }
  return "?";
}

bool DiagramClass::matches(const ChordDiagram& d) const {
  switch (kind) {
    case Kind::All: return true;
    case Kind::Connected: return d.chords() > 0 && is_connected(d);
    case Kind::KConnected: return d.chords() > 0 && is_k_connected(d, k);
  }
  return false;
}

namespace {

void require_cap(int n, int cap) {
  if (n > cap || n > kMaxEnumerationChords) {
    throw ResourceError("census of " + std::to_string(n) + " chords exceeds the cap of " +
                        std::to_string(std::min(cap, kMaxEnumerationChords)));
  }
  if (n < 0) throw PreconditionError("chord count must be nonnegative");
}

DecompositionCase classify_case(const ChordDiagram& d) {
  if (d.chords() == 1) return DecompositionCase::SingleChord;
  Interval span;
  return longest_reason_from(d.partners(), 0, span) ? DecompositionCase::RootCovered
                                                   : DecompositionCase::RootFree;
}

void tally(CaseCensus& c, DecompositionCase k) {
  switch (k) {
    case DecompositionCase::SingleChord: ++c.single_chord; break;
    case DecompositionCase::RootFree: ++c.root_free; break;
    case DecompositionCase::RootCovered: ++c.root_covered; break;
  }
}

}  // namespace

std::uint64_t census_serial(int n, DiagramClass cls, int cap) {
  require_cap(n, cap);
  std::uint64_t count = 0;
  for_each_diagram(n, [&](const ChordDiagram& d) { count += cls.matches(d) ? 1 : 0; }, cap);
  return count;
}

std::uint64_t census_parallel(int n, DiagramClass cls, int cap) {
  require_cap(n, cap);
  const int blocks = enumeration_blocks(n);
  std::uint64_t count = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : count)
  for (int b = 0; b < blocks; ++b) {
    const EnumerationBlock blk = enumeration_block(n, b);
    std::uint64_t local = 0;
    for_each_diagram_in_block(n, blk.root_partner, blk.second_choice,
                              [&](const ChordDiagram& d) { local += cls.matches(d) ? 1 : 0; });
    count += local;
  }
  return count;
}

CaseCensus case_census_serial(int n, int cap) {
  require_cap(n, cap);
  CaseCensus c;
  if (n == 0) return c;
  for_each_diagram(n, [&](const ChordDiagram& d) {
    if (is_connected(d)) tally(c, classify_case(d));
  }, cap);
  return c;
}

CaseCensus case_census_parallel(int n, int cap) {
  require_cap(n, cap);
  if (n == 0) return {};
  const int blocks = enumeration_blocks(n);
  std::uint64_t single = 0;
  std::uint64_t free_ = 0;
  std::uint64_t covered = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : single, free_, covered)
  for (int b = 0; b < blocks; ++b) {
    const EnumerationBlock blk = enumeration_block(n, b);
    CaseCensus local;
    for_each_diagram_in_block(n, blk.root_partner, blk.second_choice, [&](const ChordDiagram& d) {
      if (is_connected(d)) tally(local, classify_case(d));
    });
    single += local.single_chord;
    free_ += local.root_free;
    covered += local.root_covered;
  }
  return {single, free_, covered};
}

std::uint64_t round_trip_failures_parallel(int n, int cap) {
  require_cap(n, cap);
  if (n == 0) return 0;
  const int blocks = enumeration_blocks(n);
  std::uint64_t failures = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : failures)
  for (int b = 0; b < blocks; ++b) {
    const EnumerationBlock blk = enumeration_block(n, b);
    std::uint64_t local = 0;
    for_each_diagram_in_block(n, blk.root_partner, blk.second_choice, [&](const ChordDiagram& d) {
      if (!is_connected(d)) return;
      const Decomposition dec = decompose_connected(d);
      if (recompose(dec) != d) ++local;
    });
    failures += local;
  }
  return failures;
}

}  // namespace chordgf
