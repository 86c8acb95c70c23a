#pragma once

#include <cstdint>
#include <functional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace chordgf {

/// Rooted chord diagram on n chords: a fixed-point-free involution on the
/// 2n positions of the linear order. Positions are 0-based in the API
/// (position 0 is the root endpoint); the text format is 1-based, e.g.
/// "2: 3 4 1 2" for the crossing pair.
///
/// Chords are indexed 0..n-1 in order of their left endpoints, so chord 0
/// is always the root chord.
class ChordDiagram {
 public:
  ChordDiagram() = default;
  /// 0-based partner array; throws PreconditionError unless it is a
  /// fixed-point-free involution.
  explicit ChordDiagram(std::vector<int> partner);
  static ChordDiagram from_one_based(std::span<const int> partner);
  static ChordDiagram single_chord() { return ChordDiagram({1, 0}); }
  /// Parses "n: p1 p2 ... p2n" (1-based partners). Throws ParseError.
  static ChordDiagram parse(std::string_view text);

  int chords() const { return static_cast<int>(partner_.size() / 2); }
  int positions() const { return static_cast<int>(partner_.size()); }
  int partner(int position) const { return partner_[static_cast<std::size_t>(position)]; }
  std::span<const int> partners() const { return partner_; }

  /// Chord index of the chord owning a position.
  int chord_at(int position) const;
  int left_end(int chord) const { return left_[static_cast<std::size_t>(chord)]; }
  int right_end(int chord) const { return partner(left_end(chord)); }

  std::string to_string() const;

  friend bool operator==(const ChordDiagram& a, const ChordDiagram& b) { return a.partner_ == b.partner_; }

 private:
  friend class DiagramEnumerator;
  void rebuild_index();

  std::vector<int> partner_;
  std::vector<int> left_;      // chord -> left endpoint
  std::vector<int> chord_of_;  // position -> chord
};

std::ostream& operator<<(std::ostream& os, const ChordDiagram& d);

/// Crossing predicate on chords {a1<a2}, {b1<b2}.
bool chords_cross(int a1, int a2, int b1, int b2);

/// Intersection graph as per-chord adjacency bitmasks (n <= 64).
class IntersectionGraph {
 public:
  explicit IntersectionGraph(const ChordDiagram& d);
  int vertices() const { return static_cast<int>(adjacency_.size()); }
  std::uint64_t neighbours(int chord) const { return adjacency_[static_cast<std::size_t>(chord)]; }
  bool adjacent(int a, int b) const { return (neighbours(a) >> b) & 1U; }
  /// True iff the subgraph induced by the (nonempty) chord set is connected.
  bool connected_on(std::uint64_t chord_set) const;
  std::uint64_t all_chords() const;

 private:
  std::vector<std::uint64_t> adjacency_;
};

/// Connectivity of the intersection graph; the single chord is connected.
/// Throws PreconditionError on the empty diagram.
bool is_connected(const ChordDiagram& d);

/// True iff n >= k, d is connected, and deleting any set of fewer than k
/// chords (leaving at least one chord) keeps it connected.
bool is_k_connected(const ChordDiagram& d, int k);

/// A consecutive range [first, last] of positions (0-based, inclusive).
struct Interval {
  int first = 0;
  int last = 0;
  int length() const { return last - first + 1; }
  bool contains(int p) const { return first <= p && p <= last; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// A reason for connectivity-1: an interval S of linear positions holding
/// at least one whole chord, with 3 <= |S| < 2n - 1, and exactly one
/// endpoint whose partner lies outside S. That endpoint's chord is the cut.
struct Reason {
  Interval span;
  int cut_chord = 0;
  int cut_position = 0;  // the endpoint of the cut chord inside span
  friend bool operator==(const Reason&, const Reason&) = default;
};

/// All reasons for connectivity-1, ordered by (first, last).
std::vector<Reason> find_reasons_connectivity1(const ChordDiagram& d);

/// True iff `span` is a reason for connectivity-1 of the diagram given by
/// its partner array.
bool is_reason(std::span<const int> partner, Interval span);

/// Positions covered by at least one reason.
std::vector<bool> reason_coverage(std::span<const int> partner);

/// Longest reason starting at `first`, if any.
bool longest_reason_from(std::span<const int> partner, int first, Interval& out);

// --- enumeration -----------------------------------------------------------

/// Hard bound on exhaustive enumeration: (2*10-1)!! ~ 6.5e8 matchings.
inline constexpr int kMaxEnumerationChords = 10;

/// Visits every rooted chord diagram on n chords in deterministic order:
/// the smallest free position is matched with each later free position in
/// increasing order. Throws ResourceError if n exceeds `cap`.
void for_each_diagram(int n, const std::function<void(const ChordDiagram&)>& visit,
                      int cap = kMaxEnumerationChords);

/// Visits the diagrams of the same sequence whose first two matching
/// choices are fixed: position 0 is paired with `root_partner`, and the
/// smallest remaining free position with the `second_choice`-th free
/// position after it. Used to partition the enumeration for parallel census.
void for_each_diagram_in_block(int n, int root_partner, int second_choice,
                               const std::function<void(const ChordDiagram&)>& visit);

/// Number of (root_partner, second_choice) blocks for n chords.
int enumeration_blocks(int n);

struct EnumerationBlock {
  int root_partner = 0;
  int second_choice = 0;
};
/// The block with the given index in [0, enumeration_blocks(n)).
EnumerationBlock enumeration_block(int n, int index);

std::vector<ChordDiagram> all_diagrams(int n, int cap = kMaxEnumerationChords);

}  // namespace chordgf
