#include "chordgf/chord_diagram.hpp"

#include <bit>
#include <sstream>

#include "chordgf/error.hpp"

namespace chordgf {

ChordDiagram::ChordDiagram(std::vector<int> partner) : partner_(std::move(partner)) {
  const int size = static_cast<int>(partner_.size());
  if (size % 2 != 0) throw PreconditionError("chord diagram needs an even number of positions");
  for (int i = 0; i < size; ++i) {
    const int p = partner_[static_cast<std::size_t>(i)];
    if (p < 0 || p >= size || p == i || partner_[static_cast<std::size_t>(p)] != i) {
      throw PreconditionError("partner array is not a fixed-point-free involution at position " +
                              std::to_string(i + 1));
    }
  }
  rebuild_index();
}

ChordDiagram ChordDiagram::from_one_based(std::span<const int> partner) {
  std::vector<int> p(partner.begin(), partner.end());
  for (int& v : p) --v;
  return ChordDiagram(std::move(p));
}

ChordDiagram ChordDiagram::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  int n = -1;
  char colon = 0;
  if (!(in >> n >> colon) || colon != ':' || n < 0) throw ParseError("expected 'n: p1 ... p2n'");
  std::vector<int> p;
  int v = 0;
  while (in >> v) p.push_back(v);
  if (!in.eof()) throw ParseError("non-integer token in diagram text");
  if (static_cast<int>(p.size()) != 2 * n) throw ParseError("diagram text has wrong number of partners");
  try {
    return from_one_based(p);
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

void ChordDiagram::rebuild_index() {
  const std::size_t size = partner_.size();
  left_.clear();
  chord_of_.assign(size, -1);
  for (std::size_t i = 0; i < size; ++i) {
    const int p = partner_[i];
    if (static_cast<int>(i) < p) {
      chord_of_[i] = static_cast<int>(left_.size());
      chord_of_[static_cast<std::size_t>(p)] = static_cast<int>(left_.size());
      left_.push_back(static_cast<int>(i));
    }
  }
}

int ChordDiagram::chord_at(int position) const { return chord_of_[static_cast<std::size_t>(position)]; }

std::string ChordDiagram::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const ChordDiagram& d) {
  os << d.chords() << ':';
  for (int p : d.partners()) os << ' ' << p + 1;
  return os;
}

bool chords_cross(int a1, int a2, int b1, int b2) {
  return (a1 < b1 && b1 < a2 && a2 < b2) || (b1 < a1 && a1 < b2 && b2 < a2);
}

IntersectionGraph::IntersectionGraph(const ChordDiagram& d) {
  const int n = d.chords();
  if (n > 64) throw ResourceError("intersection graph supports at most 64 chords");
  adjacency_.assign(static_cast<std::size_t>(n), 0);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (chords_cross(d.left_end(a), d.right_end(a), d.left_end(b), d.right_end(b))) {
        adjacency_[static_cast<std::size_t>(a)] |= std::uint64_t{1} << b;
        adjacency_[static_cast<std::size_t>(b)] |= std::uint64_t{1} << a;
      }
    }
  }
}

std::uint64_t IntersectionGraph::all_chords() const {
  const int n = vertices();
  return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

bool IntersectionGraph::connected_on(std::uint64_t chord_set) const {
  if (chord_set == 0) return false;
  std::uint64_t seen = chord_set & (~chord_set + 1);
  std::uint64_t frontier = seen;
  while (frontier) {
    std::uint64_t next = 0;
    while (frontier) {
      const int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      next |= adjacency_[static_cast<std::size_t>(v)];
    }
    next &= chord_set & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == chord_set;
}

bool is_connected(const ChordDiagram& d) {
  if (d.chords() == 0) throw PreconditionError("connectivity is undefined for the empty diagram");
  const IntersectionGraph g(d);
  return g.connected_on(g.all_chords());
}

bool is_k_connected(const ChordDiagram& d, int k) {
  if (k < 1) throw PreconditionError("k-connectivity needs k >= 1");
  const int n = d.chords();
  if (n == 0) throw PreconditionError("connectivity is undefined for the empty diagram");
  if (n < k) return false;
  const IntersectionGraph g(d);
  const std::uint64_t all = g.all_chords();
  if (!g.connected_on(all)) return false;
  const int max_removed = std::min(k - 1, n - 1);
  if (max_removed == 0) return true;
  // Every nonempty chord subset of size <= max_removed.
  std::vector<int> pick;
  bool ok = true;
  const auto recurse = [&](auto&& self, int start, std::uint64_t removed) -> void {
    if (!ok) return;
    if (removed != 0 && !g.connected_on(all & ~removed)) {
      ok = false;
      return;
    }
    if (std::popcount(removed) == max_removed) return;
    for (int c = start; c < n && ok; ++c) self(self, c + 1, removed | (std::uint64_t{1} << c));
  };
  recurse(recurse, 0, 0);
  return ok;
}

bool is_reason(std::span<const int> partner, Interval span) {
  const int size = static_cast<int>(partner.size());
  const int len = span.length();
  if (span.first < 0 || span.last >= size || len < 3 || len >= size - 1) return false;
  int external = 0;
  for (int p = span.first; p <= span.last; ++p) {
    if (!span.contains(partner[static_cast<std::size_t>(p)])) ++external;
  }
  return external == 1;
}

namespace {

// Calls visit(last, external_position) for each window [first, last] with
// exactly one external endpoint, 3 <= length < size - 1.
template <typename Visit>
void scan_windows_from(std::span<const int> partner, int first, Visit&& visit) {
  const int size = static_cast<int>(partner.size());
  int external = 0;
  int xor_external = 0;  // xor of external positions; exact when external == 1
  for (int last = first; last < size; ++last) {
    const int q = partner[static_cast<std::size_t>(last)];
    if (q >= first && q < last) {
      --external;
      xor_external ^= q;
    } else {
      ++external;
      xor_external ^= last;
    }
    const int len = last - first + 1;
    if (len >= size - 1) break;
    if (len >= 3 && external == 1) visit(last, xor_external);
  }
}

}  // namespace

std::vector<bool> reason_coverage(std::span<const int> partner) {
  const int size = static_cast<int>(partner.size());
  std::vector<bool> covered(static_cast<std::size_t>(size), false);
  for (int first = 0; first < size; ++first) {
    int longest = -1;
    scan_windows_from(partner, first, [&](int last, int) { longest = last; });
    for (int p = first; p <= longest; ++p) covered[static_cast<std::size_t>(p)] = true;
  }
  return covered;
}

bool longest_reason_from(std::span<const int> partner, int first, Interval& out) {
  int longest = -1;
  scan_windows_from(partner, first, [&](int last, int) { longest = last; });
  if (longest < 0) return false;
  out = Interval{first, longest};
  return true;
}

std::vector<Reason> find_reasons_connectivity1(const ChordDiagram& d) {
  std::vector<Reason> out;
  for (int first = 0; first < d.positions(); ++first) {
    scan_windows_from(d.partners(), first, [&](int last, int external) {
      out.push_back(Reason{Interval{first, last}, d.chord_at(external), external});
    });
  }
  return out;
}

// --- enumeration -----------------------------------------------------------

class DiagramEnumerator {
 public:
  DiagramEnumerator(int n, const std::function<void(const ChordDiagram&)>& visit) : visit_(visit) {
    d_.partner_.assign(static_cast<std::size_t>(2 * n), -1);
  }

  void run() { recurse(0); }

  bool pair(int a, int b) {
    if (d_.partner_[static_cast<std::size_t>(a)] != -1 || d_.partner_[static_cast<std::size_t>(b)] != -1) return false;
    d_.partner_[static_cast<std::size_t>(a)] = b;
    d_.partner_[static_cast<std::size_t>(b)] = a;
    return true;
  }

  int first_free(int from) const {
    const int size = static_cast<int>(d_.partner_.size());
    while (from < size && d_.partner_[static_cast<std::size_t>(from)] != -1) ++from;
    return from;
  }

  int nth_free_after(int pos, int nth) const {
    const int size = static_cast<int>(d_.partner_.size());
    for (int q = pos + 1; q < size; ++q) {
      if (d_.partner_[static_cast<std::size_t>(q)] == -1 && nth-- == 0) return q;
    }
    return -1;
  }

  void recurse(int from) {
    const int size = static_cast<int>(d_.partner_.size());
    const int a = first_free(from);
    if (a >= size) {
      d_.rebuild_index();
      visit_(d_);
      return;
    }
    for (int b = a + 1; b < size; ++b) {
      if (d_.partner_[static_cast<std::size_t>(b)] != -1) continue;
      d_.partner_[static_cast<std::size_t>(a)] = b;
      d_.partner_[static_cast<std::size_t>(b)] = a;
      recurse(a + 1);
      d_.partner_[static_cast<std::size_t>(a)] = -1;
      d_.partner_[static_cast<std::size_t>(b)] = -1;
    }
  }

 private:
  ChordDiagram d_;
  const std::function<void(const ChordDiagram&)>& visit_;
};

namespace {

void check_cap(int n, int cap) {
  if (n < 0) throw PreconditionError("chord count must be nonnegative");
  const int limit = std::min(cap, kMaxEnumerationChords);
  if (n > limit) {
    throw ResourceError("enumeration of " + std::to_string(n) + " chords exceeds the cap of " +
                        std::to_string(limit));
  }
}

}  // namespace

void for_each_diagram(int n, const std::function<void(const ChordDiagram&)>& visit, int cap) {
  check_cap(n, cap);
  DiagramEnumerator e(n, visit);
  e.run();
}

int enumeration_blocks(int n) {
  if (n <= 1) return 1;
  return (2 * n - 1) * (2 * n - 3);
}

void for_each_diagram_in_block(int n, int root_partner, int second_choice,
                               const std::function<void(const ChordDiagram&)>& visit) {
  check_cap(n, kMaxEnumerationChords);
  DiagramEnumerator e(n, visit);
  if (n <= 1) {
    if (root_partner == (n == 1 ? 1 : 0) && second_choice == 0) e.run();
    return;
  }
  if (root_partner < 1 || root_partner >= 2 * n || !e.pair(0, root_partner)) return;
  const int a = e.first_free(1);
  const int b = e.nth_free_after(a, second_choice);
  if (b < 0 || !e.pair(a, b)) return;
  e.recurse(a + 1);
}

EnumerationBlock enumeration_block(int n, int index) {
  if (n <= 1) return {n == 1 ? 1 : 0, 0};
  return {1 + index / (2 * n - 3), index % (2 * n - 3)};
}

std::vector<ChordDiagram> all_diagrams(int n, int cap) {
  std::vector<ChordDiagram> out;
  for_each_diagram(n, [&](const ChordDiagram& d) { out.push_back(d); }, cap);
  return out;
}

}  // namespace chordgf
