#include "chordgf/decomposition.hpp"

#include <utility>

#include "chordgf/error.hpp"

namespace chordgf {

const char* to_string(DecompositionCase c) {
  switch (c) {
    case DecompositionCase::SingleChord: return "single-chord";
    case DecompositionCase::RootFree: return "root-free";
    case DecompositionCase::RootCovered: return "root-covered";
  }
  return "?";
}

int Decomposition::chords() const {
  if (kind == DecompositionCase::SingleChord) return 1;
  int total = core.chords();
  for (const ChordDiagram& a : attachments) total += a.chords() - 1;
  if (root_block) total += root_block->chords() - 1;
  return total;
}

namespace {

int external_position(std::span<const int> partner, Interval span) {
  for (int p = span.first; p <= span.last; ++p) {
    if (!span.contains(partner[static_cast<std::size_t>(p)])) return p;
  }
  return -1;
}

struct RootFreeSplit {
  ChordDiagram core;
  std::vector<ChordDiagram> attachments;
};

// Repeatedly strips the leftmost maximal reason, keeping its cut endpoint,
// until no reason is left. Each surviving position owns the contiguous
// range of original positions folded into it.
RootFreeSplit split_root_free(const ChordDiagram& d) {
  const int size = d.positions();
  std::vector<int> alive(static_cast<std::size_t>(size));
  std::vector<int> lo(static_cast<std::size_t>(size));
  std::vector<int> hi(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) alive[i] = lo[i] = hi[i] = i;

  std::vector<int> index_of(static_cast<std::size_t>(size), -1);
  std::vector<int> current;
  const auto rebuild = [&] {
    for (std::size_t i = 0; i < alive.size(); ++i) index_of[static_cast<std::size_t>(alive[i])] = static_cast<int>(i);
    current.assign(alive.size(), -1);
    for (std::size_t i = 0; i < alive.size(); ++i) {
      current[i] = index_of[static_cast<std::size_t>(d.partner(alive[i]))];
    }
  };

  rebuild();
  for (;;) {
    const std::vector<bool> covered = reason_coverage(current);
    int s1 = -1;
    for (std::size_t i = 0; i < covered.size(); ++i) {
      if (covered[i]) {
        s1 = static_cast<int>(i);
        break;
      }
    }
    if (s1 < 0) break;
    Interval span;
    longest_reason_from(current, s1, span);
    const int keep = external_position(current, span);
    const int new_lo = lo[static_cast<std::size_t>(span.first)];
    const int new_hi = hi[static_cast<std::size_t>(span.last)];
    std::vector<int> next_alive;
    std::vector<int> next_lo;
    std::vector<int> next_hi;
    for (int i = 0; i < static_cast<int>(alive.size()); ++i) {
      if (span.contains(i) && i != keep) continue;
      next_alive.push_back(alive[static_cast<std::size_t>(i)]);
      next_lo.push_back(i == keep ? new_lo : lo[static_cast<std::size_t>(i)]);
      next_hi.push_back(i == keep ? new_hi : hi[static_cast<std::size_t>(i)]);
    }
    alive = std::move(next_alive);
    lo = std::move(next_lo);
    hi = std::move(next_hi);
    rebuild();
  }

  RootFreeSplit out{ChordDiagram(current), {}};
  out.attachments.reserve(alive.size());
  for (std::size_t j = 0; j < alive.size(); ++j) {
    const int e = alive[j];
    const int first = lo[j];
    const int last = hi[j];
    const int far_end = 1 + (last - e);  // attachment index of the core chord's other end
    const int a_size = last - first + 2;
    const auto local = [&](int pos) { return pos >= e ? pos - e : far_end + 1 + (pos - first); };
    std::vector<int> partner(static_cast<std::size_t>(a_size), -1);
    partner[0] = far_end;
    partner[static_cast<std::size_t>(far_end)] = 0;
    for (int pos = first; pos <= last; ++pos) {
      if (pos == e) continue;
      const int q = d.partner(pos);
      partner[static_cast<std::size_t>(local(pos))] = local(q);
    }
    out.attachments.emplace_back(std::move(partner));
  }
  return out;
}

ChordDiagram join_root_free(const ChordDiagram& core, const std::vector<ChordDiagram>& attachments) {
  const int m = core.positions();
  std::vector<int> base(static_cast<std::size_t>(m));
  std::vector<int> core_out(static_cast<std::size_t>(m));
  int total = 0;
  for (int j = 0; j < m; ++j) {
    const ChordDiagram& a = attachments[static_cast<std::size_t>(j)];
    const int q = a.partner(0);
    base[static_cast<std::size_t>(j)] = total;
    core_out[static_cast<std::size_t>(j)] = total + (a.positions() - 1 - q);
    total += a.positions() - 1;
  }
  std::vector<int> partner(static_cast<std::size_t>(total), -1);
  for (int j = 0; j < m; ++j) {
    partner[static_cast<std::size_t>(core_out[static_cast<std::size_t>(j)])] =
        core_out[static_cast<std::size_t>(core.partner(j))];
    const ChordDiagram& a = attachments[static_cast<std::size_t>(j)];
    const int q = a.partner(0);
    const int left_len = a.positions() - 1 - q;
    const auto out_index = [&](int p) {
      if (p > q) return base[static_cast<std::size_t>(j)] + (p - q - 1);
      return base[static_cast<std::size_t>(j)] + left_len + p;  // p in [1, q)
    };
    for (int p = 1; p < a.positions(); ++p) {
      if (p == q) continue;
      partner[static_cast<std::size_t>(out_index(p))] = out_index(a.partner(p));
    }
  }
  return ChordDiagram(std::move(partner));
}

}  // namespace

Decomposition decompose_connected(const ChordDiagram& d) {
  if (d.chords() == 0 || !is_connected(d)) {
    throw PreconditionError("decompose_connected needs a nonempty connected diagram");
  }
  Decomposition dec;
  if (d.chords() == 1) {
    dec.kind = DecompositionCase::SingleChord;
    dec.core = d;
    return dec;
  }

  Interval head;
  if (!longest_reason_from(d.partners(), 0, head)) {
    dec.kind = DecompositionCase::RootFree;
    RootFreeSplit split = split_root_free(d);
    dec.core = std::move(split.core);
    dec.attachments = std::move(split.attachments);
    return dec;
  }

  dec.kind = DecompositionCase::RootCovered;
  const int keep = external_position(d.partners(), head);
  const int far = d.partner(keep);

  // Root block: S in order, then the far end of the cut chord.
  const int h = head.length() + 1;
  std::vector<int> block(static_cast<std::size_t>(h));
  for (int p = head.first; p <= head.last; ++p) {
    block[static_cast<std::size_t>(p)] = (p == keep) ? h - 1 : d.partner(p);
  }
  block[static_cast<std::size_t>(h - 1)] = keep;
  dec.root_block = ChordDiagram(std::move(block));

  // Remaining diagram: the cut endpoint followed by everything after S.
  const int rest_size = d.positions() - head.length() + 1;
  const auto rest_index = [&](int pos) { return pos == keep ? 0 : pos - head.last; };
  std::vector<int> rest(static_cast<std::size_t>(rest_size));
  rest[0] = rest_index(far);
  for (int pos = head.last + 1; pos < d.positions(); ++pos) {
    rest[static_cast<std::size_t>(rest_index(pos))] = rest_index(d.partner(pos));
  }
  RootFreeSplit split = split_root_free(ChordDiagram(std::move(rest)));
  dec.core = std::move(split.core);
  dec.attachments = std::move(split.attachments);
  return dec;
}

ChordDiagram recompose(const Decomposition& dec) {
  if (dec.kind == DecompositionCase::SingleChord) {
    if (dec.core.chords() != 1 || !dec.attachments.empty() || dec.root_block) {
      throw PreconditionError("single-chord decomposition must hold exactly one chord");
    }
    return ChordDiagram::single_chord();
  }
  if (dec.core.chords() < 1 || !is_connected(dec.core)) {
    throw PreconditionError("decomposition core must be a nonempty connected diagram");
  }
  if (static_cast<int>(dec.attachments.size()) != dec.core.positions()) {
    throw PreconditionError("need exactly one attachment per core position");
  }
  for (const ChordDiagram& a : dec.attachments) {
    if (a.chords() < 1 || !is_connected(a)) throw PreconditionError("attachments must be connected diagrams");
  }
  ChordDiagram rest = join_root_free(dec.core, dec.attachments);
  if (dec.kind == DecompositionCase::RootFree) {
    if (dec.root_block) throw PreconditionError("root-free decomposition carries no root block");
    return rest;
  }

  if (!dec.root_block) throw PreconditionError("root-covered decomposition needs a root block");
  const ChordDiagram& block = *dec.root_block;
  if (block.chords() < 2 || !is_connected(block)) {
    throw PreconditionError("root block must be a connected diagram with at least two chords");
  }
  const int h = block.positions();
  const int s = block.partner(h - 1);
  const auto out_rest = [&](int r) { return r == 0 ? s : h - 2 + r; };
  std::vector<int> partner(static_cast<std::size_t>(h - 2 + rest.positions()), -1);
  for (int p = 0; p < h - 1; ++p) {
    if (p == s) continue;
    partner[static_cast<std::size_t>(p)] = block.partner(p);
  }
  for (int r = 0; r < rest.positions(); ++r) {
    partner[static_cast<std::size_t>(out_rest(r))] = out_rest(rest.partner(r));
  }
  return ChordDiagram(std::move(partner));
}

}  // namespace chordgf
