#include <doctest.h>

#include <set>

#include "chordgf/chord_diagram.hpp"
#include "chordgf/error.hpp"
#include "oracles.hpp"

using namespace chordgf;

namespace {

ChordDiagram to_diagram(const oracle::Matching& m) {
  std::vector<int> partner(2 * m.size());
  for (const auto& [a, b] : m) {
    partner[static_cast<std::size_t>(a - 1)] = b - 1;
    partner[static_cast<std::size_t>(b - 1)] = a - 1;
  }
  return ChordDiagram(partner);
}

const ChordDiagram kCrossing = ChordDiagram::parse("2: 3 4 1 2");
const ChordDiagram kNesting = ChordDiagram::parse("2: 4 3 2 1");

}  // namespace

TEST_CASE("parse and print") {
  CHECK(kCrossing.chords() == 2);
  CHECK(kCrossing.partner(0) == 2);
  CHECK(kCrossing.to_string() == "2: 3 4 1 2");
  CHECK_THROWS_AS(ChordDiagram::parse("2: 3 4 1"), ParseError);
  CHECK_THROWS_AS(ChordDiagram::parse("2 3 4 1 2"), ParseError);
  CHECK_THROWS_AS(ChordDiagram::parse("1: 1 2"), ParseError);
  CHECK_THROWS_AS(ChordDiagram({1, 1}), PreconditionError);
  CHECK_THROWS_AS(ChordDiagram({0, 1}), PreconditionError);
}

TEST_CASE("chords are indexed by left endpoint") {
  const ChordDiagram d = ChordDiagram::parse("3: 4 5 6 1 2 3");
  CHECK(d.left_end(0) == 0);
  CHECK(d.right_end(0) == 3);
  CHECK(d.chord_at(4) == 1);
  CHECK(d.chord_at(2) == 2);
}

TEST_CASE("connectivity basics") {
  CHECK(is_connected(kCrossing));
  CHECK_FALSE(is_connected(kNesting));
  CHECK(is_connected(ChordDiagram::single_chord()));
  CHECK_THROWS_AS(is_connected(ChordDiagram(std::vector<int>{})), PreconditionError);
  CHECK(is_k_connected(kCrossing, 2));
  CHECK_FALSE(is_k_connected(ChordDiagram::single_chord(), 2));
  CHECK(is_k_connected(ChordDiagram::single_chord(), 1));
}

TEST_CASE("enumeration order and size") {
  const std::vector<ChordDiagram> all2 = all_diagrams(2);
  REQUIRE(all2.size() == 3);
  CHECK(all2[0].to_string() == "2: 2 1 4 3");
  CHECK(all2[1].to_string() == "2: 3 4 1 2");
  CHECK(all2[2].to_string() == "2: 4 3 2 1");
  CHECK(all_diagrams(0).size() == 1);
  CHECK(all_diagrams(3).size() == 15);

  std::uint64_t count = 0;
  for_each_diagram(8, [&](const ChordDiagram&) { ++count; });
  CHECK(mpz_class(std::to_string(count)) == oracle::double_factorial(15));
  CHECK_THROWS_AS(for_each_diagram(5, [](const ChordDiagram&) {}, 4), ResourceError);
  CHECK_THROWS_AS(for_each_diagram(11, [](const ChordDiagram&) {}, 11), ResourceError);
}

TEST_CASE("enumeration agrees with an independent matching generator") {
  for (int n = 1; n <= 6; ++n) {
    std::set<std::vector<int>> mine;
    for_each_diagram(n, [&](const ChordDiagram& d) {
      mine.insert(std::vector<int>(d.partners().begin(), d.partners().end()));
    });
    std::set<std::vector<int>> theirs;
    for (const auto& m : oracle::matchings(n)) {
      const ChordDiagram d = to_diagram(m);
      theirs.insert(std::vector<int>(d.partners().begin(), d.partners().end()));
    }
    CHECK(mine == theirs);
  }
}

TEST_CASE("blocks partition the enumeration") {
  for (int n = 1; n <= 6; ++n) {
    std::vector<std::string> serial;
    for_each_diagram(n, [&](const ChordDiagram& d) { serial.push_back(d.to_string()); });
    std::vector<std::string> blocked;
    for (int b = 0; b < enumeration_blocks(n); ++b) {
      const EnumerationBlock blk = enumeration_block(n, b);
      for_each_diagram_in_block(n, blk.root_partner, blk.second_choice,
                                [&](const ChordDiagram& d) { blocked.push_back(d.to_string()); });
    }
    CHECK(serial == blocked);
  }
}

TEST_CASE("connectivity classes agree with the union-find oracle") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& m : oracle::matchings(n)) {
      const ChordDiagram d = to_diagram(m);
      REQUIRE(is_connected(d) == oracle::connected(m));
      REQUIRE(is_k_connected(d, 2) == oracle::two_connected(m));
    }
  }
}

TEST_CASE("k-connectivity is monotone in k") {
  for (int n = 1; n <= 6; ++n) {
    for_each_diagram(n, [&](const ChordDiagram& d) {
      for (int k = 2; k <= 4; ++k) {
        if (is_k_connected(d, k)) REQUIRE(is_k_connected(d, k - 1));
      }
    });
  }
}

TEST_CASE("reasons for connectivity-1") {
  CHECK(find_reasons_connectivity1(kCrossing).empty());
  CHECK(find_reasons_connectivity1(ChordDiagram::single_chord()).empty());

  // 1-4, 2-6, 3-5: positions 3..5 hold chord 3-5 plus one end of 1-4.
  const ChordDiagram d = ChordDiagram::from_one_based(std::vector<int>{4, 6, 5, 1, 3, 2});
  const std::vector<Reason> reasons = find_reasons_connectivity1(d);
  REQUIRE_FALSE(reasons.empty());
  for (const Reason& r : reasons) {
    CHECK(r.span.length() >= 3);
    CHECK(r.span.length() < d.positions() - 1);
    CHECK(is_reason(d.partners(), r.span));
    CHECK(d.chord_at(r.cut_position) == r.cut_chord);
    CHECK_FALSE(r.span.contains(d.partner(r.cut_position)));
  }

  int with_none = 0;
  for_each_diagram(4, [&](const ChordDiagram& x) {
    if (is_connected(x) && find_reasons_connectivity1(x).empty()) ++with_none;
  });
  CHECK(with_none == 7);
}

TEST_CASE("no reason iff 2-connected for connected diagrams") {
  for (int n = 2; n <= 6; ++n) {
    for_each_diagram(n, [&](const ChordDiagram& d) {
      if (!is_connected(d)) return;
      REQUIRE(find_reasons_connectivity1(d).empty() == is_k_connected(d, 2));
    });
  }
}

TEST_CASE("longest reason and coverage are consistent") {
  for_each_diagram(5, [&](const ChordDiagram& d) {
    if (!is_connected(d)) return;
    const auto reasons = find_reasons_connectivity1(d);
    const std::vector<bool> covered = reason_coverage(d.partners());
    for (int p = 0; p < d.positions(); ++p) {
      bool any = false;
      int longest = -1;
      for (const Reason& r : reasons) {
        any = any || r.span.contains(p);
        if (r.span.first == p) longest = std::max(longest, r.span.last);
      }
      REQUIRE(covered[static_cast<std::size_t>(p)] == any);
      Interval span;
      const bool found = longest_reason_from(d.partners(), p, span);
      REQUIRE(found == (longest >= 0));
      if (found) REQUIRE(span.last == longest);
    }
  });
}
