#include <doctest.h>

#include "chordgf/census.hpp"
#include "chordgf/decomposition.hpp"
#include "chordgf/error.hpp"

using namespace chordgf;

TEST_CASE("single chord") {
  const Decomposition dec = decompose_connected(ChordDiagram::single_chord());
  CHECK(dec.kind == DecompositionCase::SingleChord);
  CHECK(recompose(dec) == ChordDiagram::single_chord());
  CHECK(dec.chords() == 1);
}

TEST_CASE("disconnected input is rejected") {
  CHECK_THROWS_AS(decompose_connected(ChordDiagram::parse("2: 2 1 4 3")), PreconditionError);
  CHECK_THROWS_AS(decompose_connected(ChordDiagram(std::vector<int>{})), PreconditionError);
}

TEST_CASE("root-covered witness at four chords") {
  int seen = 0;
  for_each_diagram(4, [&](const ChordDiagram& d) {
    if (!is_connected(d)) return;
    const Decomposition dec = decompose_connected(d);
    if (dec.kind != DecompositionCase::RootCovered) return;
    ++seen;
    REQUIRE(dec.root_block.has_value());
    CHECK(recompose(dec) == d);
    CHECK(dec.chords() == 4);
  });
  CHECK(seen == 7);
}

TEST_CASE("exhaustive round trip and structure") {
  for (int n = 1; n <= 7; ++n) {
    for_each_diagram(n, [&](const ChordDiagram& d) {
      if (!is_connected(d)) return;
      const Decomposition dec = decompose_connected(d);
      REQUIRE(recompose(dec) == d);
      REQUIRE(dec.chords() == n);
      if (dec.kind == DecompositionCase::SingleChord) return;
      // The core is 2-connected and every attachment connected.
      REQUIRE(is_k_connected(dec.core, 2));
      REQUIRE(static_cast<int>(dec.attachments.size()) == dec.core.positions());
      for (const ChordDiagram& a : dec.attachments) REQUIRE(is_connected(a));
      if (dec.root_block) REQUIRE(is_connected(*dec.root_block));
    });
  }
}

TEST_CASE("parallel round trip kernel") {
  for (int n = 1; n <= 7; ++n) CHECK(round_trip_failures_parallel(n) == 0);
}

TEST_CASE("malformed decompositions are rejected") {
  Decomposition dec = decompose_connected(ChordDiagram::parse("2: 3 4 1 2"));
  REQUIRE(dec.kind == DecompositionCase::RootFree);
  Decomposition missing = dec;
  missing.attachments.pop_back();
  CHECK_THROWS_AS(recompose(missing), PreconditionError);
  Decomposition disconnected = dec;
  disconnected.attachments[0] = ChordDiagram::parse("2: 2 1 4 3");
  CHECK_THROWS_AS(recompose(disconnected), PreconditionError);
  Decomposition no_block = dec;
  no_block.kind = DecompositionCase::RootCovered;
  CHECK_THROWS_AS(recompose(no_block), PreconditionError);
}
