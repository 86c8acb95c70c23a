#include <doctest.h>

#include "chordgf/error.hpp"
#include "chordgf/verify.hpp"

using namespace chordgf;

TEST_CASE("each suite passes at small sizes") {
  for (const std::string& name : suite_names()) {
    const auto results = run_suite(name, {12, 5});
    REQUIRE(results.size() == 1);
    CHECK(results[0].suite == name);
    CHECK_FALSE(results[0].items.empty());
    const CheckItem* bad = results[0].first_failure();
    CHECK_MESSAGE(bad == nullptr, name << ": " << (bad ? bad->name + " " + bad->detail : ""));
  }
}

TEST_CASE("all runs every suite in order") {
  const auto results = run_suite("all", {8, 4});
  REQUIRE(results.size() == suite_names().size());
  for (std::size_t i = 0; i < results.size(); ++i) CHECK(results[i].suite == suite_names()[i]);
}

TEST_CASE("unknown suite") { CHECK_THROWS_AS(run_suite("nope", {}), PreconditionError); }

TEST_CASE("reason criterion kernel") {
  for (int n = 1; n <= 7; ++n) CHECK(reason_criterion_mismatches(n) == 0);
}
