#pragma once

#include <string>
#include <vector>

#include "chordgf/chord_diagram.hpp"

namespace chordgf {

struct CheckItem {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckItem> items;
  bool passed() const;
  /// First failing item, or nullptr.
  const CheckItem* first_failure() const;
};

/// Series identities run to `order`; exhaustive checks run on every chord
/// count up to min(order, max_chords).
struct VerifyOptions {
  int order = 30;
  int max_chords = 6;
};

std::vector<std::string> suite_names();  // lemmas, proposition, chain-rule, tables, bijection
/// Runs one suite by name, or all of them for "all". Throws
/// PreconditionError on an unknown name.
std::vector<SuiteResult> run_suite(const std::string& name, const VerifyOptions& options);

/// Connected diagrams on n chords for which "has no reason for
/// connectivity-1" and "2-connected" disagree.
std::uint64_t reason_criterion_mismatches(int n, int cap = kMaxEnumerationChords);

}  // namespace chordgf
