#pragma once

// Exhaustive invariant suites over all sizes 1..max_n. Each check reports a
// name, a verdict and, on failure, the first counterexample found.

#include <string>
#include <string_view>
#include <vector>

namespace nomcode {

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = true;
  std::string detail;  // first failing case, empty on success
};

/// codec, trees, catalan, flip, patterns (the order used by "all").
const std::vector<std::string>& suite_names();

bool is_suite(std::string_view name);

/// Runs one suite, or every suite in order for "all". Throws
/// std::invalid_argument for an unknown suite name.
std::vector<CheckResult> run_suite(std::string_view suite, int max_n);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace nomcode
