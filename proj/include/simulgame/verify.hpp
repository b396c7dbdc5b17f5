#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "simulgame/engine.hpp"

namespace simulgame::verify {

enum class Suite { Reference, Properties, All };

std::optional<Suite> parse_suite(std::string_view name);
const char* suite_name(Suite s) noexcept;

struct Observation {
  std::string actual;
  std::string detail;
};

struct Check {
  std::string id;
  int criterion;  // 1..14 for acceptance criteria, 0 for supplementary checks
  Suite suite;    // Reference or Properties
  std::string expected;
  std::function<Observation()> run;
};

struct CheckResult {
  std::string id;
  int criterion;
  std::string expected;
  std::string actual;
  std::string detail;
  bool passed;
  double seconds;
};

/// All checks in manifest order.
const std::vector<Check>& manifest();

/// Every game expression the manifest evaluates, with its convention.
struct ManifestPosition {
  std::string expr;
  Convention convention;
};
const std::vector<ManifestPosition>& manifest_positions();

/// Runs the checks of `suite` (All = every check). Parallel execution runs
/// checks concurrently; results always come back in manifest order.
std::vector<CheckResult> run_suite(Suite suite, Execution execution = Execution::Serial);

}  // namespace simulgame::verify
