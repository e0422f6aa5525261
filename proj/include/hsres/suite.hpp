#pragma once

// Reproduction suite: every reference value and inequality as a named check.

#include <cstdint>
#include <string>
#include <vector>

namespace hsres {

struct Check {
  std::string check_id;
  std::string description;
  std::string paper_anchor;  ///< the formula or statement being checked
  double computed = 0.0;
  double expected = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct SuiteOptions {
  std::uint64_t seed = 1729;
  /// Debug: evaluate Lambda^2 as tr(rho^2 G^2) + tr(rho G rho G).
  bool corrupt_lambda_sign = false;
};

/// Acceptance criterion grouping; check ids start with "accNN." for criterion
/// NN and "extra." otherwise.
struct CriterionSummary {
  int number = 0;
  std::string title;
  int checks = 0;
  int failed = 0;
  bool pass() const noexcept { return checks > 0 && failed == 0; }
};

struct SuiteReport {
  std::uint64_t seed = 0;
  std::vector<Check> checks;  ///< sorted by check_id

  bool all_pass() const;
  std::vector<CriterionSummary> criteria() const;
};

inline constexpr int kCriterionCount = 14;
const char* criterion_title(int number);

/// 0 for ids outside the "accNN." namespace.
int criterion_of(const std::string& check_id);

SuiteReport run_suite(const SuiteOptions& options = {});

/// {"seed", "summary", "checks": [{check_id, description, paper_anchor,
/// computed, expected, tolerance, pass}]}. Non-finite numbers become null.
std::string to_json(const SuiteReport& report, int indent = 2);

/// Shortest text that parses back to the same double.
std::string format_number(double v);

}  // namespace hsres
