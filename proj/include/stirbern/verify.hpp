#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace stirbern {

enum class Suite { core, derivatives, thm41, thm42, conjecture, all };

Suite parse_suite(std::string_view s);

struct CheckResult {
  std::string name;
  std::string range;
  bool exact = false;       // exact checks report a mismatch count as residual
  double residual = 0.0;    // max relative residual, or mismatch count
  double tolerance = 0.0;   // unused for exact checks
  bool passed = false;
  std::string failure;      // first failing case, if any
};

struct VerifyOptions {
  std::optional<int> n_max;   // per-suite default when empty
  std::optional<double> tol;  // per-suite default when empty
};

std::vector<CheckResult> run_suite(Suite suite, const VerifyOptions& opts = {});

// One line per check: "PASS name range residual"; failing checks append the case.
std::string render_report(const std::vector<CheckResult>& results);
std::string render_report_json(const std::vector<CheckResult>& results);

inline bool all_passed(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (!r.passed) return false;
  return true;
}

}  // namespace stirbern
