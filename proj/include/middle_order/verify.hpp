#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace middle_order {

enum class Suite { bijection, sandwich, mesh, tables, mobius, involutions, heyting, parking, all };

Suite parse_suite(std::string_view name);
std::string_view suite_name(Suite suite);

struct CheckResult {
  std::string name;
  bool passed = false;
  /// Summary of what was checked, or a counterexample on failure.
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool passed() const;
  /// One "PASS name: detail" / "FAIL name: detail" line per check, then a summary line.
  std::string text() const;
};

struct VerifyOptions {
  /// Raises the per-check size caps to the largest sizes the checks are meant to reach.
  bool deep = false;
  /// When positive, overrides every per-check cap.
  int limit = 0;
};

/// Runs the invariant checks of `suite` for every size 1..n_max, each check clipped to its cap.
VerifyReport run_suite(Suite suite, int n_max, const VerifyOptions& options = {});

}  // namespace middle_order
