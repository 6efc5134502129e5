#pragma once

// Exact verification suites behind `resind verify`: character-table checks,
// dense chain identities at small sizes, branching/normalization identities,
// and the character cross-checks.  Each check reports pass/fail with a
// failure description; the fault-injection hook corrupts the table so the
// suite demonstrably catches broken inputs.

#include <resind/group_table.hpp>

#include <string>
#include <vector>

namespace resind_cli {

// accepts builtin specs (with "cyclic2" style shorthands) or a JSON file path
resind::FiniteGroupTable resolve_group_table(const std::string& spec);

struct VerifySettings {
  std::vector<std::string> groups;  // default: trivial, cyclic(2), s3, dihedral(4)
  int chain_cap = 0;                // 0 = per-group default (5 small, 3 large)
  int branch_cap = 8;
  int norm_cap = 6;
  int cycle_cap = 0;                // 0 = per-group default (5 small, 3 large)
  int orth_cap = 0;                 // 0 = per-group default (4 small, 2 large)
  int sigma_cap = 10;
  bool inject_fault = false;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  double seconds = 0;
  std::string detail;  // empty on pass, failure description otherwise
};

struct SuiteReport {
  std::vector<CheckResult> checks;

  bool all_passed() const;
};

SuiteReport run_verification(const VerifySettings& settings);

// one line per check plus a summary line; returns 0 when everything passed
int print_report(const SuiteReport& rep);

}  // namespace resind_cli
