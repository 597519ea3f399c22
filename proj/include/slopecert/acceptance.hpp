#pragma once

// Desk-scale acceptance checks, shared by the acceptance test binary and the
// `selftest` subcommand.

#include <iosfwd>
#include <string>
#include <vector>

namespace slopecert {

struct CheckResult {
  std::string id;
  std::string name;
  bool passed = false;
  std::string detail;  // first failure, or a short summary
};

/// Criteria 1 through 9, in order.
std::vector<CheckResult> run_acceptance_suite();

/// Each documented reference example, one result per example.
std::vector<CheckResult> run_reference_examples();

/// One "PASS|FAIL  id  name  detail" line per result. Returns true if all pass.
bool print_results(std::ostream& out, const std::vector<CheckResult>& results);

}  // namespace slopecert
