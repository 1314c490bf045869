#pragma once

#include <string>
#include <vector>

namespace px3 {

struct CriterionResult {
  int number = 0;
  std::string name;
  bool passed = false;
  std::string detail;  // metrics, or the first failure
  double seconds = 0.0;
};

// Runs the whole battery of end-to-end checks. Criteria are independent: an
// exception inside one marks it failed with the message and the rest still
// run. Every sample count, size limit, and bound is pinned in the
// implementation; reruns are deterministic.
std::vector<CriterionResult> run_acceptance();

bool all_passed(const std::vector<CriterionResult>& results);

// One line per criterion, "PASS"/"FAIL" first.
std::string render_acceptance_table(const std::vector<CriterionResult>& results);

}  // namespace px3
