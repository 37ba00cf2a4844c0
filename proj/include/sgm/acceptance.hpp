#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sgm {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::vector<std::string> details;
  double seconds = 0;
};

struct AcceptanceOptions {
  std::vector<int> only;  // empty: all criteria
  uint64_t seed = 0;
};

/// Runs acceptance criteria 1..10 in order; each result carries its own
/// detail lines.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts = {});
CriterionResult run_criterion(int id, uint64_t seed = 0);

/// One "PASS"/"FAIL" line per criterion followed by indented details.
std::string format_results(const std::vector<CriterionResult>& results);

}  // namespace sgm
