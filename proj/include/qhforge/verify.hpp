#pragma once

#include <string>
#include <vector>

namespace qhforge::verify {

// One check of the verification suite: every documented identity of the
// catalog rings, classification and certificate, run at pinned bounds and
// tolerances (all checks are exact; budgets are wall-clock seconds).
struct CriterionResult {
  std::string name;
  bool passed = false;
  double seconds = 0.0;
  double budget_seconds = 0.0;
  std::string detail; // failure explanations, empty when passed
};

std::vector<CriterionResult> run_all();

}  // namespace qhforge::verify
