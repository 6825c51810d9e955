#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fortlib/combinatorics.hpp"

namespace fortlib {

struct ClaimResult {
  std::string id;
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
  double seconds = 0.0;
  double budget_seconds = 0.0;  // 0 means no wall-clock requirement
};

struct VerifyOptions {
  int max_dim = 4;  // 5 and 6 add the Q_5 / Q_6 minimum-fort and classification scans
  long long budget = kDefaultCandidateBudget;
  uint64_t seed = 20250808ull;
  int jobs = 1;
  std::string cache_dir;
};

// Runs every claim the library is expected to reproduce and reports one
// result per claim. A claim passes only if its values match exactly and it
// finishes inside its stated wall-clock budget.
std::vector<ClaimResult> run_verification_suite(const VerifyOptions& opts);

bool all_pass(const std::vector<ClaimResult>& results);

}  // namespace fortlib
