// Acceptance suite: runs the full claim list at max dimension 6 and prints
// one pass/fail line per claim. Exits non-zero if any claim fails.
#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>

#include "fortlib/verify.hpp"

int main(int argc, char** argv) {
  fortlib::VerifyOptions opts;
  opts.max_dim = 6;
  opts.jobs = 0;  // machine parallelism
  for (int i = 1; i < argc - 1; ++i) {
    if (!strcmp(argv[i], "--max-dim")) opts.max_dim = atoi(argv[i + 1]);
    if (!strcmp(argv[i], "--budget")) opts.budget = atoll(argv[i + 1]);
    if (!strcmp(argv[i], "--seed")) opts.seed = strtoull(argv[i + 1], nullptr, 10);
    if (!strcmp(argv[i], "--jobs")) opts.jobs = atoi(argv[i + 1]);
  }

  auto claims = fortlib::run_verification_suite(opts);
  for (const auto& claim : claims) {
    printf("[%s] criterion %s: %s — %s", claim.pass ? "PASS" : "FAIL", claim.id.c_str(),
           claim.name.c_str(), claim.actual.c_str());
    if (claim.budget_seconds > 0)
      printf(" [%.2f s of %.0f s]", claim.seconds, claim.budget_seconds);
    else
      printf(" [%.2f s]", claim.seconds);
    printf("\n");
    if (!claim.pass) printf("       expected: %s\n", claim.expected.c_str());
  }
  bool ok = fortlib::all_pass(claims);
  printf("%s: %zu/%zu criteria\n", ok ? "PASS" : "FAIL",
         static_cast<size_t>(std::count_if(claims.begin(), claims.end(),
                                           [](const auto& c) { return c.pass; })),
         claims.size());
  return ok ? 0 : 1;
}
