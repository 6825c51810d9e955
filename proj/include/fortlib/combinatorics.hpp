#pragma once

#include <cstdint>
#include <thread>
#include <vector>

#include "fortlib/vertex_set.hpp"

namespace fortlib {

// Default cap on the number of candidate subsets an enumeration may visit.
inline constexpr long long kDefaultCandidateBudget = 100'000'000;

// C(n, k) for 0 <= n <= 64; every value fits in uint64_t.
uint64_t binomial(int n, int k);

// Iterates the k-element subsets of {0..n-1} in colexicographic order,
// which coincides with increasing bitmask value.
class KSubsetScanner {
 public:
  KSubsetScanner(int n, int k);

  // Scanner positioned at the combination of the given colex rank.
  static KSubsetScanner at_rank(int n, int k, uint64_t rank);

  bool done() const { return done_; }
  const VertexSet& current() const { return cur_; }
  void advance();

 private:
  int n_;
  int k_;
  std::vector<int> idx_;
  VertexSet cur_;
  bool done_ = false;
};

int resolve_jobs(int jobs);

// All k-subsets satisfying pred, in increasing bitmask order. With jobs > 1
// the colex rank range is split into contiguous chunks; chunk results are
// concatenated in rank order, so the output does not depend on jobs.
template <class Pred>
std::vector<VertexSet> filter_k_subsets(int n, int k, Pred&& pred, int jobs = 1) {
  std::vector<VertexSet> out;
  uint64_t total = binomial(n, k);
  if (total == 0) return out;
  jobs = resolve_jobs(jobs);
  if (jobs <= 1 || total < 4096) {
    for (KSubsetScanner sc(n, k); !sc.done(); sc.advance())
      if (pred(sc.current())) out.push_back(sc.current());
    return out;
  }
  uint64_t chunk = (total + jobs - 1) / jobs;
  std::vector<std::vector<VertexSet>> parts(static_cast<size_t>(jobs));
  std::vector<std::thread> threads;
  for (int t = 0; t < jobs; ++t) {
    uint64_t lo = chunk * static_cast<uint64_t>(t);
    uint64_t hi = std::min(total, lo + chunk);
    if (lo >= hi) break;
    threads.emplace_back([&, t, lo, hi] {
      KSubsetScanner sc = KSubsetScanner::at_rank(n, k, lo);
      for (uint64_t r = lo; r < hi; ++r, sc.advance())
        if (pred(sc.current())) parts[static_cast<size_t>(t)].push_back(sc.current());
    });
  }
  for (auto& th : threads) th.join();
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

// All non-empty subsets of {0..n-1} (n <= 24) satisfying pred, in increasing
// bitmask order. Same deterministic chunking as filter_k_subsets.
template <class Pred>
std::vector<VertexSet> filter_subsets(int n, Pred&& pred, int jobs = 1) {
  std::vector<VertexSet> out;
  uint64_t total = uint64_t{1} << n;
  jobs = resolve_jobs(jobs);
  if (jobs <= 1 || total < 4096) {
    for (uint64_t m = 1; m < total; ++m) {
      VertexSet s = VertexSet::from_mask(n, m);
      if (pred(s)) out.push_back(s);
    }
    return out;
  }
  uint64_t chunk = (total + jobs - 1) / jobs;
  std::vector<std::vector<VertexSet>> parts(static_cast<size_t>(jobs));
  std::vector<std::thread> threads;
  for (int t = 0; t < jobs; ++t) {
    uint64_t lo = std::max<uint64_t>(1, chunk * static_cast<uint64_t>(t));
    uint64_t hi = std::min(total, chunk * static_cast<uint64_t>(t) + chunk);
    if (lo >= hi) continue;
    threads.emplace_back([&, t, lo, hi] {
      for (uint64_t m = lo; m < hi; ++m) {
        VertexSet s = VertexSet::from_mask(n, m);
        if (pred(s)) parts[static_cast<size_t>(t)].push_back(s);
      }
    });
  }
  for (auto& th : threads) th.join();
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

}  // namespace fortlib
