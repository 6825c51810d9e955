#include "fortlib/combinatorics.hpp"

#include <array>

#include "fortlib/errors.hpp"

namespace fortlib {

namespace {

constexpr int kMaxN = 64;

const std::array<std::array<uint64_t, kMaxN + 1>, kMaxN + 1>& binomial_table() {
  static const auto table = [] {
    std::array<std::array<uint64_t, kMaxN + 1>, kMaxN + 1> t{};
    for (int n = 0; n <= kMaxN; ++n) {
      t[n][0] = 1;
      for (int k = 1; k <= n; ++k) t[n][k] = t[n - 1][k - 1] + (k <= n - 1 ? t[n - 1][k] : 0);
    }
    return t;
  }();
  return table;
}

}  // namespace

uint64_t binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (n > kMaxN) throw invalid_input("binomial supported only up to n=64");
  return binomial_table()[n][k];
}

KSubsetScanner::KSubsetScanner(int n, int k) : n_(n), k_(k), cur_(n) {
  if (k < 0 || k > n) {
    done_ = true;
    return;
  }
  if (k == 0) {
    // single empty combination
    return;
  }
  idx_.resize(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) {
    idx_[static_cast<size_t>(i)] = i;
    cur_.set(i);
  }
}

KSubsetScanner KSubsetScanner::at_rank(int n, int k, uint64_t rank) {
  KSubsetScanner sc(n, k);
  if (sc.done_ || k == 0) return sc;
  sc.cur_.clear();
  // colex unranking: pick the largest element first
  uint64_t r = rank;
  for (int i = k - 1; i >= 0; --i) {
    int c = i;
    while (c + 1 <= n - 1 && binomial(c + 1, i + 1) <= r) ++c;
    sc.idx_[static_cast<size_t>(i)] = c;
    r -= binomial(c, i + 1);
    sc.cur_.set(c);
  }
  return sc;
}

void KSubsetScanner::advance() {
  if (done_) return;
  if (k_ == 0) {
    done_ = true;
    return;
  }
  // colex successor: bump the lowest index that has room, reset those below
  int i = 0;
  while (i < k_ &&
         idx_[static_cast<size_t>(i)] + 1 == (i + 1 < k_ ? idx_[static_cast<size_t>(i + 1)] : n_))
    ++i;
  if (i == k_) {
    done_ = true;
    return;
  }
  for (int j = 0; j <= i; ++j) cur_.reset(idx_[static_cast<size_t>(j)]);
  idx_[static_cast<size_t>(i)] += 1;
  cur_.set(idx_[static_cast<size_t>(i)]);
  for (int j = 0; j < i; ++j) {
    idx_[static_cast<size_t>(j)] = j;
    cur_.set(j);
  }
}

int resolve_jobs(int jobs) {
  if (jobs > 0) return jobs;
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

}  // namespace fortlib
