#include "fortlib/forts.hpp"

#include "fortlib/errors.hpp"
#include "fortlib/forcing.hpp"

namespace fortlib {

FortCheck check_fort(const Graph& g, const VertexSet& f) {
  FortCheck result;
  if (f.empty()) {
    result.empty_input = true;
    return result;
  }
  for (int u = 0; u < g.order(); ++u) {
    if (f.test(u)) continue;
    const VertexSet& nbrs = g.neighborhood(u);
    if (nbrs.intersection_count(f) == 1)
      result.violations.push_back({u, (nbrs & f).first()});
  }
  result.fort = result.violations.empty();
  return result;
}

bool is_fort(const Graph& g, const VertexSet& f) {
  if (f.empty()) return false;
  for (int u = 0; u < g.order(); ++u) {
    if (f.test(u)) continue;
    if (g.neighborhood(u).intersection_count(f) == 1) return false;
  }
  return true;
}

bool is_minimal_fort(const Graph& g, const VertexSet& f) {
  if (!is_fort(g, f)) throw invalid_input("is_minimal_fort requires a fort");
  VertexSet outside = f.complement();
  bool minimal = true;
  f.for_each([&](int v) {
    if (!minimal) return;
    VertexSet s = outside;
    s.set(v);
    if (!is_zero_forcing_set(g, s)) minimal = false;
  });
  return minimal;
}

FortCensus enumerate_minimal_forts(const Graph& g, int jobs) {
  int n = g.order();
  if (n > kMaxCensusVertices)
    throw resource_limit("full minimal-fort census needs n <= " +
                         std::to_string(kMaxCensusVertices) +
                         "; use enumerate_forts_of_size for size-limited scans");
  FortCensus census;
  census.graph_hash = g.canonical_hash();
  census.minimal_forts = filter_subsets(
      n, [&](const VertexSet& s) { return is_fort(g, s) && is_minimal_fort(g, s); }, jobs);
  census.complete = true;
  for (const auto& f : census.minimal_forts) census.by_size[f.count()] += 1;
  return census;
}

std::vector<VertexSet> enumerate_forts_of_size(const Graph& g, int k, long long budget,
                                               int jobs) {
  int n = g.order();
  if (k < 1 || k > n) throw invalid_input("fort size must be in [1, n]");
  if (n > 64 || static_cast<long long>(binomial(n, k)) > budget)
    throw resource_limit("candidate count C(" + std::to_string(n) + "," + std::to_string(k) +
                         ") exceeds the budget of " + std::to_string(budget));
  return filter_k_subsets(n, k, [&](const VertexSet& s) { return is_fort(g, s); }, jobs);
}

MinimumFort minimum_fort(const Graph& g, long long budget) {
  int n = g.order();
  long long remaining = budget;
  for (int k = 1; k <= n; ++k) {
    if (n > 64 || static_cast<long long>(binomial(n, k)) > remaining)
      throw resource_limit("budget exhausted before any fort was found");
    remaining -= static_cast<long long>(binomial(n, k));
    // colex order means the first hit is the smallest bitmask of its size
    for (KSubsetScanner sc(n, k); !sc.done(); sc.advance())
      if (is_fort(g, sc.current())) return {k, sc.current()};
  }
  throw internal_consistency_error("no fort found although V itself is one");
}

int failed_zf_number(const Graph& g, long long budget) {
  int n = g.order();
  int via_fort = n - minimum_fort(g, budget).size;
  if (n <= 13) {
    int direct = -1;  // the empty set always fails, so the scan terminates
    for (int size = n - 1; size >= 0 && direct < 0; --size)
      for (KSubsetScanner sc(n, size); !sc.done(); sc.advance())
        if (!is_zero_forcing_set(g, sc.current())) {
          direct = size;
          break;
        }
    if (direct != via_fort)
      throw internal_consistency_error(
          "failed zero forcing number mismatch: fort complement gives " +
          std::to_string(via_fort) + ", direct search gives " + std::to_string(direct));
  }
  return via_fort;
}

}  // namespace fortlib
