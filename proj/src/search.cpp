#include "fortlib/search.hpp"

#include <algorithm>
#include <numeric>

#include "fortlib/errors.hpp"
#include "fortlib/forcing.hpp"

namespace fortlib {

namespace {

struct CoverSearch {
  int n_cols;
  const std::vector<VertexSet>& rows;
  int n_rows;
  std::vector<VertexSet> col_rows;  // rows covered by each column
  VertexSet all_rows;
  int best;
  VertexSet best_chosen;

  CoverSearch(int n_cols_, const std::vector<VertexSet>& rows_)
      : n_cols(n_cols_),
        rows(rows_),
        n_rows(static_cast<int>(rows_.size())),
        col_rows(static_cast<size_t>(n_cols_), VertexSet(n_rows)),
        all_rows(VertexSet::full(n_rows)),
        best(n_cols_ + 1),
        best_chosen(n_cols_) {
    for (int i = 0; i < n_rows; ++i)
      rows[static_cast<size_t>(i)].for_each(
          [&](int v) { col_rows[static_cast<size_t>(v)].set(i); });
  }

  VertexSet greedy() const {
    VertexSet chosen(n_cols);
    VertexSet covered(n_rows);
    while (covered != all_rows) {
      int best_col = -1, best_gain = -1;
      for (int v = 0; v < n_cols; ++v) {
        if (chosen.test(v)) continue;
        int gain = col_rows[static_cast<size_t>(v)].count() -
                   col_rows[static_cast<size_t>(v)].intersection_count(covered);
        if (gain > best_gain) best_gain = gain, best_col = v;
      }
      chosen.set(best_col);
      covered |= col_rows[static_cast<size_t>(best_col)];
    }
    return chosen;
  }

  // Greedily collected pairwise-disjoint uncovered rows each need their own column.
  int lower_bound(const VertexSet& covered) const {
    VertexSet blocked(n_cols);
    int count = 0;
    for (int i = 0; i < n_rows; ++i) {
      if (covered.test(i)) continue;
      if (!rows[static_cast<size_t>(i)].intersects(blocked)) {
        blocked |= rows[static_cast<size_t>(i)];
        ++count;
      }
    }
    return count;
  }

  void recurse(const VertexSet& covered, VertexSet& chosen, int chosen_count) {
    if (covered == all_rows) {
      if (chosen_count < best) {
        best = chosen_count;
        best_chosen = chosen;
      }
      return;
    }
    if (chosen_count + lower_bound(covered) >= best) return;
    int branch_row = -1, fewest = n_cols + 1;
    for (int i = 0; i < n_rows; ++i) {
      if (covered.test(i)) continue;
      int c = rows[static_cast<size_t>(i)].count();
      if (c < fewest) fewest = c, branch_row = i;
    }
    rows[static_cast<size_t>(branch_row)].for_each([&](int v) {
      chosen.set(v);
      recurse(covered | col_rows[static_cast<size_t>(v)], chosen, chosen_count + 1);
      chosen.reset(v);
    });
  }

  CoverResult run() {
    VertexSet incumbent = greedy();
    best = incumbent.count();
    best_chosen = incumbent;
    VertexSet chosen(n_cols);
    recurse(VertexSet(n_rows), chosen, 0);
    return {best, best_chosen};
  }
};

struct PackingSearch {
  std::vector<VertexSet> items;  // ascending (size, mask), empty items split off
  std::vector<int> original_index;
  std::vector<int> always_packed;  // empty items conflict with nothing
  int universe;
  std::vector<int> suffix_min_size;
  int best = -1;
  std::vector<int> best_chosen;
  std::vector<int> chosen;

  PackingSearch(const std::vector<VertexSet>& in, int universe_) : universe(universe_) {
    std::vector<int> order(in.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      int ca = in[static_cast<size_t>(a)].count(), cb = in[static_cast<size_t>(b)].count();
      if (ca != cb) return ca < cb;
      return in[static_cast<size_t>(a)] < in[static_cast<size_t>(b)];
    });
    for (int idx : order) {
      if (in[static_cast<size_t>(idx)].empty()) {
        always_packed.push_back(idx);
        continue;
      }
      items.push_back(in[static_cast<size_t>(idx)]);
      original_index.push_back(idx);
    }
    suffix_min_size.assign(items.size() + 1, universe + 1);
    for (size_t i = items.size(); i-- > 0;)
      suffix_min_size[i] = std::min(suffix_min_size[i + 1], items[i].count());
  }

  void recurse(size_t from, const VertexSet& used, int free_count, int count) {
    if (count > best) {
      best = count;
      best_chosen = chosen;
    }
    for (size_t j = from; j < items.size(); ++j) {
      if (count + static_cast<int>(items.size() - j) <= best) return;
      if (count + free_count / suffix_min_size[j] <= best) return;
      if (items[j].intersects(used)) continue;
      chosen.push_back(static_cast<int>(j));
      recurse(j + 1, used | items[j], free_count - items[j].count(), count + 1);
      chosen.pop_back();
    }
  }

  PackingResult run() {
    recurse(0, VertexSet(universe), universe, 0);
    PackingResult result;
    result.count = std::max(best, 0) + static_cast<int>(always_packed.size());
    for (int j : best_chosen) result.chosen.push_back(original_index[static_cast<size_t>(j)]);
    result.chosen.insert(result.chosen.end(), always_packed.begin(), always_packed.end());
    std::sort(result.chosen.begin(), result.chosen.end());
    return result;
  }
};

}  // namespace

CoverResult solve_min_cover(int n_cols, const std::vector<VertexSet>& rows) {
  for (const auto& row : rows) {
    if (row.universe() != n_cols) throw invalid_input("cover row universe mismatch");
    if (row.empty()) throw invalid_input("cover rows must be non-empty");
  }
  if (rows.empty()) return {0, VertexSet(n_cols)};
  return CoverSearch(n_cols, rows).run();
}

PackingResult solve_max_packing(const std::vector<VertexSet>& items, int universe) {
  for (const auto& item : items)
    if (item.universe() != universe) throw invalid_input("packing item universe mismatch");
  return PackingSearch(items, universe).run();
}

ZfsResult min_zero_forcing_number(const Graph& g, const FortCensus& census) {
  if (!census.complete)
    throw invalid_input("min_zero_forcing_number needs a complete census");
  CoverResult cover = solve_min_cover(g.order(), census.minimal_forts);
  if (!is_zero_forcing_set(g, cover.chosen))
    throw internal_consistency_error("minimum fort cover is not a zero forcing set");
  return {cover.size, cover.chosen};
}

ZfsResult min_zero_forcing_number_exhaustive(const Graph& g, long long budget) {
  int n = g.order();
  if (n > kMaxCensusVertices)
    throw resource_limit("exhaustive zero-forcing scan needs n <= 16");
  long long remaining = budget;
  for (int k = 1; k <= n; ++k) {
    if (static_cast<long long>(binomial(n, k)) > remaining)
      throw resource_limit("budget exhausted before a zero forcing set was found");
    remaining -= static_cast<long long>(binomial(n, k));
    for (KSubsetScanner sc(n, k); !sc.done(); sc.advance())
      if (is_zero_forcing_set(g, sc.current())) return {k, sc.current()};
  }
  throw internal_consistency_error("V itself always forces");
}

ZfsResult zero_forcing_number(const Graph& g, long long budget, int jobs) {
  if (g.order() <= kMaxCensusVertices)
    return min_zero_forcing_number(g, enumerate_minimal_forts(g, jobs));
  return min_zero_forcing_number_exhaustive(g, budget);
}

std::vector<VertexSet> enumerate_minimum_zfs(const Graph& g, int z, long long budget, int jobs) {
  int n = g.order();
  if (z < 0 || z > n) throw invalid_input("zero forcing size out of range");
  if (n > 64 || static_cast<long long>(binomial(n, z)) > budget)
    throw resource_limit("C(" + std::to_string(n) + "," + std::to_string(z) +
                         ") exceeds the budget of " + std::to_string(budget));
  return filter_k_subsets(n, z, [&](const VertexSet& s) { return is_zero_forcing_set(g, s); },
                          jobs);
}

long long count_zfs_of_size(const Graph& g, int k, long long budget, int jobs) {
  return static_cast<long long>(enumerate_minimum_zfs(g, k, budget, jobs).size());
}

PtSpectrum pt_spectrum(const Graph& g, long long budget, int jobs) {
  ZfsResult z = zero_forcing_number(g, budget, jobs);
  std::vector<VertexSet> sets = enumerate_minimum_zfs(g, z.z, budget, jobs);
  PtSpectrum result;
  result.z = z.z;
  for (const auto& s : sets) {
    int pt = propagation_time(g, s);
    if (!result.witnesses.count(pt)) result.witnesses[pt] = s;  // scan order = smallest mask
  }
  for (const auto& [pt, witness] : result.witnesses) result.spectrum.push_back(pt);
  result.pt_min = result.spectrum.front();
  result.pt_max = result.spectrum.back();
  return result;
}

FortNumberResult fort_number(const Graph& g, const FortCensus& census) {
  if (!census.complete) throw invalid_input("fort_number needs a complete census");
  PackingResult packing = solve_max_packing(census.minimal_forts, g.order());
  FortNumberResult result;
  result.value = packing.count;
  for (int idx : packing.chosen)
    result.family.push_back(census.minimal_forts[static_cast<size_t>(idx)]);
  for (size_t i = 0; i < result.family.size(); ++i) {
    if (!is_fort(g, result.family[i]))
      throw internal_consistency_error("fort-number family member is not a fort");
    for (size_t j = i + 1; j < result.family.size(); ++j)
      if (result.family[i].intersects(result.family[j]))
        throw internal_consistency_error("fort-number family is not disjoint");
  }
  return result;
}

namespace {

void check_domination_size(const Graph& g) {
  if (g.order() > kMaxDominationVertices)
    throw resource_limit("domination-type solvers need n <= " +
                         std::to_string(kMaxDominationVertices));
}

}  // namespace

WitnessedValue domination_number(const Graph& g) {
  check_domination_size(g);
  std::vector<VertexSet> rows;
  for (int u = 0; u < g.order(); ++u) rows.push_back(g.closed_neighborhood(u));
  CoverResult cover = solve_min_cover(g.order(), rows);
  for (int u = 0; u < g.order(); ++u)
    if (!cover.chosen.test(u) && !cover.chosen.intersects(g.neighborhood(u)))
      throw internal_consistency_error("dominating-set witness fails to dominate " +
                                       std::to_string(u));
  return {cover.size, cover.chosen};
}

WitnessedValue total_domination_number(const Graph& g) {
  check_domination_size(g);
  std::vector<VertexSet> rows;
  for (int u = 0; u < g.order(); ++u) {
    if (g.degree(u) == 0)
      throw invalid_input("total domination undefined: vertex " + std::to_string(u) +
                          " is isolated");
    rows.push_back(g.neighborhood(u));
  }
  CoverResult cover = solve_min_cover(g.order(), rows);
  for (int u = 0; u < g.order(); ++u)
    if (!cover.chosen.intersects(g.neighborhood(u)))
      throw internal_consistency_error("total-dominating witness fails at " + std::to_string(u));
  return {cover.size, cover.chosen};
}

WitnessedValue open_packing_number(const Graph& g) {
  check_domination_size(g);
  std::vector<VertexSet> items;
  for (int v = 0; v < g.order(); ++v) items.push_back(g.neighborhood(v));
  PackingResult packing = solve_max_packing(items, g.order());
  VertexSet witness(g.order());
  for (int v : packing.chosen) witness.set(v);
  for (size_t i = 0; i < packing.chosen.size(); ++i)
    for (size_t j = i + 1; j < packing.chosen.size(); ++j)
      if (g.neighborhood(packing.chosen[i]).intersects(g.neighborhood(packing.chosen[j])))
        throw internal_consistency_error("open-packing witness has intersecting neighborhoods");
  return {packing.count, witness};
}

}  // namespace fortlib
