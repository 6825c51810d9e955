#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fortlib/forts.hpp"
#include "fortlib/graph.hpp"
#include "fortlib/rational.hpp"

namespace fortlib {

struct CoverResult {
  int size = 0;
  VertexSet chosen;  // over the column universe
};

// Exact minimum-cardinality cover: pick columns so that every row contains a
// picked column. Branches on the uncovered row with the fewest candidates;
// lower bound from greedy disjoint-row counting; initial incumbent greedy.
CoverResult solve_min_cover(int n_cols, const std::vector<VertexSet>& rows);

struct PackingResult {
  int count = 0;
  std::vector<int> chosen;  // indices into items
};

// Exact maximum set packing: largest subfamily of pairwise disjoint items.
// Items are visited in ascending (size, bitmask) order; bound is the
// free-vertex / smallest-remaining-item quotient.
PackingResult solve_max_packing(const std::vector<VertexSet>& items, int universe);

struct ZfsResult {
  int z = 0;
  VertexSet witness;
};

// Z(G) by branch-and-bound set cover over the minimal forts (a set is zero
// forcing iff it meets every fort). The witness is re-verified by closure.
ZfsResult min_zero_forcing_number(const Graph& g, const FortCensus& census);

// Ascending-k scan over all subsets; fallback when no census is available.
ZfsResult min_zero_forcing_number_exhaustive(const Graph& g,
                                             long long budget = kDefaultCandidateBudget);

// Census route when n allows one, exhaustive otherwise.
ZfsResult zero_forcing_number(const Graph& g, long long budget = kDefaultCandidateBudget,
                              int jobs = 1);

std::vector<VertexSet> enumerate_minimum_zfs(const Graph& g, int z,
                                             long long budget = kDefaultCandidateBudget,
                                             int jobs = 1);

// Number of zero forcing sets of size exactly k (full scan).
long long count_zfs_of_size(const Graph& g, int k, long long budget = kDefaultCandidateBudget,
                            int jobs = 1);

struct PtSpectrum {
  int z = 0;
  int pt_min = 0;
  int pt_max = 0;
  std::vector<int> spectrum;            // sorted distinct propagation times
  std::map<int, VertexSet> witnesses;   // smallest-bitmask witness per time
};

// Propagation times over all minimum zero forcing sets.
PtSpectrum pt_spectrum(const Graph& g, long long budget = kDefaultCandidateBudget, int jobs = 1);

struct FortNumberResult {
  int value = 0;
  std::vector<VertexSet> family;  // pairwise disjoint forts
};

// ft(G): maximum number of pairwise disjoint forts. Packing over minimal
// forts is enough since every fort contains a minimal one.
FortNumberResult fort_number(const Graph& g, const FortCensus& census);

struct WitnessedValue {
  int value = 0;
  VertexSet witness;
};

inline constexpr int kMaxDominationVertices = 16;

WitnessedValue domination_number(const Graph& g);
WitnessedValue total_domination_number(const Graph& g);
WitnessedValue open_packing_number(const Graph& g);

// Aggregated values for the CLI `params` command; unset fields were not
// requested. Every witness is re-verified by the solver that produced it.
struct ParameterReport {
  std::string graph_hash;
  int n = 0;
  std::optional<ZfsResult> zero_forcing;
  std::optional<Rational> fractional_zero_forcing;
  std::optional<FortNumberResult> fort_num;
  std::optional<PtSpectrum> propagation;
  std::optional<WitnessedValue> domination;
  std::optional<WitnessedValue> total_domination;
  std::optional<WitnessedValue> open_packing;
  std::optional<int> failed_zf;
};

}  // namespace fortlib
