#pragma once

#include <map>
#include <string>
#include <vector>

#include "fortlib/combinatorics.hpp"
#include "fortlib/graph.hpp"

namespace fortlib {

// A fort violation: a vertex outside F whose unique neighbor in F would let
// it be forced from the complement.
struct Violation {
  int outside_vertex;
  int inside_neighbor;
  bool operator==(const Violation&) const = default;
};

struct FortCheck {
  bool fort = false;
  bool empty_input = false;
  std::vector<Violation> violations;
};

FortCheck check_fort(const Graph& g, const VertexSet& f);

// Cheap path used by subset scans; stops at the first violation.
bool is_fort(const Graph& g, const VertexSet& f);

// F minimal <=> for every v in F, (V \ F) + v is a zero forcing set,
// i.e. F \ {v} contains no fort. Needs |F| closures instead of a 2^|F|
// subset scan; the test suite cross-validates the criterion against the
// brute-force scan on every fort of Q_2 and Q_3.
bool is_minimal_fort(const Graph& g, const VertexSet& f);

struct FortCensus {
  std::string graph_hash;
  bool complete = false;
  std::vector<VertexSet> minimal_forts;  // increasing bitmask order
  std::map<int, long long> by_size;
};

inline constexpr int kMaxCensusVertices = 16;

// Full 2^n scan keeping minimal forts; n <= 16.
FortCensus enumerate_minimal_forts(const Graph& g, int jobs = 1);

// All size-k forts by k-subset iteration, increasing bitmask order.
std::vector<VertexSet> enumerate_forts_of_size(const Graph& g, int k,
                                               long long budget = kDefaultCandidateBudget,
                                               int jobs = 1);

struct MinimumFort {
  int size = 0;
  VertexSet witness;
};

// Ascending-k scan; the witness is the smallest-bitmask fort of minimum size.
MinimumFort minimum_fort(const Graph& g, long long budget = kDefaultCandidateBudget);

// n - minimum fort size; for n <= 13 double-checked by direct maximization
// of |S| over subsets whose closure is not all of V.
int failed_zf_number(const Graph& g, long long budget = kDefaultCandidateBudget);

}  // namespace fortlib
