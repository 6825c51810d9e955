#pragma once

#include <vector>

#include "fortlib/forts.hpp"
#include "fortlib/graph.hpp"
#include "fortlib/rational.hpp"

namespace fortlib {

// min sum(x_v) subject to sum_{v in row} x_v >= 1 per row, x >= 0.
struct CoveringLp {
  int n_vars = 0;
  std::vector<VertexSet> rows;
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpSolution {
  Rational value;
  std::vector<Rational> weights;  // one per variable
  LpStatus status = LpStatus::optimal;
  std::vector<Rational> dual;  // one multiplier per row
};

// Exact optimum by simplex over rationals with Bland's pivot rule; no
// floating point anywhere. The primal weights and the dual multipliers are
// both verified before returning (weights >= 0, every row sum >= 1, y >= 0,
// per-variable dual column sums <= 1, equal objectives).
LpSolution solve_covering_lp(const CoveringLp& lp);

// Optimum of the covering relaxation over the minimal-fort rows. Minimal
// rows suffice: weights are non-negative and every fort contains a minimal
// fort, so the dropped constraints are implied.
Rational fractional_zf(const Graph& g, const FortCensus& census);

}  // namespace fortlib
