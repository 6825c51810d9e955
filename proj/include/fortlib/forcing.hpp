#pragma once

#include <utility>
#include <vector>

#include "fortlib/errors.hpp"
#include "fortlib/graph.hpp"

namespace fortlib {

struct Force {
  int forcer;
  int forced;
  bool operator==(const Force&) const = default;
};

// Record of running the standard color change rule to its fixed point.
// Steps are simultaneous: every force in steps[t] is valid with respect to
// the coloring at the start of step t.
struct ForcingTrace {
  VertexSet initial;
  std::vector<std::vector<Force>> steps;
  VertexSet final;

  int propagation_steps() const { return static_cast<int>(steps.size()); }
};

class not_zero_forcing_error : public invalid_input {
 public:
  not_zero_forcing_error(std::string msg, VertexSet stalled)
      : invalid_input(std::move(msg)), stalled_final(std::move(stalled)) {}
  VertexSet stalled_final;
};

// One simultaneous time step. A pair (u, v) is listed iff u is filled, v is
// not, and v is u's only unfilled neighbor, all judged against `filled`.
// When several vertices can force the same v, the smallest-index forcer is
// recorded and v is forced once.
std::pair<std::vector<Force>, VertexSet> forcing_step(const Graph& g, const VertexSet& filled);

ForcingTrace closure(const Graph& g, const VertexSet& start);

bool is_zero_forcing_set(const Graph& g, const VertexSet& s);

// Number of time steps the closure of a zero forcing set takes; throws
// not_zero_forcing_error (carrying the stalled final set) otherwise.
int propagation_time(const Graph& g, const VertexSet& s);

// True iff no force applies to s and s != V.
bool is_stalled(const Graph& g, const VertexSet& s);

}  // namespace fortlib
