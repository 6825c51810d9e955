#pragma once

#include <string>
#include <vector>

#include "fortlib/errors.hpp"
#include "fortlib/graph.hpp"

namespace fortlib {

enum class FortGuarantee { fort, minimal_fort };

struct PredicateOutcome {
  std::string name;
  bool ok = false;
};

struct ConstructionResult {
  VertexSet result;  // on the product graph, index (u, u') = u * |V(H)| + u'
  FortGuarantee guarantee = FortGuarantee::fort;
  std::vector<PredicateOutcome> preconditions;
};

class precondition_error : public invalid_input {
 public:
  precondition_error(const std::string& msg, std::vector<PredicateOutcome> outcomes_)
      : invalid_input(msg), outcomes(std::move(outcomes_)) {}
  std::vector<PredicateOutcome> outcomes;
};

// F x F' on G box H. Minimal forts in, fort out; additionally minimal out
// when F has no two adjacent members. The output is re-verified against its
// guarantee on the explicit product graph, unconditionally.
ConstructionResult product_fort(const Graph& g, const VertexSet& f, const Graph& h,
                                const VertexSet& fp);

// Parity-aligned product fort for bipartite factors:
//   (F ∩ V1) x (F' ∩ V'1)  ∪  (F ∩ V2) x (F' ∩ V'2)
// with V1/V'1 the parts containing vertex 0 (swap_parts exchanges H's parts).
// Requires every member of F (resp. F') to have a neighbor inside F (resp.
// F'); with require_minimal, F and F' must additionally be minimal and every
// member of F' must have exactly one neighbor in F'. The guarantee is
// minimal-fort whenever the stronger predicates hold.
ConstructionResult bipartite_parity_fort(const Graph& g, const VertexSet& f, const Graph& h,
                                         const VertexSet& fp, bool require_minimal,
                                         bool swap_parts = false);

struct LiftResult {
  VertexSet lifted;       // over the (d+1)-cube, vertex v maps to {2v, 2v+1}
  int propagation_time = 0;
};

// Doubles a minimum zero forcing set of Q_d into one of Q_{d+1} with the
// same propagation time; both claims are re-verified.
LiftResult lift_zfs(const Graph& hypercube_d, const VertexSet& s);

}  // namespace fortlib
