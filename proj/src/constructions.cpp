#include "fortlib/constructions.hpp"

#include "fortlib/forcing.hpp"
#include "fortlib/forts.hpp"

namespace fortlib {

namespace {

bool has_adjacent_members(const Graph& g, const VertexSet& f) {
  bool found = false;
  f.for_each([&](int v) {
    if (!found && g.neighborhood(v).intersects(f)) found = true;
  });
  return found;
}

bool every_member_has_neighbor_in(const Graph& g, const VertexSet& f) {
  bool ok = true;
  f.for_each([&](int v) {
    if (ok && !g.neighborhood(v).intersects(f)) ok = false;
  });
  return ok;
}

bool every_member_has_unique_neighbor_in(const Graph& g, const VertexSet& f) {
  bool ok = true;
  f.for_each([&](int v) {
    if (ok && g.neighborhood(v).intersection_count(f) != 1) ok = false;
  });
  return ok;
}

void require(std::vector<PredicateOutcome>& outcomes, const std::string& context) {
  for (const auto& o : outcomes)
    if (!o.ok) throw precondition_error(context + ": precondition failed: " + o.name, outcomes);
}

void verify_guarantee(const Graph& product, ConstructionResult& result,
                      const std::string& context) {
  if (!is_fort(product, result.result))
    throw internal_consistency_error(context + ": constructed set is not a fort");
  if (result.guarantee == FortGuarantee::minimal_fort &&
      !is_minimal_fort(product, result.result))
    throw internal_consistency_error(context + ": constructed fort is not minimal");
}

}  // namespace

ConstructionResult product_fort(const Graph& g, const VertexSet& f, const Graph& h,
                                const VertexSet& fp) {
  ConstructionResult result;
  bool f_fort = is_fort(g, f);
  bool fp_fort = is_fort(h, fp);
  result.preconditions.push_back({"F is a minimal fort of G", f_fort && is_minimal_fort(g, f)});
  result.preconditions.push_back(
      {"F' is a minimal fort of H", fp_fort && is_minimal_fort(h, fp)});
  require(result.preconditions, "product_fort");

  bool independent = !has_adjacent_members(g, f);
  result.preconditions.push_back({"F has no adjacent members", independent});
  result.guarantee = independent ? FortGuarantee::minimal_fort : FortGuarantee::fort;

  Graph product = Graph::cartesian_product(g, h);
  result.result = VertexSet(product.order());
  int nh = h.order();
  f.for_each([&](int u) { fp.for_each([&](int up) { result.result.set(u * nh + up); }); });
  verify_guarantee(product, result, "product_fort");
  return result;
}

ConstructionResult bipartite_parity_fort(const Graph& g, const VertexSet& f, const Graph& h,
                                         const VertexSet& fp, bool require_minimal,
                                         bool swap_parts) {
  ConstructionResult result;
  auto parts_g = g.bipartition();
  auto parts_h = h.bipartition();
  result.preconditions.push_back({"G is bipartite", parts_g.has_value()});
  result.preconditions.push_back({"H is bipartite", parts_h.has_value()});
  bool f_fort = is_fort(g, f);
  bool fp_fort = is_fort(h, fp);
  result.preconditions.push_back({"F is a fort of G", f_fort});
  result.preconditions.push_back({"F' is a fort of H", fp_fort});
  result.preconditions.push_back(
      {"every member of F has a neighbor in F", every_member_has_neighbor_in(g, f)});
  result.preconditions.push_back(
      {"every member of F' has a neighbor in F'", every_member_has_neighbor_in(h, fp)});
  require(result.preconditions, "bipartite_parity_fort");

  bool f_minimal = is_minimal_fort(g, f);
  bool fp_minimal = is_minimal_fort(h, fp);
  bool fp_unique = every_member_has_unique_neighbor_in(h, fp);
  result.preconditions.push_back({"F is minimal", f_minimal});
  result.preconditions.push_back({"F' is minimal", fp_minimal});
  result.preconditions.push_back(
      {"every member of F' has exactly one neighbor in F'", fp_unique});
  if (require_minimal) require(result.preconditions, "bipartite_parity_fort");
  result.guarantee = (f_minimal && fp_minimal && fp_unique) ? FortGuarantee::minimal_fort
                                                            : FortGuarantee::fort;

  VertexSet g1 = parts_g->part0, g2 = parts_g->part1;
  VertexSet h1 = parts_h->part0, h2 = parts_h->part1;
  if (swap_parts) std::swap(h1, h2);
  Graph product = Graph::cartesian_product(g, h);
  result.result = VertexSet(product.order());
  int nh = h.order();
  (f & g1).for_each(
      [&](int u) { (fp & h1).for_each([&](int up) { result.result.set(u * nh + up); }); });
  (f & g2).for_each(
      [&](int u) { (fp & h2).for_each([&](int up) { result.result.set(u * nh + up); }); });
  verify_guarantee(product, result, "bipartite_parity_fort");
  return result;
}

LiftResult lift_zfs(const Graph& hypercube_d, const VertexSet& s) {
  const auto& meta = hypercube_d.hypercube_meta();
  if (!meta) throw invalid_input("lift_zfs needs a hypercube input");
  int d = meta->dimension;
  int minimum = 1 << (d - 1);  // Z(Q_d) = 2^(d-1)
  if (s.count() != minimum || !is_zero_forcing_set(hypercube_d, s))
    throw invalid_input("lift_zfs input is not a minimum zero forcing set of Q_" +
                        std::to_string(d));
  int pt = propagation_time(hypercube_d, s);

  Graph lifted_cube = Graph::hypercube(d + 1);
  VertexSet lifted(lifted_cube.order());
  s.for_each([&](int v) {
    lifted.set(2 * v);
    lifted.set(2 * v + 1);
  });
  if (lifted.count() != 1 << d || !is_zero_forcing_set(lifted_cube, lifted))
    throw internal_consistency_error("lifted set is not a minimum zero forcing set");
  int lifted_pt = propagation_time(lifted_cube, lifted);
  if (lifted_pt != pt)
    throw internal_consistency_error("lifted set changed propagation time from " +
                                     std::to_string(pt) + " to " + std::to_string(lifted_pt));
  return {lifted, pt};
}

}  // namespace fortlib
