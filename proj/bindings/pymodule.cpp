#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fortlib/constructions.hpp"
#include "fortlib/forcing.hpp"
#include "fortlib/forts.hpp"
#include "fortlib/graph.hpp"
#include "fortlib/lp.hpp"
#include "fortlib/search.hpp"
#include "fortlib/symmetry.hpp"
#include "fortlib/verify.hpp"
#include "fortlib/version.hpp"

namespace py = pybind11;
using namespace fortlib;

namespace {

VertexSet to_set(const Graph& g, const std::vector<int>& members) {
  return VertexSet::of(g.order(), members);
}

VertexSet to_set_n(int universe, const std::vector<int>& members) {
  return VertexSet::of(universe, members);
}

py::dict trace_dict(const ForcingTrace& t) {
  py::dict d;
  d["initial"] = t.initial.members();
  py::list steps;
  for (const auto& step : t.steps) {
    py::list forces;
    for (const auto& f : step) forces.append(py::make_tuple(f.forcer, f.forced));
    steps.append(forces);
  }
  d["steps"] = steps;
  d["final"] = t.final.members();
  return d;
}

py::dict census_dict(const FortCensus& c) {
  py::dict d;
  d["graph"] = c.graph_hash;
  d["complete"] = c.complete;
  py::list forts;
  for (const auto& f : c.minimal_forts) forts.append(f.members());
  d["minimal_forts"] = forts;
  py::dict by_size;
  for (const auto& [size, count] : c.by_size) by_size[py::int_(size)] = count;
  d["by_size"] = by_size;
  return d;
}

FortCensus census_from_dict(const Graph& g, const py::dict& d) {
  FortCensus c;
  c.graph_hash = d["graph"].cast<std::string>();
  c.complete = d["complete"].cast<bool>();
  for (const auto& f : d["minimal_forts"].cast<std::vector<std::vector<int>>>()) {
    c.minimal_forts.push_back(to_set(g, f));
    c.by_size[static_cast<int>(f.size())] += 1;
  }
  return c;
}

py::dict construction_dict(const ConstructionResult& r) {
  py::dict d;
  d["result"] = r.result.members();
  d["guarantee"] = r.guarantee == FortGuarantee::minimal_fort ? "minimal-fort" : "fort";
  py::list preconds;
  for (const auto& p : r.preconditions) {
    py::dict entry;
    entry["name"] = p.name;
    entry["ok"] = p.ok;
    preconds.append(entry);
  }
  d["preconditions_checked"] = preconds;
  return d;
}

}  // namespace

PYBIND11_MODULE(_fortlib, m) {
  m.doc() = "forts, zero forcing, and related graph parameters";
  m.attr("__version__") = kVersion;

  py::register_exception<invalid_input>(m, "InvalidInput", PyExc_ValueError);
  py::register_exception<resource_limit>(m, "ResourceLimit", PyExc_RuntimeError);
  py::register_exception<internal_consistency_error>(m, "InternalConsistencyError",
                                                     PyExc_AssertionError);

  py::class_<Graph>(m, "Graph")
      .def_property_readonly("n", &Graph::order)
      .def_property_readonly("m", &Graph::size)
      .def("degree", &Graph::degree)
      .def("adjacent", &Graph::adjacent)
      .def("neighbors", [](const Graph& g, int v) { return g.neighborhood(v).members(); })
      .def("closed_neighbors",
           [](const Graph& g, int v) { return g.closed_neighborhood(v).members(); })
      .def("distance",
           [](const Graph& g, int u, int v) -> std::optional<int> { return g.distance(u, v); })
      .def("count_shortest_paths", &Graph::count_shortest_paths)
      .def("bipartition",
           [](const Graph& g) -> std::optional<std::pair<std::vector<int>, std::vector<int>>> {
             auto parts = g.bipartition();
             if (!parts) return std::nullopt;
             return std::make_pair(parts->part0.members(), parts->part1.members());
           })
      .def("edges", &Graph::edge_list)
      .def_property_readonly("labels", &Graph::labels)
      .def_property_readonly("hypercube_dim", [](const Graph& g) -> std::optional<int> {
        if (!g.hypercube_meta()) return std::nullopt;
        return g.hypercube_meta()->dimension;
      })
      .def("canonical_hash", &Graph::canonical_hash);

  m.def("build_hypercube", &Graph::hypercube, py::arg("d"));
  m.def(
      "build_from_edge_list",
      [](int n, const std::vector<std::pair<int, int>>& edges) {
        return Graph::from_edge_list(n, edges);
      },
      py::arg("n"), py::arg("edges"));
  m.def("cartesian_product", &Graph::cartesian_product);

  m.def("forcing_step", [](const Graph& g, const std::vector<int>& filled) {
    auto [forces, after] = forcing_step(g, to_set(g, filled));
    py::list force_list;
    for (const auto& f : forces) force_list.append(py::make_tuple(f.forcer, f.forced));
    return py::make_tuple(force_list, after.members());
  });
  m.def("closure",
        [](const Graph& g, const std::vector<int>& s) { return trace_dict(closure(g, to_set(g, s))); });
  m.def("is_zero_forcing_set", [](const Graph& g, const std::vector<int>& s) {
    return is_zero_forcing_set(g, to_set(g, s));
  });
  m.def("propagation_time", [](const Graph& g, const std::vector<int>& s) {
    return propagation_time(g, to_set(g, s));
  });
  m.def("is_stalled",
        [](const Graph& g, const std::vector<int>& s) { return is_stalled(g, to_set(g, s)); });

  m.def("is_fort",
        [](const Graph& g, const std::vector<int>& f) { return is_fort(g, to_set(g, f)); });
  m.def("fort_violations", [](const Graph& g, const std::vector<int>& f) {
    py::list out;
    for (const auto& v : check_fort(g, to_set(g, f)).violations)
      out.append(py::make_tuple(v.outside_vertex, v.inside_neighbor));
    return out;
  });
  m.def("is_minimal_fort", [](const Graph& g, const std::vector<int>& f) {
    return is_minimal_fort(g, to_set(g, f));
  });
  m.def(
      "enumerate_minimal_forts",
      [](const Graph& g, int jobs) { return census_dict(enumerate_minimal_forts(g, jobs)); },
      py::arg("g"), py::arg("jobs") = 1);
  m.def(
      "enumerate_forts_of_size",
      [](const Graph& g, int k, long long budget, int jobs) {
        py::list out;
        for (const auto& f : enumerate_forts_of_size(g, k, budget, jobs)) out.append(f.members());
        return out;
      },
      py::arg("g"), py::arg("k"), py::arg("budget") = kDefaultCandidateBudget,
      py::arg("jobs") = 1);
  m.def(
      "minimum_fort",
      [](const Graph& g, long long budget) {
        MinimumFort mf = minimum_fort(g, budget);
        return py::make_tuple(mf.size, mf.witness.members());
      },
      py::arg("g"), py::arg("budget") = kDefaultCandidateBudget);
  m.def("failed_zf_number", &failed_zf_number, py::arg("g"),
        py::arg("budget") = kDefaultCandidateBudget);

  m.def("solve_covering_lp", [](int n_vars, const std::vector<std::vector<int>>& rows) {
    CoveringLp lp{n_vars, {}};
    for (const auto& row : rows) lp.rows.push_back(to_set_n(n_vars, row));
    LpSolution sol = solve_covering_lp(lp);
    py::dict d;
    d["value"] = sol.value.str();
    d["status"] = sol.status == LpStatus::optimal ? "optimal" : "not-optimal";
    py::list weights;
    for (const auto& w : sol.weights) weights.append(w.str());
    d["weights"] = weights;
    py::list dual;
    for (const auto& y : sol.dual) dual.append(y.str());
    d["dual"] = dual;
    return d;
  });
  m.def(
      "fractional_zf",
      [](const Graph& g, const std::optional<py::dict>& census) {
        FortCensus c = census ? census_from_dict(g, *census) : enumerate_minimal_forts(g);
        return fractional_zf(g, c).str();
      },
      py::arg("g"), py::arg("census") = std::nullopt);

  m.def(
      "zero_forcing_number",
      [](const Graph& g, long long budget, int jobs) {
        ZfsResult z = zero_forcing_number(g, budget, jobs);
        return py::make_tuple(z.z, z.witness.members());
      },
      py::arg("g"), py::arg("budget") = kDefaultCandidateBudget, py::arg("jobs") = 1);
  m.def(
      "enumerate_minimum_zfs",
      [](const Graph& g, int z, long long budget, int jobs) {
        py::list out;
        for (const auto& s : enumerate_minimum_zfs(g, z, budget, jobs)) out.append(s.members());
        return out;
      },
      py::arg("g"), py::arg("z"), py::arg("budget") = kDefaultCandidateBudget,
      py::arg("jobs") = 1);
  m.def(
      "pt_spectrum",
      [](const Graph& g, long long budget, int jobs) {
        PtSpectrum pt = pt_spectrum(g, budget, jobs);
        py::dict d;
        d["Z"] = pt.z;
        d["pt_min"] = pt.pt_min;
        d["pt_max"] = pt.pt_max;
        d["spectrum"] = pt.spectrum;
        py::dict witnesses;
        for (const auto& [time, witness] : pt.witnesses)
          witnesses[py::int_(time)] = witness.members();
        d["witnesses"] = witnesses;
        return d;
      },
      py::arg("g"), py::arg("budget") = kDefaultCandidateBudget, py::arg("jobs") = 1);
  m.def(
      "fort_number",
      [](const Graph& g, const std::optional<py::dict>& census) {
        FortCensus c = census ? census_from_dict(g, *census) : enumerate_minimal_forts(g);
        FortNumberResult ft = fort_number(g, c);
        py::list family;
        for (const auto& f : ft.family) family.append(f.members());
        return py::make_tuple(ft.value, family);
      },
      py::arg("g"), py::arg("census") = std::nullopt);

  auto witnessed = [](const WitnessedValue& w) {
    return py::make_tuple(w.value, w.witness.members());
  };
  m.def("domination_number", [=](const Graph& g) { return witnessed(domination_number(g)); });
  m.def("total_domination_number",
        [=](const Graph& g) { return witnessed(total_domination_number(g)); });
  m.def("open_packing_number",
        [=](const Graph& g) { return witnessed(open_packing_number(g)); });

  m.def("product_fort", [](const Graph& g, const std::vector<int>& f, const Graph& h,
                           const std::vector<int>& fp) {
    return construction_dict(product_fort(g, to_set(g, f), h, to_set(h, fp)));
  });
  m.def(
      "bipartite_parity_fort",
      [](const Graph& g, const std::vector<int>& f, const Graph& h, const std::vector<int>& fp,
         bool require_minimal, bool swap_parts) {
        return construction_dict(
            bipartite_parity_fort(g, to_set(g, f), h, to_set(h, fp), require_minimal, swap_parts));
      },
      py::arg("g"), py::arg("f"), py::arg("h"), py::arg("fp"),
      py::arg("require_minimal") = false, py::arg("swap_parts") = false);
  m.def("lift_zfs", [](const Graph& g, const std::vector<int>& s) {
    LiftResult lift = lift_zfs(g, to_set(g, s));
    return py::make_tuple(lift.lifted.members(), lift.propagation_time);
  });

  m.def("canonical_form", [](int d, const std::vector<int>& s) {
    CanonicalForm form = canonical_form(d, to_set_n(1 << d, s));
    return py::make_tuple(form.canonical.members(), form.orbit_size);
  });
  m.def("are_automorphic", [](int d, const std::vector<int>& a, const std::vector<int>& b) {
    return are_automorphic(d, to_set_n(1 << d, a), to_set_n(1 << d, b));
  });
  m.def("classify_orbits", [](int d, const std::vector<std::vector<int>>& sets) {
    std::vector<VertexSet> input;
    for (const auto& s : sets) input.push_back(to_set_n(1 << d, s));
    py::list out;
    for (const auto& cls : classify_orbits(d, input)) {
      py::dict entry;
      entry["canonical"] = cls.canonical.members();
      entry["orbit_size"] = cls.orbit_size;
      py::list members;
      for (const auto& s : cls.members) members.append(s.members());
      entry["members"] = members;
      out.append(entry);
    }
    return out;
  });

  m.def(
      "verify_claims",
      [](int max_dim, long long budget, uint64_t seed, int jobs) {
        VerifyOptions opts;
        opts.max_dim = max_dim;
        opts.budget = budget;
        opts.seed = seed;
        opts.jobs = jobs;
        py::list out;
        for (const auto& claim : run_verification_suite(opts)) {
          py::dict entry;
          entry["id"] = claim.id;
          entry["name"] = claim.name;
          entry["expected"] = claim.expected;
          entry["actual"] = claim.actual;
          entry["pass"] = claim.pass;
          out.append(entry);
        }
        return out;
      },
      py::arg("max_dim") = 4, py::arg("budget") = kDefaultCandidateBudget,
      py::arg("seed") = 20250808ull, py::arg("jobs") = 1);
}
