#include "fortlib/io.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "fortlib/errors.hpp"

namespace fortlib {

namespace fs = std::filesystem;

Json graph_to_json(const Graph& g) {
  Json j;
  j["n"] = g.order();
  Json edges = Json::array();
  for (auto [u, v] : g.edge_list()) edges.push_back(Json::array({u, v}));
  j["edges"] = std::move(edges);
  if (g.has_labels()) j["labels"] = g.labels();
  if (g.hypercube_meta()) j["hypercube_dim"] = g.hypercube_meta()->dimension;
  return j;
}

Graph graph_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw invalid_input("graph JSON needs \"n\" and \"edges\"");
  int n = j.at("n").get<int>();
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw invalid_input("graph edge must be a pair");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  if (j.contains("hypercube_dim")) {
    int d = j.at("hypercube_dim").get<int>();
    Graph cube = Graph::hypercube(d);
    if (cube.order() != n)
      throw invalid_input("hypercube_dim does not match n");
    Graph g = Graph::from_edge_list(n, edges);
    if (!g.same_adjacency(cube))
      throw invalid_input("edges do not form the hypercube claimed by hypercube_dim");
    return cube;  // keeps meta and binary labels
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
  return Graph::from_edge_list(n, edges, std::move(labels));
}

Graph read_edge_list_text(std::istream& in) {
  int n = 0;
  long long m = 0;
  if (!(in >> n >> m)) throw invalid_input("edge list needs a \"n m\" header line");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<size_t>(m));
  for (long long i = 0; i < m; ++i) {
    int u = 0, v = 0;
    if (!(in >> u >> v)) throw invalid_input("edge list ended before " + std::to_string(m) +
                                             " edges were read");
    edges.emplace_back(u, v);
  }
  return Graph::from_edge_list(n, edges);
}

void write_edge_list_text(std::ostream& out, const Graph& g) {
  auto edges = g.edge_list();
  out << g.order() << " " << edges.size() << "\n";
  for (auto [u, v] : edges) out << u << " " << v << "\n";
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw invalid_input("cannot open graph file: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  std::string text = buffer.str();
  size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw invalid_input("graph file is empty: " + path);
  if (text[first] == '{') {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw invalid_input("graph file is not valid JSON: " + path);
    return graph_from_json(j);
  }
  std::istringstream stream(text);
  return read_edge_list_text(stream);
}

Json vertex_set_to_json(const VertexSet& s) {
  Json j = Json::array();
  s.for_each([&](int v) { j.push_back(v); });
  return j;
}

VertexSet vertex_set_from_json(const Json& j, int universe) {
  if (!j.is_array()) throw invalid_input("vertex set JSON must be an array of indices");
  VertexSet s(universe);
  for (const auto& v : j) s.set(v.get<int>());
  return s;
}

Json trace_to_json(const ForcingTrace& t) {
  Json j;
  j["initial"] = vertex_set_to_json(t.initial);
  Json steps = Json::array();
  for (const auto& step : t.steps) {
    Json forces = Json::array();
    for (const auto& f : step) forces.push_back(Json::array({f.forcer, f.forced}));
    steps.push_back(std::move(forces));
  }
  j["steps"] = std::move(steps);
  j["final"] = vertex_set_to_json(t.final);
  return j;
}

Json census_to_json(const FortCensus& c) {
  Json j;
  j["graph"] = c.graph_hash;
  j["complete"] = c.complete;
  j["count"] = c.minimal_forts.size();
  Json by_size = Json::object();
  for (const auto& [size, count] : c.by_size) by_size[std::to_string(size)] = count;
  j["by_size"] = std::move(by_size);
  Json forts = Json::array();
  for (const auto& f : c.minimal_forts) forts.push_back(vertex_set_to_json(f));
  j["minimal_forts"] = std::move(forts);
  return j;
}

FortCensus census_from_json(const Json& j, int universe) {
  FortCensus c;
  c.graph_hash = j.at("graph").get<std::string>();
  c.complete = j.at("complete").get<bool>();
  for (const auto& f : j.at("minimal_forts"))
    c.minimal_forts.push_back(vertex_set_from_json(f, universe));
  for (const auto& f : c.minimal_forts) c.by_size[f.count()] += 1;
  if (j.contains("count") && j.at("count").get<size_t>() != c.minimal_forts.size())
    throw invalid_input("census count does not match its fort list");
  return c;
}

Json lp_solution_to_json(const LpSolution& s) {
  Json j;
  j["value"] = s.value.str();
  j["status"] = s.status == LpStatus::optimal
                    ? "optimal"
                    : (s.status == LpStatus::infeasible ? "infeasible" : "unbounded");
  Json weights = Json::array();
  for (const auto& w : s.weights) weights.push_back(w.str());
  j["weights"] = std::move(weights);
  Json dual = Json::array();
  for (const auto& y : s.dual) dual.push_back(y.str());
  j["dual"] = std::move(dual);
  return j;
}

Json parameter_report_to_json(const ParameterReport& report) {
  Json j;
  j["graph"] = report.graph_hash;
  j["n"] = report.n;
  if (report.zero_forcing) {
    j["Z"] = report.zero_forcing->z;
    j["Z_witness"] = vertex_set_to_json(report.zero_forcing->witness);
  }
  if (report.fractional_zero_forcing) j["zstar"] = report.fractional_zero_forcing->str();
  if (report.fort_num) {
    j["ft"] = report.fort_num->value;
    Json family = Json::array();
    for (const auto& f : report.fort_num->family) family.push_back(vertex_set_to_json(f));
    j["ft_family"] = std::move(family);
  }
  if (report.propagation) {
    j["pt_min"] = report.propagation->pt_min;
    j["pt_max"] = report.propagation->pt_max;
    j["pt_spectrum"] = report.propagation->spectrum;
  }
  if (report.domination) {
    j["gamma"] = report.domination->value;
    j["gamma_witness"] = vertex_set_to_json(report.domination->witness);
  }
  if (report.total_domination) {
    j["gamma_t"] = report.total_domination->value;
    j["gamma_t_witness"] = vertex_set_to_json(report.total_domination->witness);
  }
  if (report.open_packing) {
    j["rho_open"] = report.open_packing->value;
    j["rho_open_witness"] = vertex_set_to_json(report.open_packing->witness);
  }
  if (report.failed_zf) j["failed_zf"] = *report.failed_zf;
  return j;
}

Json construction_to_json(const ConstructionResult& r) {
  Json j;
  j["result"] = vertex_set_to_json(r.result);
  j["guarantee"] = r.guarantee == FortGuarantee::minimal_fort ? "minimal-fort" : "fort";
  Json preconds = Json::array();
  for (const auto& p : r.preconditions)
    preconds.push_back(Json{{"name", p.name}, {"ok", p.ok}});
  j["preconditions_checked"] = std::move(preconds);
  return j;
}

Json orbit_classes_to_json(const std::vector<OrbitClass>& classes) {
  Json j = Json::array();
  for (const auto& cls : classes) {
    Json entry;
    entry["canonical"] = vertex_set_to_json(cls.canonical);
    entry["orbit_size"] = cls.orbit_size;
    Json members = Json::array();
    for (const auto& m : cls.members) members.push_back(vertex_set_to_json(m));
    entry["members"] = std::move(members);
    j.push_back(std::move(entry));
  }
  return j;
}

namespace {

std::string census_cache_path(const std::string& cache_dir, const Graph& g) {
  return (fs::path(cache_dir) / ("fortcensus-" + g.canonical_hash() + ".json")).string();
}

}  // namespace

std::optional<FortCensus> load_cached_census(const std::string& cache_dir, const Graph& g) {
  std::string path = census_cache_path(cache_dir, g);
  std::ifstream in(path);
  if (!in) return std::nullopt;
  Json j = Json::parse(in, nullptr, false);
  if (j.is_discarded()) {
    std::cerr << "warning: ignoring unreadable cache file " << path << "\n";
    return std::nullopt;
  }
  try {
    FortCensus c = census_from_json(j, g.order());
    if (c.graph_hash != g.canonical_hash() || !c.complete) {
      std::cerr << "warning: ignoring stale cache file " << path << "\n";
      return std::nullopt;
    }
    return c;
  } catch (const std::exception& e) {
    std::cerr << "warning: ignoring invalid cache file " << path << ": " << e.what() << "\n";
    return std::nullopt;
  }
}

void store_cached_census(const std::string& cache_dir, const Graph& g, const FortCensus& c) {
  std::error_code ec;
  fs::create_directories(cache_dir, ec);
  std::string path = census_cache_path(cache_dir, g);
  std::ofstream out(path);
  if (!out) {
    std::cerr << "warning: cannot write cache file " << path << "\n";
    return;
  }
  out << census_to_json(c).dump(2) << "\n";
}

FortCensus census_with_cache(const Graph& g, const std::string& cache_dir, int jobs) {
  if (!cache_dir.empty())
    if (auto cached = load_cached_census(cache_dir, g)) return *cached;
  FortCensus c = enumerate_minimal_forts(g, jobs);
  if (!cache_dir.empty()) store_cached_census(cache_dir, g, c);
  return c;
}

}  // namespace fortlib
