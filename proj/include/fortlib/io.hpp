#pragma once

#include <json.hpp>
#include <optional>
#include <string>

#include "fortlib/constructions.hpp"
#include "fortlib/forcing.hpp"
#include "fortlib/forts.hpp"
#include "fortlib/graph.hpp"
#include "fortlib/lp.hpp"
#include "fortlib/search.hpp"
#include "fortlib/symmetry.hpp"

namespace fortlib {

using Json = nlohmann::ordered_json;

// {"n":int, "edges":[[u,v],...], "labels":[...]?, "hypercube_dim":int?}
Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);

// "n m" header line, then one "u v" line per edge, 0-based.
Graph read_edge_list_text(std::istream& in);
void write_edge_list_text(std::ostream& out, const Graph& g);

// Accepts either format; JSON when the first non-space byte is '{'.
Graph read_graph_file(const std::string& path);

Json vertex_set_to_json(const VertexSet& s);
VertexSet vertex_set_from_json(const Json& j, int universe);

// {"initial":[...], "steps":[[[forcer,forced],...],...], "final":[...]}
Json trace_to_json(const ForcingTrace& t);

Json census_to_json(const FortCensus& c);
FortCensus census_from_json(const Json& j, int universe);

Json lp_solution_to_json(const LpSolution& s);

Json parameter_report_to_json(const ParameterReport& report);

Json construction_to_json(const ConstructionResult& r);

Json orbit_classes_to_json(const std::vector<OrbitClass>& classes);

// Census cache, one file per graph keyed by its canonical hash. A file that
// fails to parse or does not match the graph is ignored with a warning on
// stderr and the census is recomputed.
std::optional<FortCensus> load_cached_census(const std::string& cache_dir, const Graph& g);
void store_cached_census(const std::string& cache_dir, const Graph& g, const FortCensus& c);

// Cached when a cache directory is given, computed otherwise.
FortCensus census_with_cache(const Graph& g, const std::string& cache_dir, int jobs = 1);

}  // namespace fortlib
