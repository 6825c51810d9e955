#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "fortlib/errors.hpp"
#include "fortlib/io.hpp"
#include "fortlib/verify.hpp"
#include "fortlib/version.hpp"

namespace {

using fortlib::Json;

uint64_t fnv1a_bytes(const std::string& bytes) {
  uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string hex64(uint64_t h) {
  char buf[17];
  snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

// Collects hashes of every input file a command touches, for the run manifest.
struct IoTracker {
  std::map<std::string, std::string> input_hashes;

  std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw fortlib::invalid_input("cannot open file: " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    std::string bytes = buffer.str();
    input_hashes[path] = hex64(fnv1a_bytes(bytes));
    return bytes;
  }

  fortlib::Graph read_graph(const std::string& path) {
    std::string text = read_file(path);
    size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw fortlib::invalid_input("graph file is empty: " + path);
    if (text[first] == '{') {
      Json j = Json::parse(text, nullptr, false);
      if (j.is_discarded())
        throw fortlib::invalid_input("graph file is not valid JSON: " + path);
      return fortlib::graph_from_json(j);
    }
    std::istringstream stream(text);
    return fortlib::read_edge_list_text(stream);
  }

  // A vertex-set argument is inline JSON when it starts with '[', else a file.
  Json read_json_arg(const std::string& arg) {
    std::string text = arg;
    if (text.empty() || text[0] != '[') text = read_file(arg);
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw fortlib::invalid_input("argument is not valid JSON: " + arg);
    return j;
  }
};

struct GlobalOptions {
  std::string cache_dir;
  std::string output;
  std::string manifest;
  long long budget = fortlib::kDefaultCandidateBudget;
  uint64_t seed = 20250808ull;
  int jobs = 0;  // 0 = machine parallelism
};

void emit(const GlobalOptions& opts, IoTracker& io, const std::vector<std::string>& argv_copy,
          const std::string& text, double started_ms) {
  if (opts.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(opts.output);
    if (!out) throw fortlib::invalid_input("cannot write output file: " + opts.output);
    out << text;
  }
  if (!opts.manifest.empty()) {
    Json manifest;
    manifest["command_line"] = argv_copy;
    manifest["input_hashes"] = io.input_hashes;
    manifest["library_version"] = fortlib::kVersion;
    manifest["timing_ms"] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now().time_since_epoch())
            .count() -
        started_ms;
    manifest["result_digest"] = hex64(fnv1a_bytes(text));
    std::ofstream out(opts.manifest);
    if (!out) throw fortlib::invalid_input("cannot write manifest file: " + opts.manifest);
    out << manifest.dump(2) << "\n";
  }
}

// The FORTLIB_CACHE environment variable overrides the --cache-dir flag.
std::string effective_cache_dir(const GlobalOptions& opts) {
  if (const char* env = std::getenv("FORTLIB_CACHE"); env && *env) return env;
  return opts.cache_dir;
}

fortlib::FortCensus census_for(const fortlib::Graph& g, const GlobalOptions& opts) {
  try {
    return fortlib::census_with_cache(g, effective_cache_dir(opts), opts.jobs);
  } catch (const fortlib::resource_limit& e) {
    throw fortlib::resource_limit(std::string(e.what()) +
                                  "; use --size k for a size-limited fort scan");
  }
}

Json params_report(const fortlib::Graph& g, const GlobalOptions& opts, bool want_z,
                   bool want_zstar, bool want_ft, bool want_pt, bool want_gamma,
                   bool want_gamma_t, bool want_rho, bool want_failed) {
  fortlib::ParameterReport report;
  report.graph_hash = g.canonical_hash();
  report.n = g.order();
  std::optional<fortlib::FortCensus> census;
  auto need_census = [&]() -> const fortlib::FortCensus& {
    if (!census) census = census_for(g, opts);
    return *census;
  };
  if (want_z) report.zero_forcing = fortlib::min_zero_forcing_number(g, need_census());
  if (want_zstar) report.fractional_zero_forcing = fortlib::fractional_zf(g, need_census());
  if (want_ft) report.fort_num = fortlib::fort_number(g, need_census());
  if (want_pt) report.propagation = fortlib::pt_spectrum(g, opts.budget, opts.jobs);
  if (want_gamma) report.domination = fortlib::domination_number(g);
  if (want_gamma_t) report.total_domination = fortlib::total_domination_number(g);
  if (want_rho) report.open_packing = fortlib::open_packing_number(g);
  if (want_failed) report.failed_zf = fortlib::failed_zf_number(g, opts.budget);
  return fortlib::parameter_report_to_json(report);
}

int dispatch(int argc, char** argv) {
  double started_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now().time_since_epoch())
          .count();
  std::vector<std::string> argv_copy(argv, argv + argc);

  CLI::App app{"forts, zero forcing, and related hypercube parameters"};
  app.set_version_flag("--version", fortlib::kVersion);
  app.require_subcommand(1);

  GlobalOptions opts;
  app.add_option("--cache-dir", opts.cache_dir, "census cache directory");
  app.add_option("-o,--output", opts.output, "write the JSON result here instead of stdout");
  app.add_option("--manifest", opts.manifest, "write a run manifest (inputs, version, digest)");
  app.add_option("--budget", opts.budget, "candidate budget for exhaustive scans");
  app.add_option("--seed", opts.seed, "seed for randomized property checks");
  app.add_option("--jobs", opts.jobs, "worker threads (0 = machine parallelism)");

  IoTracker io;
  Json result;
  std::string csv_result;  // set instead of `result` by --csv paths

  // gen
  auto* gen = app.add_subcommand("gen", "generate a graph as JSON");
  gen->require_subcommand(1);
  auto* gen_cube = gen->add_subcommand("hypercube", "hypercube of a given dimension");
  int gen_dim = 0;
  gen_cube->add_option("dimension", gen_dim, "hypercube dimension")->required();
  gen_cube->callback([&] { result = fortlib::graph_to_json(fortlib::Graph::hypercube(gen_dim)); });
  auto* gen_prod = gen->add_subcommand("product", "Cartesian product of two graph files");
  std::string gen_a, gen_b;
  gen_prod->add_option("graph_a", gen_a)->required();
  gen_prod->add_option("graph_b", gen_b)->required();
  gen_prod->callback([&] {
    result = fortlib::graph_to_json(
        fortlib::Graph::cartesian_product(io.read_graph(gen_a), io.read_graph(gen_b)));
  });
  auto* gen_edges = gen->add_subcommand("edgelist", "convert an edge-list text file");
  std::string gen_file;
  gen_edges->add_option("file", gen_file)->required();
  gen_edges->callback([&] { result = fortlib::graph_to_json(io.read_graph(gen_file)); });

  // forts
  auto* forts = app.add_subcommand("forts", "minimal-fort census or size-limited fort scan");
  std::string forts_graph;
  bool forts_minimal = false, forts_csv = false;
  int forts_size = 0;
  forts->add_option("graph", forts_graph)->required();
  auto* minimal_flag =
      forts->add_flag("--minimal", forts_minimal, "full minimal-fort census (default)");
  forts->add_option("--size", forts_size, "enumerate forts of exactly this size")
      ->excludes(minimal_flag);
  forts->add_flag("--csv", forts_csv, "emit the size histogram as CSV instead of JSON");
  forts->callback([&] {
    fortlib::Graph g = io.read_graph(forts_graph);
    if (forts_size > 0) {
      auto fort_list = fortlib::enumerate_forts_of_size(g, forts_size, opts.budget, opts.jobs);
      if (forts_csv) {
        csv_result = "size,count\n" + std::to_string(forts_size) + "," +
                     std::to_string(fort_list.size()) + "\n";
        return;
      }
      result["graph"] = g.canonical_hash();
      result["size"] = forts_size;
      result["count"] = fort_list.size();
      Json arr = Json::array();
      for (const auto& f : fort_list) arr.push_back(fortlib::vertex_set_to_json(f));
      result["forts"] = std::move(arr);
    } else {
      fortlib::FortCensus census = census_for(g, opts);
      if (forts_csv) {
        csv_result = "size,count\n";
        for (const auto& [size, count] : census.by_size)
          csv_result += std::to_string(size) + "," + std::to_string(count) + "\n";
        return;
      }
      result = fortlib::census_to_json(census);
    }
  });

  // zf
  auto* zf = app.add_subcommand("zf", "zero forcing number, enumeration, propagation times");
  zf->require_subcommand(1);
  std::string zf_graph;
  auto* zf_number = zf->add_subcommand("number", "minimum zero forcing set");
  zf_number->add_option("graph", zf_graph)->required();
  zf_number->callback([&] {
    fortlib::Graph g = io.read_graph(zf_graph);
    fortlib::ZfsResult z = fortlib::min_zero_forcing_number(g, census_for(g, opts));
    result["Z"] = z.z;
    result["witness"] = fortlib::vertex_set_to_json(z.witness);
  });
  auto* zf_enum = zf->add_subcommand("enumerate", "all minimum zero forcing sets");
  zf_enum->add_option("graph", zf_graph)->required();
  zf_enum->callback([&] {
    fortlib::Graph g = io.read_graph(zf_graph);
    fortlib::ZfsResult z = fortlib::min_zero_forcing_number(g, census_for(g, opts));
    auto sets = fortlib::enumerate_minimum_zfs(g, z.z, opts.budget, opts.jobs);
    result["Z"] = z.z;
    result["count"] = sets.size();
    Json arr = Json::array();
    for (const auto& s : sets) arr.push_back(fortlib::vertex_set_to_json(s));
    result["sets"] = std::move(arr);
  });
  auto* zf_pt = zf->add_subcommand("pt", "propagation time spectrum over minimum sets");
  zf_pt->add_option("graph", zf_graph)->required();
  zf_pt->callback([&] {
    fortlib::Graph g = io.read_graph(zf_graph);
    fortlib::PtSpectrum pt = fortlib::pt_spectrum(g, opts.budget, opts.jobs);
    result["Z"] = pt.z;
    result["pt_min"] = pt.pt_min;
    result["pt_max"] = pt.pt_max;
    result["spectrum"] = pt.spectrum;
    Json witnesses = Json::object();
    for (const auto& [time, witness] : pt.witnesses)
      witnesses[std::to_string(time)] = fortlib::vertex_set_to_json(witness);
    result["witnesses"] = std::move(witnesses);
  });

  // params
  auto* params = app.add_subcommand("params", "selected graph parameters as one report");
  std::string params_graph;
  bool all = false, w_z = false, w_zstar = false, w_ft = false, w_pt = false;
  bool w_gamma = false, w_gamma_t = false, w_rho = false, w_failed = false;
  params->add_option("graph", params_graph)->required();
  params->add_flag("--all", all, "compute every parameter");
  params->add_flag("--z", w_z, "zero forcing number");
  params->add_flag("--zstar", w_zstar, "fractional zero forcing number");
  params->add_flag("--ft", w_ft, "fort number");
  params->add_flag("--pt", w_pt, "propagation time spectrum");
  params->add_flag("--gamma", w_gamma, "domination number");
  params->add_flag("--gamma-t", w_gamma_t, "total domination number");
  params->add_flag("--rho", w_rho, "open packing number");
  params->add_flag("--failedzf", w_failed, "failed zero forcing number");
  params->callback([&] {
    if (all) w_z = w_zstar = w_ft = w_pt = w_gamma = w_gamma_t = w_rho = w_failed = true;
    if (!(w_z || w_zstar || w_ft || w_pt || w_gamma || w_gamma_t || w_rho || w_failed))
      throw CLI::ValidationError("params", "select at least one parameter or pass --all");
    result = params_report(io.read_graph(params_graph), opts, w_z, w_zstar, w_ft, w_pt, w_gamma,
                           w_gamma_t, w_rho, w_failed);
  });

  // construct
  auto* construct = app.add_subcommand("construct", "fort and forcing-set constructions");
  construct->require_subcommand(1);
  std::string c_graph_a, c_set_a, c_graph_b, c_set_b;
  bool require_minimal = false, swap_parts = false;
  auto add_factor_args = [&](CLI::App* cmd) {
    cmd->add_option("graph_a", c_graph_a)->required();
    cmd->add_option("set_a", c_set_a, "JSON array (inline or file)")->required();
    cmd->add_option("graph_b", c_graph_b)->required();
    cmd->add_option("set_b", c_set_b, "JSON array (inline or file)")->required();
  };
  auto* c_product = construct->add_subcommand("product", "F x F' on the Cartesian product");
  add_factor_args(c_product);
  c_product->callback([&] {
    fortlib::Graph a = io.read_graph(c_graph_a), b = io.read_graph(c_graph_b);
    result = fortlib::construction_to_json(fortlib::product_fort(
        a, fortlib::vertex_set_from_json(io.read_json_arg(c_set_a), a.order()), b,
        fortlib::vertex_set_from_json(io.read_json_arg(c_set_b), b.order())));
  });
  auto* c_parity = construct->add_subcommand("parity", "parity-aligned bipartite product fort");
  add_factor_args(c_parity);
  c_parity->add_flag("--require-minimal", require_minimal,
                     "enforce the minimality preconditions");
  c_parity->add_flag("--swap-parts", swap_parts, "exchange the parts of the second factor");
  c_parity->callback([&] {
    fortlib::Graph a = io.read_graph(c_graph_a), b = io.read_graph(c_graph_b);
    result = fortlib::construction_to_json(fortlib::bipartite_parity_fort(
        a, fortlib::vertex_set_from_json(io.read_json_arg(c_set_a), a.order()), b,
        fortlib::vertex_set_from_json(io.read_json_arg(c_set_b), b.order()), require_minimal,
        swap_parts));
  });
  auto* c_lift = construct->add_subcommand("lift", "double a minimum zero forcing set upward");
  c_lift->add_option("graph", c_graph_a)->required();
  c_lift->add_option("set", c_set_a)->required();
  c_lift->callback([&] {
    fortlib::Graph g = io.read_graph(c_graph_a);
    fortlib::LiftResult lift =
        fortlib::lift_zfs(g, fortlib::vertex_set_from_json(io.read_json_arg(c_set_a), g.order()));
    result["lifted"] = fortlib::vertex_set_to_json(lift.lifted);
    result["propagation_time"] = lift.propagation_time;
  });

  // sym
  auto* sym = app.add_subcommand("sym", "canonical forms under the hypercube symmetries");
  sym->require_subcommand(1);
  int sym_dim = 0;
  std::string sym_arg;
  auto* sym_canon = sym->add_subcommand("canon", "canonical form and orbit size of one set");
  sym_canon->add_option("dimension", sym_dim)->required();
  sym_canon->add_option("set", sym_arg, "JSON array (inline or file)")->required();
  sym_canon->callback([&] {
    fortlib::CanonicalForm form = fortlib::canonical_form(
        sym_dim, fortlib::vertex_set_from_json(io.read_json_arg(sym_arg), 1 << sym_dim));
    result["canonical"] = fortlib::vertex_set_to_json(form.canonical);
    result["orbit_size"] = form.orbit_size;
  });
  auto* sym_classify = sym->add_subcommand("classify", "orbit classes of a list of sets");
  sym_classify->add_option("dimension", sym_dim)->required();
  sym_classify->add_option("sets", sym_arg, "JSON array of arrays (inline or file)")->required();
  sym_classify->callback([&] {
    Json input = io.read_json_arg(sym_arg);
    std::vector<fortlib::VertexSet> sets;
    for (const auto& entry : input)
      sets.push_back(fortlib::vertex_set_from_json(entry, 1 << sym_dim));
    result = fortlib::orbit_classes_to_json(fortlib::classify_orbits(sym_dim, sets));
  });

  // verify-paper
  auto* verify = app.add_subcommand(
      "verify-paper", "run the built-in claim suite and report pass/fail per claim");
  int max_dim = 4;
  verify->add_option("--max-dim", max_dim, "largest hypercube dimension to scan (4-6)")
      ->check(CLI::Range(4, 6));
  verify->callback([&] {
    fortlib::VerifyOptions vopts;
    vopts.max_dim = max_dim;
    vopts.budget = opts.budget;
    vopts.seed = opts.seed;
    vopts.jobs = opts.jobs;
    vopts.cache_dir = effective_cache_dir(opts);
    auto claims = fortlib::run_verification_suite(vopts);
    Json arr = Json::array();
    for (const auto& claim : claims) {
      std::string line = std::string(claim.pass ? "[PASS]" : "[FAIL]") + " " + claim.id + " " +
                         claim.name + ": " + claim.actual;
      char timing[32];
      snprintf(timing, sizeof timing, " (%.2f s)", claim.seconds);
      std::cerr << line << timing << "\n";
      arr.push_back(Json{{"id", claim.id},
                         {"name", claim.name},
                         {"expected", claim.expected},
                         {"actual", claim.actual},
                         {"pass", claim.pass}});
    }
    result["max_dim"] = max_dim;
    result["seed"] = opts.seed;
    result["claims"] = std::move(arr);
    result["all_pass"] = fortlib::all_pass(claims);
  });

  for (CLI::App* cmd : {gen, gen_cube, gen_prod, gen_edges, forts, zf, zf_number, zf_enum, zf_pt,
                        params, construct, c_product, c_parity, c_lift, sym, sym_canon,
                        sym_classify, verify})
    cmd->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  emit(opts, io, argv_copy, csv_result.empty() ? result.dump(2) + "\n" : csv_result,
       started_ms);
  if (verify->parsed() && !result["all_pass"].get<bool>()) return 1;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const fortlib::precondition_error& e) {
    Json report;
    report["error"] = e.what();
    Json outcomes = Json::array();
    for (const auto& o : e.outcomes) outcomes.push_back(Json{{"name", o.name}, {"ok", o.ok}});
    report["preconditions_checked"] = std::move(outcomes);
    std::cout << report.dump(2) << "\n";
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const fortlib::resource_limit& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const fortlib::internal_consistency_error& e) {
    std::cerr << "internal consistency error: " << e.what() << "\n";
    return 4;
  } catch (const fortlib::invalid_input& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
