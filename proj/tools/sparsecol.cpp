// Command-line front end. Exit status: 0 when the run is ok, 1 when a
// solver or check reports failure, 2 on bad input.

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <string>

#include "sparsecol/clustered.hpp"
#include "sparsecol/defective.hpp"
#include "sparsecol/generators.hpp"
#include "sparsecol/io.hpp"
#include "sparsecol/oracle.hpp"
#include "sparsecol/presets.hpp"
#include "sparsecol/report_json.hpp"
#include "sparsecol/sparsity.hpp"
#include "sparsecol/transversal.hpp"

namespace sc = sparsecol;
using nlohmann::json;

namespace {

constexpr int kExitFailed = 1;
constexpr int kExitInput = 2;

struct Common {
  std::string graph_file;
  std::string json_out;
};

struct ListSource {
  std::string lists_file;
  std::uint64_t seed = 0;
};

void emit(const json& report, const std::string& json_out) {
  if (json_out.empty()) return;
  std::ofstream out(json_out);
  if (!out) throw sc::Error(sc::Errc::Parse, "cannot write '" + json_out + "'");
  out << report.dump(2) << "\n";
}

sc::ListAssignment load_lists(const ListSource& src, int n, int k) {
  if (!src.lists_file.empty()) return sc::read_lists_file(src.lists_file, n);
  return sc::random_lists(n, k, src.seed);
}

std::string join(const std::vector<int>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i)
    out += (i ? " " : "") + std::to_string(values[i]);
  return out;
}

class Stopwatch {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(clock::now() - start_).count();
  }

 private:
  using clock = std::chrono::steady_clock;
  clock::time_point start_ = clock::now();
};

// Runs a colouring solver, reporting a density violation as a failed run
// with its certificate.
int run_colouring(const std::string& command, const sc::Graph& g, const json& params,
                  std::uint64_t seed, const std::string& json_out,
                  const std::function<sc::ColouringResult()>& solve) {
  const Stopwatch watch;
  try {
    const auto result = solve();
    const auto report = sc::colouring_report(command, g, params, result, watch.ms(), seed);
    emit(report, json_out);
    const auto& r = result.report;
    std::cout << command << ": n=" << g.vertex_count() << " m=" << g.edge_count()
              << " defect=" << r.defect << " clustering=" << r.clustering << " ("
              << sc::to_string(r.kind) << " bound " << r.bound << ") "
              << (r.ok ? "ok" : "FAILED") << "\n";
    if (json_out.empty()) std::cout << "colours: " << join(result.colouring) << "\n";
    return r.ok ? 0 : kExitFailed;
  } catch (const sc::DensityViolation& e) {
    emit(sc::violation_report(command, g, params, e, watch.ms(), seed), json_out);
    std::cout << command << ": density violation: " << e.what() << "\n"
              << "witness: " << join(e.certificate().witness) << "\n";
    return kExitFailed;
  }
}

void add_graph(CLI::App* cmd, Common& c) {
  cmd->add_option("graph", c.graph_file, "edge-list file")->required()->check(CLI::ExistingFile);
}

void add_json(CLI::App* cmd, Common& c) {
  cmd->add_option("--json", c.json_out, "write the JSON report to this file");
}

void add_lists(CLI::App* cmd, ListSource& src) {
  auto* file = cmd->add_option("--lists", src.lists_file, "list-assignment file")
                   ->check(CLI::ExistingFile);
  cmd->add_option("--seed", src.seed, "seed for random lists and solver")->excludes(file);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Defective and clustered list colouring of sparse graphs"};
  app.require_subcommand(1);
  int status = 0;

  // mad
  Common mad_c;
  int mad_n0 = 1;
  bool mad_brute = false;
  auto* mad_cmd = app.add_subcommand("mad", "exact maximum average degree");
  add_graph(mad_cmd, mad_c);
  add_json(mad_cmd, mad_c);
  mad_cmd->add_option("--n0", mad_n0, "only subgraphs with at least n0 vertices")
      ->check(CLI::PositiveNumber);
  mad_cmd->add_flag("--brute", mad_brute, "exhaustive search instead of min-cut");
  mad_cmd->callback([&] {
    const auto g = sc::read_graph_file(mad_c.graph_file);
    const auto cert = mad_n0 > 1 ? sc::mad_at_least(g, mad_n0)
                      : mad_brute ? sc::mad_bruteforce(g)
                                  : sc::mad(g);
    const json out{{"mad", cert.density.to_string()}, {"witness", cert.witness}};
    emit(out, mad_c.json_out);
    std::cout << out.dump() << "\n";
  });

  // colour-defective
  Common def_c;
  ListSource def_l;
  sc::DefectParams def_p;
  auto* def_cmd = app.add_subcommand("colour-defective", "list colouring with bounded defect");
  add_graph(def_cmd, def_c);
  add_json(def_cmd, def_c);
  add_lists(def_cmd, def_l);
  def_cmd->add_option("--k", def_p.k, "list size")->required()->check(CLI::PositiveNumber);
  def_cmd->add_option("--d", def_p.d, "defect")->required()->check(CLI::NonNegativeNumber);
  def_cmd->add_option("--n0", def_p.n0, "density threshold subgraph size")
      ->check(CLI::PositiveNumber);
  def_cmd->callback([&] {
    const auto g = sc::read_graph_file(def_c.graph_file);
    const auto lists = load_lists(def_l, g.vertex_count(), def_p.k);
    const json params{{"k", def_p.k}, {"d", def_p.d}, {"n0", def_p.n0}};
    status = run_colouring("colour-defective", g, params, def_l.seed, def_c.json_out,
                           [&] { return sc::choose_defective(g, lists, def_p, def_l.seed); });
  });

  // colour-clustered
  Common cl_c;
  ListSource cl_l;
  std::string cl_mode;
  int cl_k = 0;
  int cl_n0 = 1;
  std::string cl_stable_file;
  auto* cl_cmd = app.add_subcommand("colour-clustered", "list colouring with bounded clustering");
  add_graph(cl_cmd, cl_c);
  add_json(cl_cmd, cl_c);
  add_lists(cl_cmd, cl_l);
  cl_cmd->add_option("--mode", cl_mode, "solver")
      ->required()
      ->check(CLI::IsMember({"maxdeg", "abs9", "mad7_10", "ext"}));
  cl_cmd->add_option("--k", cl_k, "list size")->required()->check(CLI::PositiveNumber);
  cl_cmd->add_option("--n0", cl_n0, "density threshold subgraph size (ext)")
      ->check(CLI::PositiveNumber);
  cl_cmd->add_option("--I", cl_stable_file, "stable set file (abs9)")->check(CLI::ExistingFile);
  cl_cmd->callback([&] {
    const auto g = sc::read_graph_file(cl_c.graph_file);
    const int n = g.vertex_count();
    const auto lists = load_lists(cl_l, n, cl_k);
    std::vector<sc::Vertex> stable;
    if (!cl_stable_file.empty()) stable = sc::read_vertex_set_file(cl_stable_file, n);
    const json params{{"mode", cl_mode}, {"k", cl_k}, {"n0", cl_n0}, {"I", stable}};
    const auto seed = cl_l.seed;
    status = run_colouring("colour-clustered", g, params, seed, cl_c.json_out, [&] {
      if (cl_mode == "maxdeg") return sc::choose_clustered_maxdeg(g, lists, seed);
      if (cl_mode == "abs9") return sc::choose_clustered_absolute(g, lists, stable, seed);
      if (cl_mode == "mad7_10") return sc::choose_clustered_mad7_10(g, lists, seed);
      return sc::choose_clustered_extension(g, lists, cl_k, cl_n0, seed);
    });
  });

  // oracle
  Common or_c;
  ListSource or_l;
  int or_k = 2;
  std::string or_objective = "defect";
  std::int64_t or_cap = sc::kDefaultOracleCap;
  auto* or_cmd = app.add_subcommand("oracle", "exact minimum defect or clustering");
  add_graph(or_cmd, or_c);
  add_json(or_cmd, or_c);
  add_lists(or_cmd, or_l);
  or_cmd->add_option("--k", or_k, "list size for random lists")->check(CLI::PositiveNumber);
  or_cmd->add_option("--objective", or_objective)
      ->check(CLI::IsMember({"defect", "clustering"}));
  or_cmd->add_option("--cap", or_cap, "largest product of list sizes searched");
  or_cmd->callback([&] {
    const auto g = sc::read_graph_file(or_c.graph_file);
    const auto lists = load_lists(or_l, g.vertex_count(), or_k);
    const auto objective =
        or_objective == "defect" ? sc::Objective::Defect : sc::Objective::Clustering;
    const Stopwatch watch;
    const auto res = sc::oracle_colour(g, lists, objective, or_cap);
    const json out{{"command", "oracle"},          {"graph", sc::graph_json(g)},
                   {"objective", or_objective},    {"minimum", res.minimum},
                   {"colours", res.witness},       {"explored", res.explored},
                   {"elapsed_ms", watch.ms()},     {"ok", true}};
    emit(out, or_c.json_out);
    std::cout << "oracle: minimum " << or_objective << " " << res.minimum << " ("
              << res.explored << " nodes)\ncolours: " << join(res.witness) << "\n";
  });

  // gen
  sc::GenSpec gen;
  std::string gen_family;
  std::string gen_target = "4";
  std::string gen_out;
  auto* gen_cmd = app.add_subcommand("gen", "generate a graph");
  gen_cmd->add_option("--family", gen_family)->required();
  gen_cmd->add_option("--n", gen.n, "vertex count")->required()->check(CLI::NonNegativeNumber);
  gen_cmd->add_option("--m", gen.m, "second size parameter")->check(CLI::NonNegativeNumber);
  gen_cmd->add_option("--layers", gen.layers, "thickness layers")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--target", gen_target, "mad upper bound p/q (randomMadBounded)");
  gen_cmd->add_option("--seed", gen.seed);
  gen_cmd->add_option("-o,--output", gen_out, "output file (default stdout)");
  gen_cmd->callback([&] {
    gen.family = sc::parse_family(gen_family);
    gen.target = sc::parse_rational(gen_target);
    const auto g = sc::generate(gen);
    if (gen_out.empty()) std::cout << sc::format_graph(g);
    else sc::write_graph_file(gen_out, g);
  });

  // preset
  std::string pr_class;
  sc::PresetParams pr_params;
  std::string pr_json;
  auto* pr_cmd = app.add_subcommand("preset", "guarantees for a graph class");
  pr_cmd->add_option("class", pr_class)->required();
  pr_cmd->add_option("--t", pr_params.t, "thickness");
  pr_cmd->add_option("--g", pr_params.g, "Euler genus of each layer");
  pr_cmd->add_option("--k", pr_params.k, "stack or queue number");
  pr_cmd->add_option("--json", pr_json, "write the JSON report to this file");
  pr_cmd->callback([&] {
    const auto preset = sc::preset_bounds(sc::parse_preset_class(pr_class), pr_params);
    emit(sc::preset_json(preset), pr_json);
    std::cout << sc::to_string(preset.cls) << ": mad";
    if (preset.mad_n0 > 1) std::cout << "(G, " << preset.mad_n0 << ")";
    std::cout << " < " << preset.mad_bound.to_string() << "\n";
    for (const auto& row : preset.rows)
      std::cout << "  " << row.colours << " colours, " << sc::to_string(row.kind) << " <= "
                << row.bound << "  via " << sc::to_string(row.solver) << "\n";
  });

  // verify
  Common ve_c;
  std::string ve_colouring;
  std::string ve_lists;
  std::string ve_kind = "clustering";
  int ve_bound = 0;
  auto* ve_cmd = app.add_subcommand("verify", "check a colouring against a bound");
  add_graph(ve_cmd, ve_c);
  add_json(ve_cmd, ve_c);
  ve_cmd->add_option("--colouring", ve_colouring)->required()->check(CLI::ExistingFile);
  ve_cmd->add_option("--lists", ve_lists, "list-assignment file (default: any colour)")
      ->check(CLI::ExistingFile);
  ve_cmd->add_option("--kind", ve_kind)->check(CLI::IsMember({"defect", "clustering"}));
  ve_cmd->add_option("--bound", ve_bound)->required()->check(CLI::NonNegativeNumber);
  ve_cmd->callback([&] {
    const auto g = sc::read_graph_file(ve_c.graph_file);
    sc::ColouringResult result;
    result.colouring = sc::read_colouring_file(ve_colouring);
    if (static_cast<int>(result.colouring.size()) != g.vertex_count())
      throw sc::Error(sc::Errc::InvalidColouring, "colouring has " +
                                                      std::to_string(result.colouring.size()) +
                                                      " entries for " +
                                                      std::to_string(g.vertex_count()) +
                                                      " vertices");
    sc::ListAssignment lists;
    if (!ve_lists.empty()) {
      lists = sc::read_lists_file(ve_lists, g.vertex_count());
    } else {
      std::vector<std::vector<sc::Colour>> own;
      for (sc::Colour c : result.colouring) own.push_back({c});
      lists = sc::ListAssignment(std::move(own));
    }
    const auto kind = ve_kind == "defect" ? sc::BoundKind::Defect : sc::BoundKind::Clustering;
    const json params{{"kind", ve_kind}, {"bound", ve_bound}};
    status = run_colouring("verify", g, params, 0, ve_c.json_out, [&] {
      result.report = sc::verify(g, lists, result.colouring, kind, ve_bound);
      return result;
    });
  });

  // transversal
  Common tr_c;
  std::string tr_parts;
  std::uint64_t tr_seed = 0;
  bool tr_oracle = false;
  auto* tr_cmd = app.add_subcommand("transversal", "independent transversal of a partition");
  add_graph(tr_cmd, tr_c);
  add_json(tr_cmd, tr_c);
  tr_cmd->add_option("--parts", tr_parts, "one part per line")->required()->check(CLI::ExistingFile);
  tr_cmd->add_option("--seed", tr_seed);
  tr_cmd->add_flag("--oracle", tr_oracle, "plain enumeration instead");
  tr_cmd->callback([&] {
    sc::TransversalInstance inst{sc::read_graph_file(tr_c.graph_file), {}};
    inst.parts = sc::read_parts_file(tr_parts, inst.conflict.vertex_count());
    std::optional<std::vector<sc::Vertex>> picks;
    if (tr_oracle) {
      picks = sc::oracle_transversal(inst);
    } else {
      try {
        picks = sc::independent_transversal(inst, tr_seed);
      } catch (const sc::Error& e) {
        if (e.code() != sc::Errc::NotFound) throw;
      }
    }
    const bool ok = picks && sc::is_stable_set(inst.conflict, *picks);
    json out{{"command", "transversal"}, {"graph", sc::graph_json(inst.conflict)},
             {"parts", inst.parts.size()}, {"ok", ok}, {"seed", tr_seed}};
    out["transversal"] = picks ? json(*picks) : json(nullptr);
    emit(out, tr_c.json_out);
    if (picks) std::cout << "transversal: " << join(*picks) << (ok ? "" : "  NOT STABLE") << "\n";
    else std::cout << "transversal: none exists\n";
    status = ok ? 0 : kExitFailed;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitInput;
  } catch (const sc::Error& e) {
    std::cerr << "error: " << sc::to_string(e.code()) << ": " << e.what() << "\n";
    return e.code() == sc::Errc::Internal ? kExitFailed : kExitInput;
  }
  return status;
}
