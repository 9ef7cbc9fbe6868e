// wiener: generators, exact convex solver, oracles and renderers for
// minimum-Wiener spanning trees and paths.
//
// Exit codes: 0 success, 1 internal error, 2 invalid input, 3 limit exceeded,
// 4 infeasible.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wiener/wiener.hpp"

namespace {

using wiener::json;

constexpr int kExitInternal = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitLimit = 3;
constexpr int kExitInfeasible = 4;

struct RunConfig {
  std::string input;
  std::string output;
  std::uint64_t seed = 0;
  double tolerance = wiener::kRelTol;
  unsigned threads = 1;
  bool force = false;
  std::size_t max_n = 0;  // 0: keep the oracle default cap
};

std::string read_text(const std::string& path) {
  if (path.empty() || path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw wiener::InvalidInput("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json read_json(const std::string& path) {
  try {
    return json::parse(read_text(path));
  } catch (const json::parse_error& e) {
    throw wiener::InvalidInput("'" + (path.empty() ? std::string("<stdin>") : path) + "' is not valid JSON: " + e.what());
  }
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw wiener::InvalidInput("cannot write '" + path + "'");
  out << text;
}

void write_json(const std::string& path, const json& j) { write_text(path, j.dump(2) + "\n"); }

wiener::OracleLimits limits(const RunConfig& cfg) {
  wiener::OracleLimits lim;
  lim.force = cfg.force;
  lim.threads = cfg.threads;
  lim.budget_tolerance = cfg.tolerance;
  if (cfg.max_n != 0) {
    lim.max_tree_nodes = cfg.max_n;
    lim.max_path_nodes = cfg.max_n;
  }
  return lim;
}

// Tree from a separate file, else from "tree" or "sidecar.tree" in the document.
std::optional<wiener::SpanningTree> embedded_tree(const json& doc, const std::string& tree_file) {
  if (!tree_file.empty()) return wiener::tree_from_json(read_json(tree_file));
  if (doc.contains("tree")) return wiener::tree_from_json(doc.at("tree"));
  if (doc.contains("sidecar") && doc.at("sidecar").contains("tree")) {
    return wiener::tree_from_json(doc.at("sidecar").at("tree"));
  }
  return std::nullopt;
}

std::optional<wiener::HamiltonianPath> embedded_path(const json& doc, const std::string& path_file) {
  if (!path_file.empty()) {
    const json j = read_json(path_file);
    if (j.contains("witness")) return wiener::path_from_json(j.at("witness"));
    return wiener::path_from_json(j);
  }
  if (doc.contains("path")) return wiener::path_from_json(doc.at("path"));
  return std::nullopt;
}

std::vector<wiener::Edge> path_edges(const wiener::HamiltonianPath& p) { return wiener::path_as_tree(p).edges; }

// --- commands ---------------------------------------------------------------

int cmd_gen_convex(const RunConfig& cfg, std::size_t n) {
  write_json(cfg.output, wiener::to_json(wiener::gen_random_convex(n, cfg.seed)));
  return 0;
}

int cmd_gen_grid(const RunConfig& cfg, std::size_t w, std::size_t h) {
  write_json(cfg.output, wiener::to_json(wiener::gen_grid(w, h)));
  return 0;
}

int cmd_gen_partition(const RunConfig& cfg, const std::vector<std::int64_t>& x,
                      const std::optional<std::vector<std::size_t>>& subset, const std::string& sidecar_file) {
  if (x.size() > wiener::kPartitionDeskScaleMax) {
    std::cerr << "warning: " << x.size() << " numbers give " << x.size() * x.size() * x.size() + 3 * x.size()
              << " points; verification beyond n = " << wiener::kPartitionDeskScaleMax << " is slow\n";
  }
  const auto inst = wiener::gen_partition_instance(x);
  json sidecar = wiener::sidecar_json(inst);
  if (subset) {
    sidecar["subset"] = *subset;
    sidecar["subset_sum"] = wiener::subset_sum(inst, *subset);
    sidecar["tree"] = wiener::to_json(wiener::build_partition_tree(inst, *subset));
  }
  json doc = wiener::to_json(inst.points);
  doc["sidecar"] = sidecar;
  write_json(cfg.output, doc);
  if (!sidecar_file.empty()) write_json(sidecar_file, sidecar);
  return 0;
}

int cmd_gen_path_counterexample(const RunConfig& cfg, std::size_t m, double epsilon) {
  const auto inst = wiener::gen_path_counterexample(m, epsilon);
  json doc = wiener::to_json(inst.points);
  doc["sidecar"] = json{{"m", inst.m}, {"epsilon", inst.epsilon}};
  write_json(cfg.output, doc);
  return 0;
}

int cmd_solve(const RunConfig& cfg, bool tables) {
  const auto ps = wiener::point_set_from_json(read_json(cfg.input));
  if (ps.size() >= 3) {
    if (auto bad = wiener::convexity_violation(ps)) {
      throw wiener::InvalidInput("input is not in strictly convex position: point " + std::to_string(*bad) + " (" +
                                 std::to_string(ps[*bad].x) + ", " + std::to_string(ps[*bad].y) +
                                 ") is not a strict hull vertex");
    }
  }
  wiener::DPOptions opts;
  opts.threads = cfg.threads;
  const auto sol = wiener::solve_convex(ps, opts);
  json out = wiener::to_json(sol);
  if (tables) out["tables"] = wiener::to_json(wiener::dp_tables_ordered(ps, sol.order, opts));
  write_json(cfg.output, out);
  return 0;
}

int cmd_wiener(const RunConfig& cfg, const std::string& tree_file) {
  const json doc = read_json(cfg.input);
  const auto ps = wiener::point_set_from_json(doc);
  const auto tree = embedded_tree(doc, tree_file);
  if (!tree) throw wiener::InvalidInput("no tree given (use --tree or embed a \"tree\" key)");
  const auto report = wiener::wiener_edge_contribution(*tree, ps);
  const double pairwise = wiener::wiener_pairwise(*tree, ps);
  json out = wiener::to_json(report);
  out["wiener_pairwise"] = pairwise;
  out["wiener_edge_contribution"] = report.wiener;
  out["difference"] = pairwise - report.wiener;
  out["methods_agree"] = wiener::approx_equal(pairwise, report.wiener, cfg.tolerance);
  write_json(cfg.output, out);
  return 0;
}

int cmd_oracle(const RunConfig& cfg, const std::string& mode, std::optional<double> budget) {
  const auto ps = wiener::point_set_from_json(read_json(cfg.input));
  const auto lim = limits(cfg);
  json out;
  if (mode == "tree") {
    out = wiener::to_json(wiener::min_wiener_tree_bruteforce(ps, lim));
  } else if (mode == "path") {
    out = wiener::to_json(wiener::min_wiener_path_bruteforce(ps, lim));
  } else {
    if (!budget) throw wiener::InvalidInput("budgeted mode needs --budget");
    const auto r = wiener::budgeted_min_wiener(ps, *budget, lim);
    out = wiener::to_json(r);
    out["budget"] = *budget;
    if (!r.feasible) {
      write_json(cfg.output, out);
      return kExitInfeasible;
    }
  }
  out["mode"] = mode;
  write_json(cfg.output, out);
  return 0;
}

int cmd_render(const RunConfig& cfg, const std::string& tree_file, const std::string& path_file) {
  const json doc = read_json(cfg.input);
  const auto ps = wiener::point_set_from_json(doc);
  std::vector<wiener::Edge> edges;
  if (auto path = embedded_path(doc, path_file)) {
    wiener::require_path_on(*path, ps);
    edges = path_edges(*path);
  } else if (auto tree = embedded_tree(doc, tree_file)) {
    wiener::require_tree_on(*tree, ps);
    edges = tree->edges;
  }
  write_text(cfg.output, wiener::render_svg(ps, edges));
  return 0;
}

struct PathsArgs {
  std::optional<std::size_t> twelve_config;
  std::optional<std::size_t> sweep;
  bool oracle = false;
  bool bound_check = false;
  std::string path_file;
  std::string svg_file;
};

int cmd_paths(const RunConfig& cfg, const PathsArgs& args) {
  if (args.twelve_config) {
    json rows = json::array();
    for (const auto& r : wiener::twelve_config_wiener(*args.twelve_config)) {
      rows.push_back(json{{"order", wiener::config_label(r.config)}, {"wiener", r.wiener}, {"planar", r.planar}});
    }
    write_json(cfg.output, json{{"m", *args.twelve_config}, {"configs", rows}});
    return 0;
  }
  if (args.sweep) {
    const auto s = wiener::sweep_nonplanar_threshold(*args.sweep);
    write_json(cfg.output, json{{"m_max", s.m_max},
                                {"threshold", s.threshold},
                                {"nonplanar_from_threshold", s.threshold != 0},
                                {"ambiguous_tie", s.ambiguous_tie}});
    return 0;
  }

  const json doc = read_json(cfg.input);
  const auto ps = wiener::point_set_from_json(doc);
  const auto lim = limits(cfg);
  std::optional<wiener::HamiltonianPath> drawn;
  json out;
  if (args.oracle) {
    const auto r = wiener::min_wiener_path_bruteforce(ps, lim);
    out = wiener::to_json(r);
    out["planar"] = wiener::is_path_planar(r.best_witness, ps);
    drawn = r.best_witness;
  } else if (args.bound_check) {
    if (auto given = embedded_path(doc, args.path_file)) {
      const auto rep = wiener::grid_path_bound_check(ps, *given, cfg.tolerance);
      out = json{{"value", rep.value}, {"bound", rep.bound}, {"ok", rep.ok},
                 {"complete_graph", rep.complete_graph}, {"ratio", rep.ratio}};
      drawn = *given;
    } else {
      // Every Hamiltonian path against the bound.
      std::uint64_t count = 0, violations = 0;
      double best = 0.0;
      wiener::HamiltonianPath best_path;
      std::uint64_t bound = 0;
      double complete = 0.0;
      wiener::for_each_hamiltonian_path(ps.size(), [&](const wiener::HamiltonianPath& p) {
        const auto rep = wiener::grid_path_bound_check(ps, p, cfg.tolerance);
        if (!rep.ok) ++violations;
        if (count == 0 || rep.value < best) {
          best = rep.value;
          best_path = p;
        }
        bound = rep.bound;
        complete = rep.complete_graph;
        ++count;
      }, lim);
      out = json{{"count", count},       {"bound", bound},     {"violations", violations},
                 {"ok", violations == 0}, {"min_value", best}, {"complete_graph", complete},
                 {"ratio", best / complete}, {"witness", wiener::to_json(best_path)}};
      drawn = best_path;
    }
  } else {
    throw wiener::InvalidInput("paths needs one of --twelve-config, --sweep, --oracle, --bound-check");
  }
  write_json(cfg.output, out);
  if (!args.svg_file.empty() && drawn) write_text(args.svg_file, wiener::render_svg(ps, path_edges(*drawn)));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimum-Wiener spanning trees and paths of planar point sets"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_io = [&](CLI::App* sub, bool with_input) {
    if (with_input) sub->add_option("-i,--input", cfg.input, "Input JSON file (stdin if omitted)");
    sub->add_option("-o,--output", cfg.output, "Output file (stdout if omitted)");
  };
  auto add_tolerance = [&](CLI::App* sub) {
    sub->add_option("--tolerance", cfg.tolerance, "Relative comparison tolerance")
        ->check(CLI::PositiveNumber);
  };
  auto add_oracle_flags = [&](CLI::App* sub) {
    sub->add_flag("--force", cfg.force, "Allow exhaustive search beyond the size cap");
    sub->add_option("--max-n", cfg.max_n, "Override the oracle size cap")->check(CLI::Range(2, 20));
    sub->add_option("--threads", cfg.threads, "Worker threads")->check(CLI::Range(1, 256));
  };

  // gen
  auto* gen = app.add_subcommand("gen", "Generate point sets");
  gen->require_subcommand(1);
  std::size_t n = 0, w = 0, h = 0, m = 1;
  double epsilon = 0.0;
  std::vector<std::int64_t> xs;
  std::vector<std::size_t> subset;
  std::string sidecar_file;

  auto* gen_convex = gen->add_subcommand("convex", "Random strictly convex point set");
  gen_convex->add_option("--n", n, "Number of points")->required();
  gen_convex->add_option("--seed", cfg.seed, "RNG seed");
  add_io(gen_convex, false);

  auto* gen_grid = gen->add_subcommand("grid", "Integer grid");
  gen_grid->set_help_flag("--help", "Print this help message and exit");
  gen_grid->add_option("--w", w, "Width")->required();
  gen_grid->add_option("--h", h, "Height")->required();
  add_io(gen_grid, false);

  auto* gen_part = gen->add_subcommand("partition", "Partition reduction instance");
  gen_part->add_option("--x", xs, "Positive integers with even sum")->required()->delimiter(',');
  auto* subset_opt = gen_part->add_option("--tree-subset", subset, "0-based indices of S; also emits the tree")
                         ->delimiter(',')
                         ->expected(0, -1);
  gen_part->add_option("--sidecar", sidecar_file, "Also write the sidecar alone to this file");
  add_io(gen_part, false);

  auto* gen_pce = gen->add_subcommand("path-counterexample", "Two heavy clusters plus p and q");
  gen_pce->add_option("--m", m, "Cluster multiplicity")->required();
  gen_pce->add_option("--epsilon", epsilon, "Cluster spread radius");
  add_io(gen_pce, false);

  // solve
  auto* solve = app.add_subcommand("solve", "Exact minimum-Wiener tree of a strictly convex set");
  bool tables = false;
  solve->add_flag("--tables", tables, "Dump both DP tables");
  solve->add_option("--threads", cfg.threads, "Worker threads per DP stage")->check(CLI::Range(1, 256));
  add_io(solve, true);

  // wiener
  auto* wien = app.add_subcommand("wiener", "Wiener index of a tree, computed two ways");
  std::string tree_file, path_file;
  wien->add_option("--tree", tree_file, "SpanningTree JSON (else taken from the input document)");
  add_tolerance(wien);
  add_io(wien, true);

  // oracle
  auto* oracle = app.add_subcommand("oracle", "Exhaustive minimum search");
  std::string mode = "tree";
  std::optional<double> budget;
  oracle->add_option("--mode", mode, "tree | path | budgeted")->check(CLI::IsMember({"tree", "path", "budgeted"}));
  oracle->add_option("--budget", budget, "Weight budget for budgeted mode");
  add_tolerance(oracle);
  add_oracle_flags(oracle);
  add_io(oracle, true);

  // render
  auto* render = app.add_subcommand("render", "SVG of points with an optional tree or path");
  render->add_option("--tree", tree_file, "SpanningTree JSON");
  render->add_option("--path", path_file, "HamiltonianPath JSON");
  add_io(render, true);

  // paths
  auto* paths = app.add_subcommand("paths", "Hamiltonian-path tooling");
  PathsArgs pargs;
  paths->add_option("--twelve-config", pargs.twelve_config, "Evaluate the 12 super-node orders for multiplicity m");
  paths->add_option("--sweep", pargs.sweep, "Find the non-planarity threshold over m = 1..M");
  paths->add_flag("--oracle", pargs.oracle, "Exhaustive minimum-Wiener Hamiltonian path");
  paths->add_flag("--bound-check", pargs.bound_check, "Check the C(n+1,3) lower bound");
  paths->add_option("--path", pargs.path_file, "HamiltonianPath JSON for --bound-check");
  paths->add_option("--svg", pargs.svg_file, "Also render the path as SVG");
  add_tolerance(paths);
  add_oracle_flags(paths);
  add_io(paths, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalid;
  }

  try {
    if (gen_convex->parsed()) return cmd_gen_convex(cfg, n);
    if (gen_grid->parsed()) return cmd_gen_grid(cfg, w, h);
    if (gen_part->parsed()) {
      std::optional<std::vector<std::size_t>> s;
      if (subset_opt->count() > 0) s = subset;
      return cmd_gen_partition(cfg, xs, s, sidecar_file);
    }
    if (gen_pce->parsed()) return cmd_gen_path_counterexample(cfg, m, epsilon);
    if (solve->parsed()) return cmd_solve(cfg, tables);
    if (wien->parsed()) return cmd_wiener(cfg, tree_file);
    if (oracle->parsed()) return cmd_oracle(cfg, mode, budget);
    if (render->parsed()) return cmd_render(cfg, tree_file, path_file);
    if (paths->parsed()) return cmd_paths(cfg, pargs);
  } catch (const wiener::InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const wiener::LimitExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitLimit;
  } catch (const json::exception& e) {
    std::cerr << "error: malformed JSON input: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInvalid;
}
