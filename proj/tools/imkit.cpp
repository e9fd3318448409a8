#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "imkit/aapc.hpp"
#include "imkit/baselines.hpp"
#include "imkit/eaapc.hpp"
#include "imkit/errors.hpp"
#include "imkit/graph.hpp"
#include "imkit/harness.hpp"
#include "imkit/oracle.hpp"

namespace {

using namespace imkit;

Graph load_input(const std::string& input, bool undirected,
                 std::optional<double> p, LoadStats* stats = nullptr) {
  if (input == "figure1") return figure1_graph(p.value_or(0.1));
  if (input == "figure2") return figure2_graph();
  LoadOptions opts;
  opts.undirected = undirected;
  opts.uniform_prob = p;
  return load_edge_list_file(input, opts, stats);
}

std::vector<VertexId> parse_seed_list(const Graph& g,
                                      const std::string& text) {
  std::vector<VertexId> seeds;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    std::uint64_t label = 0;
    try {
      label = std::stoull(tok);
    } catch (const std::exception&) {
      throw ValidationError("bad seed id '" + tok + "'");
    }
    auto id = g.compact_id(label);
    if (!id) throw ValidationError("seed " + tok + " is not in the graph");
    seeds.push_back(*id);
  }
  if (seeds.empty()) throw ValidationError("empty seed list");
  return seeds;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write '" + path + "'");
  return out;
}

void write_selection(const Graph& g, const SeedSelectionResult& sel,
                     std::ostream& out, const std::string& format) {
  if (format == "jsonl") {
    for (std::size_t i = 0; i < sel.seeds.size(); ++i) {
      out << "{\"round\":" << i + 1
          << ",\"vertex\":" << g.original_id(sel.seeds[i]);
      if (i < sel.estimates.size()) {
        char buf[40];
        std::snprintf(buf, sizeof(buf), "%.17g", sel.estimates[i]);
        out << ",\"estimate\":" << buf;
      }
      out << "}\n";
    }
    return;
  }
  out << "round,vertex,estimate\n";
  for (std::size_t i = 0; i < sel.seeds.size(); ++i) {
    out << i + 1 << ',' << g.original_id(sel.seeds[i]) << ',';
    if (i < sel.estimates.size()) {
      char buf[40];
      std::snprintf(buf, sizeof(buf), "%.17g", sel.estimates[i]);
      out << buf;
    }
    out << "\n";
  }
}

int run(int argc, char** argv) {
  CLI::App app{"Influence maximization toolkit (independent cascade model)"};
  app.require_subcommand(1);

  std::string input, out_path, seeds_text, algo = "aapc", format = "csv";
  std::string fixture = "figure2";
  bool undirected = false, lazy = false;
  std::optional<double> p, eps;
  std::optional<std::uint32_t> level_cap;
  std::uint32_t k = 50, horizon = 6;
  std::uint64_t reps = 5000, master_seed = 1;

  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("--input", input,
                    "edge-list path, or fixture name figure1/figure2")
        ->required();
    cmd->add_flag("--undirected", undirected,
                  "expand each edge into two arcs");
    cmd->add_option("--p", p, "uniform propagation probability");
  };

  CLI::App* select = app.add_subcommand("select", "choose k seed vertices");
  add_input(select);
  select->add_option("--algo", algo, "aapc|eaapc|greedy-mc|degree");
  select->add_option("--k", k, "seed count")->required();
  select->add_option("--T", horizon, "analytic horizon (aapc)");
  select->add_option("--eps", eps, "eaapc error tolerance");
  select->add_option("--max-level", level_cap, "eaapc BFS depth cap");
  select->add_option("--reps", reps, "MC replications (greedy-mc)");
  select->add_option("--seed", master_seed, "master RNG seed");
  select->add_flag("--lazy", lazy, "lazy (CELF) candidate re-evaluation");
  select->add_option("--out", out_path, "output file")->required();
  select->add_option("--format", format, "csv|jsonl");

  CLI::App* evaluate =
      app.add_subcommand("evaluate", "MC spread of a given seed set");
  add_input(evaluate);
  evaluate->add_option("--seeds", seeds_text, "comma-separated vertex ids")
      ->required();
  evaluate->add_option("--reps", reps, "MC replications");
  evaluate->add_option("--seed", master_seed, "master RNG seed");

  CLI::App* probs =
      app.add_subcommand("probs", "per-vertex activation probabilities");
  add_input(probs);
  probs->add_option("--seeds", seeds_text, "comma-separated vertex ids")
      ->required();
  probs->add_option("--algo", algo, "aapc|steady-state|eaapc");
  probs->add_option("--T", horizon, "analytic horizon (aapc)");
  probs->add_option("--eps", eps, "eaapc error tolerance");
  probs->add_option("--max-level", level_cap, "eaapc BFS depth cap");

  CLI::App* accuracy = app.add_subcommand(
      "accuracy", "analytic vs steady-state vs exact probabilities");
  accuracy->add_option("--fixture", fixture, "figure1|figure2");
  accuracy->add_option("--p", p, "uniform probability (figure1)");

  CLI::App* bench =
      app.add_subcommand("bench", "time every selector on one graph");
  add_input(bench);
  bench->add_option("--k", k, "seed count")->required();
  bench->add_option("--T", horizon, "analytic horizon (aapc)");
  bench->add_option("--eps", eps, "eaapc error tolerance");
  bench->add_option("--reps", reps, "MC replications");
  bench->add_option("--seed", master_seed, "master RNG seed");
  bench->add_option("--out", out_path, "also write rows (without timings)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // flag errors count as validation errors
  }

  if (select->parsed()) {
    Graph g = load_input(input, undirected, p);
    ExperimentConfig cfg;
    cfg.algorithm = parse_algorithm(algo);
    cfg.k = k;
    cfg.horizon = horizon;
    cfg.eps = eps;
    cfg.level_cap = level_cap;
    if (cfg.algorithm == Algorithm::Eaapc && !eps && !level_cap)
      cfg.eps = 1e-3;
    cfg.reps_select = reps;
    cfg.master_seed = master_seed;
    cfg.lazy = lazy;
    SeedSelectionResult sel = run_selection(g, cfg);
    std::ofstream out = open_output(out_path);
    write_selection(g, sel, out, format);
    std::cerr << sel.algorithm << ": selected " << sel.seeds.size()
              << " seeds in " << sel.wall_time.count() << " s\n";
    return 0;
  }

  if (evaluate->parsed()) {
    Graph g = load_input(input, undirected, p);
    std::vector<VertexId> seeds = parse_seed_list(g, seeds_text);
    SpreadEstimate est = estimate_influence_mc(g, seeds, reps, master_seed);
    std::cout << "mean,std_error,replications\n"
              << est.mean << ',' << est.std_error << ',' << est.replications
              << "\n";
    return 0;
  }

  if (probs->parsed()) {
    Graph g = load_input(input, undirected, p);
    std::vector<VertexId> seeds = parse_seed_list(g, seeds_text);
    std::vector<double> values;
    if (algo == "aapc") {
      ProbTable table = activation_probabilities(g, seeds, horizon);
      for (VertexId v = 0; v < g.num_vertices(); ++v)
        values.push_back(table.probtill(v, horizon));
    } else if (algo == "steady-state") {
      values = steady_state_probabilities(g, seeds).probs;
    } else if (algo == "eaapc") {
      std::uint32_t cap = level_cap ? *level_cap
                                    : max_level(average_arc_prob(g),
                                                eps.value_or(1e-3));
      values.assign(g.num_vertices(), 0.0);
      std::vector<VertexId> blocked;
      for (VertexId s : seeds) {
        values = combine_multi_seed(
            values, single_seed_probs(g, s, cap, blocked));
        blocked.push_back(s);
      }
    } else {
      throw ValidationError("probs supports aapc|steady-state|eaapc");
    }
    std::cout << "vertex,prob\n";
    for (VertexId v = 0; v < g.num_vertices(); ++v)
      std::cout << g.original_id(v) << ',' << values[v] << "\n";
    return 0;
  }

  if (accuracy->parsed()) {
    Graph g;
    std::vector<VertexId> seeds;
    if (fixture == "figure1") {
      g = figure1_graph(p.value_or(0.1));
      seeds = {0};
    } else if (fixture == "figure2") {
      g = figure2_graph();
      seeds = {*g.compact_id(1)};
    } else {
      throw ValidationError("fixture must be figure1 or figure2");
    }
    write_accuracy_csv(accuracy_report(g, seeds, 6), std::cout);
    return 0;
  }

  if (bench->parsed()) {
    Graph g = load_input(input, undirected, p);
    std::vector<ReportRow> all;
    for (Algorithm a : {Algorithm::Aapc, Algorithm::Eaapc,
                        Algorithm::GreedyMc, Algorithm::Degree}) {
      ExperimentConfig cfg;
      cfg.algorithm = a;
      cfg.k = k;
      cfg.horizon = horizon;
      if (a == Algorithm::Eaapc) cfg.eps = eps.value_or(1e-3);
      cfg.reps_select = reps;
      cfg.reps_eval = reps;
      cfg.master_seed = master_seed;
      std::vector<ReportRow> rows = run_experiment(g, cfg);
      all.insert(all.end(), rows.begin(), rows.end());
    }
    write_rows_csv(all, std::cout, /*include_timings=*/true);
    if (!out_path.empty()) {
      std::ofstream out = open_output(out_path);
      write_rows_csv(all, out, /*include_timings=*/false);
    }
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const imkit::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
