#include "imkit/harness.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <set>
#include <sstream>

#include "imkit/aapc.hpp"
#include "imkit/baselines.hpp"
#include "imkit/eaapc.hpp"
#include "imkit/errors.hpp"
#include "imkit/oracle.hpp"
#include "imkit/rng.hpp"

namespace imkit {

std::string algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::Aapc: return "aapc";
    case Algorithm::Eaapc: return "eaapc";
    case Algorithm::GreedyMc: return "greedy-mc";
    case Algorithm::SteadyState: return "steady-state";
    case Algorithm::Degree: return "degree";
  }
  return "?";
}

Algorithm parse_algorithm(const std::string& name) {
  if (name == "aapc") return Algorithm::Aapc;
  if (name == "eaapc") return Algorithm::Eaapc;
  if (name == "greedy-mc") return Algorithm::GreedyMc;
  if (name == "steady-state") return Algorithm::SteadyState;
  if (name == "degree") return Algorithm::Degree;
  throw ValidationError("unknown algorithm '" + name + "'");
}

void ExperimentConfig::validate() const {
  if (k < 1) throw ValidationError("k must be >= 1");
  if (uniform_prob && !(*uniform_prob > 0.0 && *uniform_prob <= 1.0))
    throw ValidationError("p must lie in (0,1]");
  if (algorithm == Algorithm::Eaapc) {
    if (eps.has_value() == level_cap.has_value())
      throw ValidationError(
          "eaapc needs exactly one of eps / max-level");
    if (eps && !(*eps > 0.0 && *eps < 1.0))
      throw ValidationError("eps must lie in (0,1)");
  }
  if (reps_select < 1 || reps_eval < 1)
    throw ValidationError("replication counts must be >= 1");
}

Graph figure1_graph(double p) {
  if (!(p > 0.0 && p <= 1.0)) throw ValidationError("p must lie in (0,1]");
  std::vector<Arc> arcs{{0, 1, p}, {1, 2, p}, {2, 3, p}, {3, 1, p}};
  return Graph::from_arcs(4, std::move(arcs));
}

Graph figure2_graph() {
  std::istringstream edges("1 2\n2 3\n3 2\n1 4\n4 5\n5 3\n");
  LoadOptions opts;
  opts.uniform_prob = 0.1;
  return load_edge_list(edges, opts);
}

Graph preferential_attachment_graph(VertexId n, std::uint32_t out_per_vertex,
                                    double uniform_prob, std::uint64_t seed) {
  if (n < 2 || out_per_vertex < 1)
    throw ValidationError("need n >= 2 and out_per_vertex >= 1");
  RandomStream rng(seed);
  // Repeated-endpoint list gives degree-proportional sampling.
  std::vector<VertexId> endpoint_pool;
  std::vector<Arc> arcs;
  std::set<std::pair<VertexId, VertexId>> seen;
  auto add_arc = [&](VertexId a, VertexId b) {
    if (a == b) return;
    if (seen.emplace(a, b).second) arcs.push_back({a, b, uniform_prob});
    if (seen.emplace(b, a).second) arcs.push_back({b, a, uniform_prob});
  };
  add_arc(0, 1);
  endpoint_pool.insert(endpoint_pool.end(), {0, 1, 0, 1});
  for (VertexId v = 2; v < n; ++v) {
    std::uint32_t wanted = std::min<std::uint32_t>(out_per_vertex, v);
    for (std::uint32_t i = 0; i < wanted; ++i) {
      VertexId target =
          endpoint_pool[rng.next_u64() % endpoint_pool.size()];
      add_arc(v, target);
      endpoint_pool.push_back(target);
      endpoint_pool.push_back(v);
    }
  }
  return Graph::from_arcs(n, std::move(arcs));
}

SeedSelectionResult run_selection(const Graph& g, const ExperimentConfig& cfg,
                                  unsigned threads) {
  cfg.validate();
  switch (cfg.algorithm) {
    case Algorithm::Aapc:
      return aapc_select(g, cfg.k, cfg.horizon, cfg.lazy, threads);
    case Algorithm::Eaapc: {
      std::uint32_t cap = cfg.level_cap
                              ? *cfg.level_cap
                              : max_level(average_arc_prob(g), *cfg.eps);
      return eaapc_select(g, cfg.k, cap, threads);
    }
    case Algorithm::GreedyMc:
      return greedy_mc_select(g, cfg.k, cfg.reps_select, cfg.master_seed,
                              /*lazy=*/true, threads);
    case Algorithm::Degree:
      return degree_select(g, cfg.k);
    case Algorithm::SteadyState:
      throw ValidationError("steady-state is a probability solver, not a "
                            "seed selector");
  }
  throw ValidationError("unreachable algorithm tag");
}

std::vector<ReportRow> run_experiment(const Graph& g,
                                      const ExperimentConfig& cfg,
                                      unsigned threads) {
  SeedSelectionResult sel = run_selection(g, cfg, threads);
  std::vector<ReportRow> rows;
  rows.reserve(sel.seeds.size());
  for (std::uint32_t prefix = 1; prefix <= sel.seeds.size(); ++prefix) {
    auto eval_start = std::chrono::steady_clock::now();
    std::span<const VertexId> seeds(sel.seeds.data(), prefix);
    SpreadEstimate est = estimate_influence_mc(g, seeds, cfg.reps_eval,
                                               cfg.master_seed, threads);
    std::chrono::duration<double> eval_time =
        std::chrono::steady_clock::now() - eval_start;
    ReportRow row;
    row.algorithm = sel.algorithm;
    row.k_prefix = prefix;
    row.spread_mean = est.mean;
    row.spread_stderr = est.std_error;
    row.select_time = sel.wall_time.count();
    row.eval_time = eval_time.count();
    rows.push_back(row);
  }
  return rows;
}

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

void write_rows_csv(const std::vector<ReportRow>& rows, std::ostream& out,
                    bool include_timings) {
  out << "algorithm,k_prefix,spread_mean,spread_stderr";
  if (include_timings) out << ",select_time,eval_time";
  out << "\n";
  for (const ReportRow& r : rows) {
    out << r.algorithm << ',' << r.k_prefix << ',' << fmt(r.spread_mean)
        << ',' << fmt(r.spread_stderr);
    if (include_timings)
      out << ',' << fmt(r.select_time) << ',' << fmt(r.eval_time);
    out << "\n";
  }
}

void write_rows_jsonl(const std::vector<ReportRow>& rows, std::ostream& out,
                      bool include_timings) {
  for (const ReportRow& r : rows) {
    out << "{\"algorithm\":\"" << r.algorithm
        << "\",\"k_prefix\":" << r.k_prefix
        << ",\"spread_mean\":" << fmt(r.spread_mean)
        << ",\"spread_stderr\":" << fmt(r.spread_stderr);
    if (include_timings)
      out << ",\"select_time\":" << fmt(r.select_time)
          << ",\"eval_time\":" << fmt(r.eval_time);
    out << "}\n";
  }
}

std::vector<AccuracyRow> accuracy_report(const Graph& fixture,
                                         std::span<const VertexId> seeds,
                                         std::uint32_t t_max) {
  ProbTable table = activation_probabilities(fixture, seeds, t_max);
  SteadyStateResult steady = steady_state_probabilities(fixture, seeds);
  ExactInfluence exact = exact_influence_enumeration(fixture, seeds);

  std::vector<AccuracyRow> rows;
  rows.reserve(fixture.num_vertices());
  for (VertexId v = 0; v < fixture.num_vertices(); ++v) {
    AccuracyRow row;
    row.vertex_label = fixture.original_id(v);
    for (std::uint32_t t = 0; t <= t_max; ++t)
      row.aapc_till.push_back(table.probtill(v, t));
    row.steady_state = steady.probs[v];
    row.exact = exact.activation[v];
    rows.push_back(row);
  }
  return rows;
}

void write_accuracy_csv(const std::vector<AccuracyRow>& rows,
                        std::ostream& out) {
  if (rows.empty()) return;
  out << "vertex";
  for (std::size_t t = 0; t < rows.front().aapc_till.size(); ++t)
    out << ",aapc_t" << t;
  out << ",steady_state,exact\n";
  for (const AccuracyRow& r : rows) {
    out << r.vertex_label;
    for (double v : r.aapc_till) out << ',' << fmt(v);
    out << ',' << fmt(r.steady_state) << ',' << fmt(r.exact) << "\n";
  }
}

}  // namespace imkit
