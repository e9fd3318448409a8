#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "imkit/graph.hpp"
#include "imkit/select_result.hpp"

namespace imkit {

enum class Algorithm { Aapc, Eaapc, GreedyMc, SteadyState, Degree };

std::string algorithm_name(Algorithm a);
Algorithm parse_algorithm(const std::string& name);

struct ExperimentConfig {
  std::string dataset;           // path, or fixture name "figure1"/"figure2"
  bool undirected = false;
  std::optional<double> uniform_prob;
  Algorithm algorithm = Algorithm::Aapc;
  std::uint32_t k = 50;
  std::uint32_t horizon = 6;     // AAPC T
  std::optional<double> eps;     // EAAPC depth control, exactly one of
  std::optional<std::uint32_t> level_cap;  // eps / level_cap for eaapc
  std::uint64_t reps_select = 5000;
  std::uint64_t reps_eval = 5000;
  std::uint64_t master_seed = 1;
  bool lazy = false;

  void validate() const;
};

struct ReportRow {
  std::string algorithm;
  std::uint32_t k_prefix = 0;
  double spread_mean = 0.0;
  double spread_stderr = 0.0;
  double select_time = 0.0;  // seconds; whole selection, same on each row
  double eval_time = 0.0;
};

// 4-vertex cycle fixture: u -> v -> w -> x -> v, uniform p, seed vertex u=0.
Graph figure1_graph(double p);

// 5-vertex fixture with the (2,3,2) cycle; arcs 1->2, 2->3, 3->2, 1->4,
// 4->5, 5->3, all probability 0.1. Original labels 1..5 map to ids 0..4.
Graph figure2_graph();

// Directed preferential-attachment graph for desk-scale benchmarks: each
// new vertex draws out_per_vertex targets weighted by degree, arcs added in
// both directions with the uniform probability. Deterministic given seed.
Graph preferential_attachment_graph(VertexId n, std::uint32_t out_per_vertex,
                                    double uniform_prob,
                                    std::uint64_t seed);

SeedSelectionResult run_selection(const Graph& g, const ExperimentConfig& cfg,
                                  unsigned threads = 0);

// Selects seeds, then MC-evaluates every seed prefix 1..k under a common
// master seed. One row per prefix.
std::vector<ReportRow> run_experiment(const Graph& g,
                                      const ExperimentConfig& cfg,
                                      unsigned threads = 0);

// Wall-clock columns are omitted unless include_timings is set, so files
// written with the same flags and master seed are byte-identical.
void write_rows_csv(const std::vector<ReportRow>& rows, std::ostream& out,
                    bool include_timings = false);
void write_rows_jsonl(const std::vector<ReportRow>& rows, std::ostream& out,
                      bool include_timings = false);

struct AccuracyRow {
  std::uint64_t vertex_label = 0;
  std::vector<double> aapc_till;  // probtill at t = 0..T_max
  double steady_state = 0.0;
  double exact = 0.0;
};

// Per-vertex comparison of the step-T analytic probabilities, the
// steady-state fixed point, and exhaustive enumeration.
std::vector<AccuracyRow> accuracy_report(const Graph& fixture,
                                         std::span<const VertexId> seeds,
                                         std::uint32_t t_max);

void write_accuracy_csv(const std::vector<AccuracyRow>& rows,
                        std::ostream& out);

}  // namespace imkit
