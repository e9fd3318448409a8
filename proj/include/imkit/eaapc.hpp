#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "imkit/graph.hpp"
#include "imkit/select_result.hpp"

namespace imkit {

// Smallest L with p_avg^L <= eps, i.e. ceil(log_{p_avg} eps).
std::uint32_t max_level(double p_avg, double eps);

// Arithmetic mean of arc probabilities (equals p under uniform p).
double average_arc_prob(const Graph& g);

// Reusable per-worker scratch for the level-bounded BFS. Version stamps
// avoid an O(n) clear between candidates.
class BfsScratch {
 public:
  void resize(VertexId n);

  // Probability of each vertex being activated from u through effective
  // paths: shortest-path arcs multiply into the shortest-path complement,
  // every other scanned arc into the head vertex's extra complement.
  // Vertices in blocked (mask, may be empty) are never enqueued and get no
  // updates. Writes 1 - s_comp*q_extra for reached vertices into out;
  // out[u] = 1, everything else 0.
  void single_seed_probs(const Graph& g, VertexId u, std::uint32_t level_cap,
                         std::span<const std::uint8_t> blocked,
                         std::vector<double>& out);

  // Same propagation, but only accumulates the multi-seed greedy objective
  // sum over v of cumulative[v] + (1 - cumulative[v]) * P[v] without
  // materializing the probability vector.
  double single_seed_objective(const Graph& g, VertexId u,
                               std::uint32_t level_cap,
                               std::span<const std::uint8_t> blocked,
                               std::span<const double> cumulative,
                               double cumulative_sum);

 private:
  void run_bfs(const Graph& g, VertexId u, std::uint32_t level_cap,
               std::span<const std::uint8_t> blocked);

  std::vector<std::uint32_t> stamp_;
  std::vector<std::uint8_t> state_;
  std::vector<std::uint32_t> level_;
  std::vector<double> s_comp_;
  std::vector<double> q_extra_;
  std::vector<VertexId> order_;  // BFS queue, reused
  std::uint32_t current_stamp_ = 0;
};

// Convenience wrapper over BfsScratch for one-off calls.
std::vector<double> single_seed_probs(const Graph& g, VertexId u,
                                      std::uint32_t level_cap,
                                      std::span<const VertexId> blocked = {});

// P(S_i) = P(S_{i-1}) + (1 - P(S_{i-1})) * P(u_i), pointwise.
std::vector<double> combine_multi_seed(std::span<const double> prev,
                                       std::span<const double> new_probs);

SeedSelectionResult eaapc_select(const Graph& g, std::uint32_t k,
                                 std::uint32_t level_cap,
                                 unsigned threads = 0);

}  // namespace imkit
