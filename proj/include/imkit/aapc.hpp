#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "imkit/graph.hpp"
#include "imkit/select_result.hpp"

namespace imkit {

// Step-indexed activation probabilities. probat(v,t) is the probability of
// v becoming active exactly at step t; probtill(v,t) until step t.
struct ProbTable {
  VertexId n = 0;
  std::uint32_t horizon = 0;  // T
  std::vector<double> at;     // (T+1) x n, step-major
  std::vector<double> till;

  double probat(VertexId v, std::uint32_t t) const {
    return at[static_cast<std::size_t>(t) * n + v];
  }
  double probtill(VertexId v, std::uint32_t t) const {
    return till[static_cast<std::size_t>(t) * n + v];
  }
};

// Fills the full table step by step from t=0:
//   probat(v,t)  = (1 - probtill(v,t-1)) *
//                  (1 - prod over in-arcs (u,v) of (1 - pp(u,v)*probat(u,t-1)))
//   probtill(v,t) = 1 - prod over tau<=t of (1 - probat(v,tau))
ProbTable activation_probabilities(const Graph& g,
                                   std::span<const VertexId> seeds,
                                   std::uint32_t horizon);

// Sum over vertices of probtill(v, T).
double influence_estimate(const ProbTable& table);

inline constexpr VertexId kNoExtraSeed = static_cast<VertexId>(-1);

// Same value as influence_estimate(activation_probabilities(...)) but with
// O(n) scratch; only step t-1 of probat is needed to fill step t. extra is
// treated as an additional seed (the selector's "temporarily add w").
double influence_at_horizon(const Graph& g, std::span<const VertexId> seeds,
                            std::uint32_t horizon,
                            VertexId extra = kNoExtraSeed);

// Greedy selection maximizing the horizon-T analytic influence. lazy=true
// uses a CELF priority queue over stale marginals; the seed sequence is
// identical to the exhaustive evaluation.
SeedSelectionResult aapc_select(const Graph& g, std::uint32_t k,
                                std::uint32_t horizon = 6, bool lazy = false,
                                unsigned threads = 0);

struct SteadyStateResult {
  std::vector<double> probs;
  std::uint32_t iterations = 0;
  double residual = 0.0;
  bool converged = false;
};

// Jacobi fixed point of pi(v) = 1 - prod over in-arcs (1 - pp(u,v)*pi(u))
// with pi(s) pinned to 1 for seeds. Starts from the seed indicator.
SteadyStateResult steady_state_probabilities(const Graph& g,
                                             std::span<const VertexId> seeds,
                                             double tol = 1e-9,
                                             std::uint32_t max_iter = 10000);

}  // namespace imkit
