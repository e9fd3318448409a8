#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "imkit/graph.hpp"
#include "imkit/rng.hpp"

namespace imkit {

struct SpreadEstimate {
  double mean = 0.0;
  std::uint64_t replications = 0;
  double std_error = 0.0;
};

struct ExactInfluence {
  std::vector<double> activation;  // per-vertex exact activation probability
  double sigma = 0.0;
};

// Hard cap for exhaustive live-edge enumeration (2^m samples).
inline constexpr std::size_t kMaxEnumerationArcs = 25;

// One independent-cascade realization; returns the activated vertex count.
// Newly activated vertices are processed in ascending id within a step and
// each gets exactly one Bernoulli trial per inactive out-neighbor.
std::uint64_t simulate_icm(const Graph& g, std::span<const VertexId> seeds,
                           RandomStream& rng);

// Mean over R replications; replication r uses the sub-stream derived from
// (master_seed, r), so the result is identical for any thread count.
SpreadEstimate estimate_influence_mc(const Graph& g,
                                     std::span<const VertexId> seeds,
                                     std::uint64_t replications,
                                     std::uint64_t master_seed,
                                     unsigned threads = 0);

// Exact per-vertex activation probabilities by summing reachability over
// all 2^m live-edge samples. Refuses graphs above kMaxEnumerationArcs.
ExactInfluence exact_influence_enumeration(const Graph& g,
                                           std::span<const VertexId> seeds);

}  // namespace imkit
