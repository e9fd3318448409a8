#pragma once

#include <cstdint>

#include "imkit/graph.hpp"
#include "imkit/select_result.hpp"

namespace imkit {

// Greedy hill climbing with Monte-Carlo spread estimates. Every estimate in
// a run reuses the same replication sub-streams (common random numbers), so
// the estimated set function is fixed, submodular, and the CELF path
// (lazy=true) selects the same sequence as the exhaustive scan.
SeedSelectionResult greedy_mc_select(const Graph& g, std::uint32_t k,
                                     std::uint64_t replications,
                                     std::uint64_t master_seed,
                                     bool lazy = true, unsigned threads = 0);

// Top-k vertices by out-degree, ties to the lowest id. No estimates.
SeedSelectionResult degree_select(const Graph& g, std::uint32_t k);

}  // namespace imkit
