#include "imkit/baselines.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

#include "imkit/celf.hpp"
#include "imkit/errors.hpp"
#include "imkit/oracle.hpp"

namespace imkit {

SeedSelectionResult greedy_mc_select(const Graph& g, std::uint32_t k,
                                     std::uint64_t replications,
                                     std::uint64_t master_seed, bool lazy,
                                     unsigned threads) {
  if (replications < 1) throw ValidationError("replication count must be >= 1");
  auto start = std::chrono::steady_clock::now();
  SeedSelectionResult result;
  result.algorithm = "greedy-mc";
  std::vector<VertexId> with_candidate;
  auto objective = [&](VertexId w) {
    with_candidate.assign(result.seeds.begin(), result.seeds.end());
    with_candidate.push_back(w);
    return estimate_influence_mc(g, with_candidate, replications, master_seed,
                                 threads)
        .mean;
  };
  // The MC replications inside one estimate parallelize; candidates are
  // scanned sequentially (the CELF queue is order-dependent anyway).
  greedy_select_rounds(g.num_vertices(), k, lazy, /*parallel_candidates=*/false,
                       threads, objective, [](VertexId) {}, result.seeds,
                       result.estimates);
  result.wall_time = std::chrono::steady_clock::now() - start;
  return result;
}

SeedSelectionResult degree_select(const Graph& g, std::uint32_t k) {
  if (k < 1) throw ValidationError("seed count k must be >= 1");
  auto start = std::chrono::steady_clock::now();
  const VertexId n = g.num_vertices();
  if (k > n) k = n;
  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&g](VertexId a, VertexId b) {
    return g.out_degree(a) > g.out_degree(b);
  });
  SeedSelectionResult result;
  result.algorithm = "degree";
  result.seeds.assign(order.begin(), order.begin() + k);
  result.wall_time = std::chrono::steady_clock::now() - start;
  return result;
}

}  // namespace imkit
