#pragma once

#include <cstdint>
#include <queue>
#include <vector>

#include "imkit/errors.hpp"
#include "imkit/graph.hpp"
#include "imkit/parallel.hpp"

namespace imkit {

// Greedy hill climbing over a deterministic set objective. objective(w)
// must return f(S ∪ {w}) for the committed seed set S; commit(w) is called
// when w is selected. Ties go to the lowest vertex id.
//
// lazy=true runs the CELF variant: a max-priority queue of stale marginals
// re-evaluates only the top entry until a fresh marginal stays on top. The
// selected sequence matches the exhaustive scan whenever f is submodular,
// which holds for all objectives used here (f is fixed per run).
//
// parallel_candidates spreads the exhaustive scan across workers; results
// land in per-candidate slots, so the argmax is schedule-independent.
template <typename ObjectiveFn, typename CommitFn>
void greedy_select_rounds(VertexId n, std::uint32_t k, bool lazy,
                          bool parallel_candidates, unsigned threads,
                          ObjectiveFn objective, CommitFn commit,
                          std::vector<VertexId>& seeds,
                          std::vector<double>& estimates) {
  if (k < 1) throw ValidationError("seed count k must be >= 1");
  if (k > n) k = n;
  seeds.clear();
  estimates.clear();
  std::vector<std::uint8_t> is_seed(n, 0);
  if (threads == 0) threads = worker_count();

  auto base = [&] { return estimates.empty() ? 0.0 : estimates.back(); };

  struct Entry {
    double marginal;
    VertexId id;
    std::uint32_t stamp;
  };
  struct Order {
    bool operator()(const Entry& a, const Entry& b) const {
      if (a.marginal != b.marginal) return a.marginal < b.marginal;
      return a.id > b.id;
    }
  };

  if (lazy) {
    std::priority_queue<Entry, std::vector<Entry>, Order> queue;
    for (VertexId w = 0; w < n; ++w)
      queue.push({objective(w) - base(), w, 0});
    for (std::uint32_t round = 1; round <= k; ++round) {
      while (true) {
        Entry top = queue.top();
        queue.pop();
        if (top.stamp == round - 1 || round == 1) {
          seeds.push_back(top.id);
          estimates.push_back(base() + top.marginal);
          is_seed[top.id] = 1;
          commit(top.id);
          break;
        }
        top.marginal = objective(top.id) - base();
        top.stamp = round - 1;
        queue.push(top);
      }
      // Selected seeds never re-enter; their entries were consumed above.
    }
    return;
  }

  std::vector<double> values(n);
  for (std::uint32_t round = 1; round <= k; ++round) {
    std::vector<VertexId> candidates;
    candidates.reserve(n - seeds.size());
    for (VertexId w = 0; w < n; ++w)
      if (!is_seed[w]) candidates.push_back(w);
    if (parallel_candidates) {
      parallel_chunks(candidates.size(), threads,
                      [&](unsigned, std::size_t begin, std::size_t end) {
                        for (std::size_t i = begin; i < end; ++i)
                          values[candidates[i]] = objective(candidates[i]);
                      });
    } else {
      for (VertexId w : candidates) values[w] = objective(w);
    }
    VertexId best = candidates.front();
    for (VertexId w : candidates)
      if (values[w] > values[best]) best = w;  // candidates ascend, ties keep lowest id
    seeds.push_back(best);
    estimates.push_back(values[best]);
    is_seed[best] = 1;
    commit(best);
  }
}

}  // namespace imkit
