#include "imkit/eaapc.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "imkit/errors.hpp"
#include "imkit/parallel.hpp"

namespace imkit {

namespace {
constexpr std::uint8_t kUnprocessed = 0;
constexpr std::uint8_t kInProcess = 1;
constexpr std::uint8_t kProcessed = 2;
}  // namespace

std::uint32_t max_level(double p_avg, double eps) {
  if (!(p_avg > 0.0 && p_avg < 1.0))
    throw ValidationError("p_avg must lie in (0,1)");
  if (!(eps > 0.0 && eps < 1.0))
    throw ValidationError("eps must lie in (0,1)");
  double ratio = std::log(eps) / std::log(p_avg);
  // Snap near-integer ratios before the ceiling so p_avg^L = eps exactly
  // (e.g. 0.1^3 = 1e-3) does not round up one level.
  double nearest = std::round(ratio);
  double level =
      std::abs(ratio - nearest) < 1e-9 ? nearest : std::ceil(ratio);
  return static_cast<std::uint32_t>(std::max(0.0, level));
}

double average_arc_prob(const Graph& g) {
  if (g.num_arcs() == 0) return 0.0;
  double sum = 0.0;
  for (const Arc& a : g.arcs()) sum += a.prob;
  return sum / static_cast<double>(g.num_arcs());
}

void BfsScratch::resize(VertexId n) {
  if (stamp_.size() != n) {
    stamp_.assign(n, 0);
    state_.assign(n, kUnprocessed);
    level_.assign(n, 0);
    s_comp_.assign(n, 1.0);
    q_extra_.assign(n, 1.0);
    current_stamp_ = 0;
  }
}

void BfsScratch::run_bfs(const Graph& g, VertexId u, std::uint32_t level_cap,
                         std::span<const std::uint8_t> blocked) {
  g.check_vertex(u);
  if (!blocked.empty() && blocked[u])
    throw ValidationError("candidate seed is in the blocked set");
  resize(g.num_vertices());
  ++current_stamp_;

  auto touch = [this](VertexId v) {
    if (stamp_[v] != current_stamp_) {
      stamp_[v] = current_stamp_;
      state_[v] = kUnprocessed;
      level_[v] = 0;
      s_comp_[v] = 1.0;
      q_extra_[v] = 1.0;
    }
  };

  order_.clear();
  touch(u);
  state_[u] = kInProcess;
  s_comp_[u] = 0.0;
  order_.push_back(u);
  for (std::size_t head = 0; head < order_.size(); ++head) {
    VertexId v = order_[head];
    double s_v = 1.0 - s_comp_[v];  // shortest-path prob, final at dequeue
    if (level_[v] < level_cap) {
      for (const Arc& a : g.out_arcs(v)) {
        VertexId w = a.dst;
        if (!blocked.empty() && blocked[w]) continue;
        touch(w);
        if (state_[w] == kUnprocessed) {
          state_[w] = kInProcess;
          level_[w] = level_[v] + 1;
          order_.push_back(w);
          s_comp_[w] *= 1.0 - a.prob * s_v;
        } else if (state_[w] == kInProcess && level_[w] == level_[v] + 1) {
          s_comp_[w] *= 1.0 - a.prob * s_v;
        } else {
          // Non-shortest arc: contributes to the head vertex's Q-complement.
          q_extra_[w] *= 1.0 - a.prob * s_v;
        }
      }
    }
    state_[v] = kProcessed;
  }
}

void BfsScratch::single_seed_probs(const Graph& g, VertexId u,
                                   std::uint32_t level_cap,
                                   std::span<const std::uint8_t> blocked,
                                   std::vector<double>& out) {
  run_bfs(g, u, level_cap, blocked);
  out.assign(g.num_vertices(), 0.0);
  for (VertexId v : order_) out[v] = 1.0 - s_comp_[v] * q_extra_[v];
  out[u] = 1.0;
}

double BfsScratch::single_seed_objective(const Graph& g, VertexId u,
                                         std::uint32_t level_cap,
                                         std::span<const std::uint8_t> blocked,
                                         std::span<const double> cumulative,
                                         double cumulative_sum) {
  run_bfs(g, u, level_cap, blocked);
  double sum = cumulative_sum;
  for (VertexId v : order_) {
    double p = v == u ? 1.0 : 1.0 - s_comp_[v] * q_extra_[v];
    sum += (1.0 - cumulative[v]) * p;
  }
  return sum;
}

std::vector<double> single_seed_probs(const Graph& g, VertexId u,
                                      std::uint32_t level_cap,
                                      std::span<const VertexId> blocked) {
  std::vector<std::uint8_t> mask;
  if (!blocked.empty()) {
    mask.assign(g.num_vertices(), 0);
    for (VertexId b : blocked) {
      g.check_vertex(b);
      mask[b] = 1;
    }
  }
  BfsScratch scratch;
  std::vector<double> out;
  scratch.single_seed_probs(g, u, level_cap, mask, out);
  return out;
}

std::vector<double> combine_multi_seed(std::span<const double> prev,
                                       std::span<const double> new_probs) {
  if (prev.size() != new_probs.size())
    throw ValidationError("combine_multi_seed: length mismatch");
  std::vector<double> out(prev.size());
  for (std::size_t v = 0; v < prev.size(); ++v)
    out[v] = prev[v] + (1.0 - prev[v]) * new_probs[v];
  return out;
}

SeedSelectionResult eaapc_select(const Graph& g, std::uint32_t k,
                                 std::uint32_t level_cap, unsigned threads) {
  if (k < 1) throw ValidationError("seed count k must be >= 1");
  auto start = std::chrono::steady_clock::now();
  const VertexId n = g.num_vertices();
  if (k > n) k = n;
  if (threads == 0) threads = worker_count();

  SeedSelectionResult result;
  result.algorithm = "eaapc";
  std::vector<double> cumulative(n, 0.0);
  std::vector<std::uint8_t> is_seed(n, 0);
  double cumulative_sum = 0.0;

  unsigned workers = std::max(1u, std::min<unsigned>(threads, n));
  std::vector<BfsScratch> scratch(workers);
  std::vector<double> values(n);
  std::vector<double> winner_probs;
  BfsScratch winner_scratch;

  for (std::uint32_t round = 1; round <= k; ++round) {
    std::vector<VertexId> candidates;
    candidates.reserve(n - result.seeds.size());
    for (VertexId w = 0; w < n; ++w)
      if (!is_seed[w]) candidates.push_back(w);
    parallel_chunks(candidates.size(), workers,
                    [&](unsigned w, std::size_t begin, std::size_t end) {
                      for (std::size_t i = begin; i < end; ++i)
                        values[candidates[i]] = scratch[w].single_seed_objective(
                            g, candidates[i], level_cap, is_seed, cumulative,
                            cumulative_sum);
                    });
    VertexId best = candidates.front();
    for (VertexId w : candidates)
      if (values[w] > values[best]) best = w;
    result.seeds.push_back(best);
    result.estimates.push_back(values[best]);
    winner_scratch.single_seed_probs(g, best, level_cap, is_seed, winner_probs);
    cumulative = combine_multi_seed(cumulative, winner_probs);
    is_seed[best] = 1;
    cumulative_sum = 0.0;
    for (double c : cumulative) cumulative_sum += c;
  }
  result.wall_time = std::chrono::steady_clock::now() - start;
  return result;
}

}  // namespace imkit
