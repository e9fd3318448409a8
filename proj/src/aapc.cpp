#include "imkit/aapc.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "imkit/celf.hpp"
#include "imkit/errors.hpp"

namespace imkit {

ProbTable activation_probabilities(const Graph& g,
                                   std::span<const VertexId> seeds,
                                   std::uint32_t horizon) {
  for (VertexId s : seeds) g.check_vertex(s);
  const VertexId n = g.num_vertices();
  ProbTable table;
  table.n = n;
  table.horizon = horizon;
  table.at.assign(static_cast<std::size_t>(horizon + 1) * n, 0.0);
  table.till.assign(static_cast<std::size_t>(horizon + 1) * n, 0.0);
  for (VertexId s : seeds) {
    table.at[s] = 1.0;
    table.till[s] = 1.0;
  }
  for (std::uint32_t t = 1; t <= horizon; ++t) {
    const double* at_prev = table.at.data() + static_cast<std::size_t>(t - 1) * n;
    const double* till_prev =
        table.till.data() + static_cast<std::size_t>(t - 1) * n;
    double* at_cur = table.at.data() + static_cast<std::size_t>(t) * n;
    double* till_cur = table.till.data() + static_cast<std::size_t>(t) * n;
    for (VertexId v = 0; v < n; ++v) {
      double miss = 1.0;
      for (std::uint32_t arc_id : g.in_arc_ids(v)) {
        const Arc& a = g.arc(arc_id);
        miss *= 1.0 - a.prob * at_prev[a.src];
      }
      at_cur[v] = (1.0 - till_prev[v]) * (1.0 - miss);
      till_cur[v] = 1.0 - (1.0 - till_prev[v]) * (1.0 - at_cur[v]);
    }
  }
  return table;
}

double influence_estimate(const ProbTable& table) {
  double sum = 0.0;
  const double* last =
      table.till.data() + static_cast<std::size_t>(table.horizon) * table.n;
  for (VertexId v = 0; v < table.n; ++v) sum += last[v];
  return sum;
}

double influence_at_horizon(const Graph& g, std::span<const VertexId> seeds,
                            std::uint32_t horizon, VertexId extra) {
  for (VertexId s : seeds) g.check_vertex(s);
  const VertexId n = g.num_vertices();
  std::vector<double> at_prev(n, 0.0), at_cur(n, 0.0), till(n, 0.0);
  for (VertexId s : seeds) {
    at_prev[s] = 1.0;
    till[s] = 1.0;
  }
  if (extra != kNoExtraSeed) {
    g.check_vertex(extra);
    at_prev[extra] = 1.0;
    till[extra] = 1.0;
  }
  for (std::uint32_t t = 1; t <= horizon; ++t) {
    for (VertexId v = 0; v < n; ++v) {
      double miss = 1.0;
      for (std::uint32_t arc_id : g.in_arc_ids(v)) {
        const Arc& a = g.arc(arc_id);
        miss *= 1.0 - a.prob * at_prev[a.src];
      }
      double at = (1.0 - till[v]) * (1.0 - miss);
      at_cur[v] = at;
      till[v] = 1.0 - (1.0 - till[v]) * (1.0 - at);
    }
    at_prev.swap(at_cur);
  }
  double sum = 0.0;
  for (VertexId v = 0; v < n; ++v) sum += till[v];
  return sum;
}

SeedSelectionResult aapc_select(const Graph& g, std::uint32_t k,
                                std::uint32_t horizon, bool lazy,
                                unsigned threads) {
  if (horizon < 1) throw ValidationError("horizon T must be >= 1");
  auto start = std::chrono::steady_clock::now();
  SeedSelectionResult result;
  result.algorithm = "aapc";
  auto objective = [&](VertexId w) {
    return influence_at_horizon(g, result.seeds, horizon, w);
  };
  greedy_select_rounds(g.num_vertices(), k, lazy, /*parallel_candidates=*/true,
                       threads, objective, [](VertexId) {}, result.seeds,
                       result.estimates);
  result.wall_time = std::chrono::steady_clock::now() - start;
  return result;
}

SteadyStateResult steady_state_probabilities(const Graph& g,
                                             std::span<const VertexId> seeds,
                                             double tol,
                                             std::uint32_t max_iter) {
  if (!(tol > 0.0)) throw ValidationError("tolerance must be > 0");
  for (VertexId s : seeds) g.check_vertex(s);
  const VertexId n = g.num_vertices();
  std::vector<std::uint8_t> is_seed(n, 0);
  for (VertexId s : seeds) is_seed[s] = 1;

  SteadyStateResult out;
  out.probs.assign(n, 0.0);
  for (VertexId s : seeds) out.probs[s] = 1.0;
  std::vector<double> next(n, 0.0);
  for (std::uint32_t iter = 1; iter <= max_iter; ++iter) {
    double delta = 0.0;
    for (VertexId v = 0; v < n; ++v) {
      if (is_seed[v]) {
        next[v] = 1.0;
        continue;
      }
      double miss = 1.0;
      for (std::uint32_t arc_id : g.in_arc_ids(v)) {
        const Arc& a = g.arc(arc_id);
        miss *= 1.0 - a.prob * out.probs[a.src];
      }
      next[v] = 1.0 - miss;
      delta = std::max(delta, std::abs(next[v] - out.probs[v]));
    }
    out.probs.swap(next);
    out.iterations = iter;
    out.residual = delta;
    if (delta < tol) {
      out.converged = true;
      break;
    }
  }
  return out;
}

}  // namespace imkit
