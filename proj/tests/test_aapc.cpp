#include <cmath>

#include "doctest.h"
#include "imkit/aapc.hpp"
#include "imkit/errors.hpp"
#include "imkit/harness.hpp"
#include "imkit/oracle.hpp"
#include "test_support.hpp"

using namespace imkit;

namespace {

std::vector<VertexId> figure2_seed(const Graph& g) {
  return {*g.compact_id(1)};
}

}  // namespace

TEST_CASE("figure 2 probability table matches the published cells") {
  Graph g = figure2_graph();
  ProbTable table = activation_probabilities(g, figure2_seed(g), 6);
  const VertexId v2 = *g.compact_id(2);
  const VertexId v3 = *g.compact_id(3);

  const double v2_expected[7] = {0.0,      0.1,      0.1,      0.10081,
                                 0.100890, 0.100897, 0.100898};
  for (std::uint32_t t = 0; t <= 6; ++t)
    CHECK(std::abs(table.probtill(v2, t) - v2_expected[t]) < 1e-6);

  const double v3_expected[5] = {0.01, 0.01098, 0.011068, 0.011077, 0.011078};
  for (std::uint32_t t = 2; t <= 6; ++t)
    CHECK(std::abs(table.probtill(v3, t) - v3_expected[t - 2]) < 1e-6);

  // Vertices 4 and 5 settle immediately.
  CHECK(std::abs(table.probtill(*g.compact_id(4), 6) - 0.1) < 1e-12);
  CHECK(std::abs(table.probtill(*g.compact_id(5), 6) - 0.01) < 1e-12);
}

TEST_CASE("figure 1 closed form for the cycle vertex") {
  for (double p : {0.1, 0.3, 0.5, 0.9}) {
    Graph g = figure1_graph(p);
    std::vector<VertexId> seeds{0};
    ProbTable table = activation_probabilities(g, seeds, 4);
    double expected = p + std::pow(p, 4) * (1 - p) * (1 - p);
    CHECK(std::abs(table.probtill(1, 4) - expected) < 1e-12);
  }
}

TEST_CASE("horizon 0 leaves the seed indicator") {
  Graph g = figure2_graph();
  ProbTable table = activation_probabilities(g, figure2_seed(g), 0);
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    double expected = v == *g.compact_id(1) ? 1.0 : 0.0;
    CHECK(table.probtill(v, 0) == expected);
    CHECK(table.probat(v, 0) == expected);
  }
}

TEST_CASE("influence estimate") {
  SUBCASE("figure 2 row sum") {
    Graph g = figure2_graph();
    ProbTable table = activation_probabilities(g, figure2_seed(g), 6);
    CHECK(std::abs(influence_estimate(table) - 1.221976) < 1e-5);
  }
  SUBCASE("empty seed set") {
    Graph g = figure2_graph();
    ProbTable table = activation_probabilities(g, {}, 6);
    CHECK(influence_estimate(table) == 0.0);
  }
  SUBCASE("matches enumeration exactly on out-trees") {
    RandomStream rng(17);
    for (int it = 0; it < 20; ++it) {
      Graph g = imtest::random_out_tree(rng, 10);
      std::vector<VertexId> seeds{0};
      ProbTable table =
          activation_probabilities(g, seeds, g.num_vertices());
      double sigma = exact_influence_enumeration(g, seeds).sigma;
      CHECK(std::abs(influence_estimate(table) - sigma) < 1e-12);
    }
  }
  SUBCASE("rolling evaluation equals the full table") {
    RandomStream rng(18);
    for (int it = 0; it < 20; ++it) {
      Graph g = imtest::random_graph(rng, 10, 25);
      auto seeds = imtest::random_seed_set(rng, g.num_vertices());
      ProbTable table = activation_probabilities(g, seeds, 6);
      CHECK(influence_at_horizon(g, seeds, 6) ==
            doctest::Approx(influence_estimate(table)).epsilon(1e-14));
    }
  }
}

TEST_CASE("recurrence invariants on fuzzed graphs") {
  RandomStream rng(29);
  for (int it = 0; it < 40; ++it) {
    Graph g = imtest::random_graph(rng, 12, 30);
    auto seeds = imtest::random_seed_set(rng, g.num_vertices());
    ProbTable table = activation_probabilities(g, seeds, 8);
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      double complement = 1.0;
      for (std::uint32_t t = 0; t <= 8; ++t) {
        double till = table.probtill(v, t);
        CHECK(till >= 0.0);
        CHECK(till <= 1.0);
        if (t > 0) CHECK(till >= table.probtill(v, t - 1));
        complement *= 1.0 - table.probat(v, t);
        CHECK(std::abs((1.0 - till) - complement) < 1e-12);
      }
    }
  }
}

TEST_CASE("adding a seed never lowers the estimate") {
  RandomStream rng(31);
  for (int it = 0; it < 30; ++it) {
    Graph g = imtest::random_graph(rng, 12, 30);
    auto seeds = imtest::random_seed_set(rng, g.num_vertices());
    double base = influence_at_horizon(g, seeds, 5);
    VertexId extra = static_cast<VertexId>(rng.next_u64() % g.num_vertices());
    double grown = influence_at_horizon(g, seeds, 5, extra);
    CHECK(grown >= base - 1e-12);
  }
}

TEST_CASE("aapc_select") {
  SUBCASE("star center wins with the one-step marginal") {
    std::vector<Arc> arcs;
    for (VertexId leaf = 1; leaf <= 5; ++leaf) arcs.push_back({0, leaf, 0.5});
    Graph g = Graph::from_arcs(6, std::move(arcs));
    SeedSelectionResult sel = aapc_select(g, 1, 4);
    CHECK(sel.seeds == std::vector<VertexId>{0});
    CHECK(std::abs(sel.estimates[0] - 3.5) < 1e-12);
  }
  SUBCASE("figure 2 argmax is vertex 1, verified exhaustively") {
    Graph g = figure2_graph();
    double best = -1.0;
    VertexId best_v = 0;
    for (VertexId w = 0; w < g.num_vertices(); ++w) {
      std::vector<VertexId> s{w};
      double est = influence_estimate(activation_probabilities(g, s, 6));
      if (est > best) {
        best = est;
        best_v = w;
      }
    }
    CHECK(g.original_id(best_v) == 1);
    SeedSelectionResult sel = aapc_select(g, 1, 6);
    CHECK(sel.seeds == std::vector<VertexId>{best_v});
  }
  SUBCASE("k = n selects everyone and reaches n") {
    Graph g = figure2_graph();
    SeedSelectionResult sel = aapc_select(g, 99, 6);
    CHECK(sel.seeds.size() == 5);
    CHECK(std::abs(sel.estimates.back() - 5.0) < 1e-12);
  }
  SUBCASE("k < 1 rejected") {
    Graph g = figure2_graph();
    CHECK_THROWS_AS(aapc_select(g, 0, 6), ValidationError);
  }
  SUBCASE("lazy and eager produce identical sequences") {
    RandomStream rng(37);
    for (int it = 0; it < 20; ++it) {
      Graph g = imtest::random_graph(rng, 15, 40);
      std::uint32_t k = 1 + rng.next_u64() % 4;
      SeedSelectionResult eager = aapc_select(g, k, 5, false);
      SeedSelectionResult lazy = aapc_select(g, k, 5, true);
      CHECK(eager.seeds == lazy.seeds);
    }
  }
}

TEST_CASE("steady state solver") {
  SUBCASE("figure 2 column") {
    Graph g = figure2_graph();
    SteadyStateResult out = steady_state_probabilities(g, figure2_seed(g));
    CHECK(out.converged);
    CHECK(std::abs(out.probs[*g.compact_id(2)] - 0.100998) < 1e-6);
    CHECK(std::abs(out.probs[*g.compact_id(3)] - 0.011090) < 1e-6);
    CHECK(std::abs(out.probs[*g.compact_id(4)] - 0.1) < 1e-9);
    CHECK(std::abs(out.probs[*g.compact_id(5)] - 0.01) < 1e-9);
  }
  SUBCASE("chain equals path products") {
    Graph g = Graph::from_arcs(4, {{0, 1, 0.3}, {1, 2, 0.4}, {2, 3, 0.5}});
    std::vector<VertexId> seeds{0};
    SteadyStateResult out = steady_state_probabilities(g, seeds);
    CHECK(std::abs(out.probs[1] - 0.3) < 1e-9);
    CHECK(std::abs(out.probs[2] - 0.12) < 1e-9);
    CHECK(std::abs(out.probs[3] - 0.06) < 1e-9);
  }
  SUBCASE("all-zero probabilities settle in one iteration") {
    Graph g = Graph::from_arcs(3, {{0, 1, 0.0}, {1, 2, 0.0}});
    std::vector<VertexId> seeds{1};
    SteadyStateResult out = steady_state_probabilities(g, seeds);
    CHECK(out.iterations == 1);
    CHECK(out.probs == std::vector<double>{0.0, 1.0, 0.0});
  }
  SUBCASE("tolerance must be positive") {
    Graph g = figure2_graph();
    CHECK_THROWS_AS(steady_state_probabilities(g, figure2_seed(g), 0.0),
                    ValidationError);
  }
}

TEST_CASE("resonance overshoot is smaller than the steady-state overshoot") {
  const double p = 0.1;
  Graph g = figure1_graph(p);
  std::vector<VertexId> seeds{0};
  ProbTable table = activation_probabilities(g, seeds, 4);
  double aapc_overshoot = table.probtill(1, 4) - p;
  CHECK(std::abs(aapc_overshoot - std::pow(p, 4) * (1 - p) * (1 - p)) < 1e-15);
  double steady_overshoot =
      steady_state_probabilities(g, seeds).probs[1] - p;
  CHECK(steady_overshoot >= aapc_overshoot);
}
