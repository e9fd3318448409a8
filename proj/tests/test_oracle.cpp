#include <cmath>

#include "doctest.h"
#include "imkit/errors.hpp"
#include "imkit/harness.hpp"
#include "imkit/oracle.hpp"
#include "test_support.hpp"

using namespace imkit;

TEST_CASE("simulate_icm basics") {
  RandomStream rng(1);
  SUBCASE("no seeds, no activations") {
    Graph g = Graph::from_arcs(3, {{0, 1, 1.0}});
    CHECK(simulate_icm(g, {}, rng) == 0);
  }
  SUBCASE("zero probabilities keep only the seeds active") {
    Graph g = Graph::from_arcs(4, {{0, 1, 0.0}, {1, 2, 0.0}});
    std::vector<VertexId> seeds{0, 2};
    CHECK(simulate_icm(g, seeds, rng) == 2);
  }
  SUBCASE("certain chain activates everything reachable") {
    Graph g = Graph::from_arcs(3, {{0, 1, 1.0}, {1, 2, 1.0}});
    std::vector<VertexId> seeds{0};
    CHECK(simulate_icm(g, seeds, rng) == 3);
  }
  SUBCASE("seed out of range") {
    Graph g = Graph::from_arcs(2, {{0, 1, 1.0}});
    std::vector<VertexId> seeds{5};
    CHECK_THROWS_AS(simulate_icm(g, seeds, rng), ValidationError);
  }
}

TEST_CASE("estimate_influence_mc") {
  SUBCASE("R = 0 rejected") {
    Graph g = Graph::from_arcs(2, {{0, 1, 0.5}});
    std::vector<VertexId> seeds{0};
    CHECK_THROWS_AS(estimate_influence_mc(g, seeds, 0, 1), ValidationError);
  }
  SUBCASE("single arc converges to 1 + p") {
    Graph g = Graph::from_arcs(2, {{0, 1, 0.5}});
    std::vector<VertexId> seeds{0};
    SpreadEstimate est = estimate_influence_mc(g, seeds, 100000, 42);
    CHECK(std::abs(est.mean - 1.5) <= 3 * est.std_error);
  }
  SUBCASE("all vertices seeded: exact n with zero variance") {
    Graph g = Graph::from_arcs(3, {{0, 1, 0.5}, {1, 2, 0.5}});
    std::vector<VertexId> seeds{0, 1, 2};
    SpreadEstimate est = estimate_influence_mc(g, seeds, 500, 42);
    CHECK(est.mean == 3.0);
    CHECK(est.std_error == 0.0);
  }
  SUBCASE("figure 2 fixture matches the exact sigma") {
    Graph g = figure2_graph();
    std::vector<VertexId> seeds{*g.compact_id(1)};
    SpreadEstimate est = estimate_influence_mc(g, seeds, 200000, 9);
    CHECK(std::abs(est.mean - 1.22208) <= 3 * est.std_error);
  }
  SUBCASE("identical means for any thread count") {
    Graph g = figure2_graph();
    std::vector<VertexId> seeds{*g.compact_id(1)};
    SpreadEstimate a = estimate_influence_mc(g, seeds, 5000, 3, 1);
    SpreadEstimate b = estimate_influence_mc(g, seeds, 5000, 3, 4);
    SpreadEstimate c = estimate_influence_mc(g, seeds, 5000, 3, 7);
    CHECK(a.mean == b.mean);
    CHECK(a.mean == c.mean);
    CHECK(a.std_error == b.std_error);
  }
}

TEST_CASE("exact enumeration") {
  SUBCASE("figure 1 powers of p") {
    for (double p : {0.1, 0.3, 0.5}) {
      Graph g = figure1_graph(p);
      std::vector<VertexId> seeds{0};
      ExactInfluence exact = exact_influence_enumeration(g, seeds);
      CHECK(exact.activation[1] == doctest::Approx(p).epsilon(1e-12));
      CHECK(exact.activation[2] == doctest::Approx(p * p).epsilon(1e-12));
      CHECK(exact.activation[3] == doctest::Approx(p * p * p).epsilon(1e-12));
    }
  }
  SUBCASE("certain arcs activate the whole cycle") {
    Graph g = figure1_graph(1.0);
    std::vector<VertexId> seeds{0};
    ExactInfluence exact = exact_influence_enumeration(g, seeds);
    CHECK(exact.sigma == doctest::Approx(4.0).epsilon(1e-12));
  }
  SUBCASE("figure 2 exact column") {
    Graph g = figure2_graph();
    std::vector<VertexId> seeds{*g.compact_id(1)};
    ExactInfluence exact = exact_influence_enumeration(g, seeds);
    CHECK(exact.activation[*g.compact_id(2)] ==
          doctest::Approx(0.10009).epsilon(1e-9));
    CHECK(exact.activation[*g.compact_id(3)] ==
          doctest::Approx(0.01099).epsilon(1e-9));
    CHECK(exact.activation[*g.compact_id(4)] ==
          doctest::Approx(0.1).epsilon(1e-9));
    CHECK(exact.activation[*g.compact_id(5)] ==
          doctest::Approx(0.01).epsilon(1e-9));
  }
  SUBCASE("no seeds means zero everywhere") {
    Graph g = figure2_graph();
    ExactInfluence exact = exact_influence_enumeration(g, {});
    CHECK(exact.sigma == 0.0);
    for (double v : exact.activation) CHECK(v == 0.0);
  }
  SUBCASE("capacity guard") {
    std::vector<Arc> arcs;
    for (VertexId v = 0; v < 26; ++v) arcs.push_back({v, v + 1, 0.5});
    Graph g = Graph::from_arcs(27, std::move(arcs));
    std::vector<VertexId> seeds{0};
    CHECK_THROWS_AS(exact_influence_enumeration(g, seeds), CapacityError);
  }
}

TEST_CASE("exact sigma is monotone under seed growth") {
  RandomStream rng(77);
  for (int it = 0; it < 25; ++it) {
    Graph g = imtest::random_graph(rng, 6, 10);
    auto seeds = imtest::random_seed_set(rng, g.num_vertices());
    double small = exact_influence_enumeration(g, seeds).sigma;
    VertexId extra = static_cast<VertexId>(rng.next_u64() % g.num_vertices());
    std::vector<VertexId> bigger(seeds);
    bigger.push_back(extra);
    std::sort(bigger.begin(), bigger.end());
    bigger.erase(std::unique(bigger.begin(), bigger.end()), bigger.end());
    double large = exact_influence_enumeration(g, bigger).sigma;
    CHECK(large >= small - 1e-12);
  }
}

TEST_CASE("MC agrees with enumeration on random small graphs") {
  RandomStream rng(123);
  for (int it = 0; it < 10; ++it) {
    Graph g = imtest::random_graph(rng, 6, 10);
    auto seeds = imtest::random_seed_set(rng, g.num_vertices());
    double sigma = exact_influence_enumeration(g, seeds).sigma;
    SpreadEstimate est = estimate_influence_mc(g, seeds, 100000, 1000 + it);
    CHECK(std::abs(est.mean - sigma) <=
          std::max(4 * est.std_error, 1e-9));
  }
}
