#include <vector>

#include "doctest.h"
#include "mbd/families.hpp"
#include "mbd/graph.hpp"
#include "mbd/hypergame.hpp"
#include "mbd/rng.hpp"

using namespace mbd;

TEST_CASE("neighborhood boards copy closed neighborhoods") {
  const Graph p = make_path(3);
  const Hypergraph h = neighborhood_hypergraph(p);
  CHECK(h.n == 3);
  REQUIRE(h.sets.size() == 3);
  CHECK(h.sets[0] == make_set({0, 1}));
  CHECK(h.sets[1] == make_set({0, 1, 2}));
  CHECK(h.sets[2] == make_set({1, 2}));

  // Open neighborhoods intersected with the subset; empty sets stay so that
  // an uncoverable vertex fails the precondition visibly.
  const Hypergraph sub = subset_neighborhood_hypergraph(p, make_set({0, 2}));
  REQUIRE(sub.sets.size() == 3);
  CHECK(sub.sets[0] == 0);
  CHECK(sub.sets[1] == make_set({0, 2}));
  CHECK(sub.sets[2] == 0);
}

TEST_CASE("potential sums powers of the free counts") {
  Hypergraph h;
  h.n = 4;
  h.sets = {make_set({0, 1}), make_set({2, 3})};
  CHECK(beck_potential(h, 1, 0, 0) == doctest::Approx(0.5));
  // Maker owning one element halves the exponent.
  CHECK(beck_potential(h, 1, vbit(0), 0) == doctest::Approx(0.75));
  // Fully-Maker sets count one each.
  CHECK(beck_potential(h, 1, make_set({0, 1}), 0) == doctest::Approx(1.25));
  // Breaker-touched sets are dead.
  CHECK(beck_potential(h, 1, 0, vbit(2)) == doctest::Approx(0.25));
  CHECK(beck_potential(h, 2, 0, 0) == doctest::Approx(2.0 / 9.0));
}

TEST_CASE("exact floor of the potential dodges rounding") {
  // Three singleton sets at q = 2 sum to exactly one; floating addition of
  // thirds undershoots, the exact floor must not.
  Hypergraph h;
  h.n = 3;
  h.sets = {vbit(0), vbit(1), vbit(2)};
  CHECK(beck_bound(h, 2) == 1);
  CHECK(beck_bound(h, 1) == 1);  // 3/2 floors to 1
  Hypergraph empty_set;
  empty_set.n = 1;
  empty_set.sets = {0};
  CHECK(beck_bound(empty_set, 1) == 1);
  Hypergraph one;
  one.n = 1;
  one.sets = {vbit(0)};
  CHECK(beck_bound(one, 1) == 0);  // 1/2 floors to 0
}

TEST_CASE("two cliques sit under the threshold in the unbiased game") {
  Graph g(8);
  for (int base : {0, 4}) {
    for (int u = 0; u < 4; ++u) {
      for (int v = u + 1; v < 4; ++v) g.add_edge(base + u, base + v);
    }
  }
  const Hypergraph h = neighborhood_hypergraph(g);
  CHECK(beck_potential(h, 1, 0, 0) == doctest::Approx(0.5));
  CHECK(beck_bound(h, 1) == 0);
}

TEST_CASE("greedy breaker claims stay legal and touch live sets") {
  const Graph g = make_cycle(6);
  const Hypergraph h = neighborhood_hypergraph(g);
  const auto picks = beck_breaker_claims(h, 2, vbit(0), 0);
  REQUIRE(picks.size() == 2);
  CHECK(picks[0] != picks[1]);
  for (int v : picks) {
    CHECK(v >= 0);
    CHECK(v < 6);
    CHECK(v != 0);
  }
}

TEST_CASE("exhaustive maker play never beats the potential bound") {
  Rng rng(0x7e57);
  for (int iter = 0; iter < 50; ++iter) {
    const int n = 3 + rng.next_below(5);
    const Hypergraph h =
        random_hypergraph(rng, n, 1 + rng.next_below(5), 1, 3);
    for (int q = 1; q <= 3; ++q) {
      CHECK(exhaustive_max_maker_sets(h, q) <= beck_bound(h, q));
    }
  }
}

TEST_CASE("random boards respect their shape parameters") {
  Rng rng(0x5a3e);
  const Hypergraph h = random_hypergraph(rng, 10, 7, 2, 4);
  CHECK(h.n == 10);
  REQUIRE(h.sets.size() == 7);
  for (VertexSet f : h.sets) {
    CHECK(set_size(f) >= 2);
    CHECK(set_size(f) <= 4);
    CHECK((f & ~make_set({0, 1, 2, 3, 4, 5, 6, 7, 8, 9})) == 0);
  }
}

TEST_CASE("stacked tree paths and the descent rule") {
  const Hypergraph paths = ary_root_leaf_paths(2, 2);
  CHECK(paths.n == 7);
  REQUIRE(paths.sets.size() == 4);
  for (VertexSet p : paths.sets) {
    CHECK(set_size(p) == 3);
    CHECK(vin(p, 0));
  }
  // Maker's first claim is the root, then the lowest untouched child.
  const auto first = ary_maker_claim(2, 2, 0, 0);
  CHECK(first == std::vector<int>{0});
  const auto second = ary_maker_claim(2, 2, vbit(0), vbit(1));
  CHECK(second == std::vector<int>{2});

  CHECK(exhaustive_ary_maker_wins(2, 2, 1));
  CHECK(!exhaustive_ary_maker_wins(2, 2, 2));
}
