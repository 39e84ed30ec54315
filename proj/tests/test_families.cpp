#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"
#include "mbd/families.hpp"
#include "mbd/formulas.hpp"
#include "mbd/graph.hpp"

using namespace mbd;

TEST_CASE("paths cycles and stars have the expected shape") {
  const Graph p = make_path(5);
  CHECK(p.vertex_count() == 5);
  CHECK(p.edge_count() == 4);
  CHECK(p.has_edge(2, 3));
  CHECK(!p.has_edge(0, 4));

  const Graph c = make_cycle(5);
  CHECK(c.edge_count() == 5);
  CHECK(c.has_edge(0, 4));
  CHECK_THROWS_AS(make_cycle(2), std::invalid_argument);

  const Graph s = make_star(4);
  CHECK(s.vertex_count() == 5);
  CHECK(s.degree(0) == 4);
  CHECK(s.degree(3) == 1);
}

TEST_CASE("power families equal power of the base graph") {
  CHECK(make_path_power(7, 2) == power(make_path(7), 2));
  CHECK(make_cycle_power(9, 3) == power(make_cycle(9), 3));
  CHECK(make_path_power(6, 1) == make_path(6));
}

TEST_CASE("star chain layout partitions the vertices") {
  for (int b = 2; b <= 5; ++b) {
    for (int k = 2; k <= 14; ++k) {
      const StarChainLayout lay = star_chain_layout(k, b);
      CHECK(lay.x == ceil_div(b, 2));
      CHECK(lay.q == ceil_div(k, lay.x + 1));
      CHECK(lay.r == k - (lay.q - 1) * (lay.x + 1));
      CHECK(lay.merged_last == (lay.r == 1 && lay.q >= 2));
      int covered = 0;
      std::set<int> seen;
      REQUIRE(lay.centers.size() == lay.star_leaves.size());
      for (size_t i = 0; i < lay.centers.size(); ++i) {
        seen.insert(lay.centers[i]);
        ++covered;
        for (int leaf : lay.star_leaves[i]) {
          seen.insert(leaf);
          ++covered;
        }
      }
      CHECK(covered == k);
      CHECK(static_cast<int>(seen.size()) == k);

      const Graph g = make_tkb(k, b);
      CHECK(g.vertex_count() == k);
      CHECK(is_tree_graph(g));
      for (size_t i = 0; i + 1 < lay.centers.size(); ++i) {
        CHECK(g.has_edge(lay.centers[i], lay.centers[i + 1]));
      }
      for (size_t i = 0; i < lay.centers.size(); ++i) {
        for (int leaf : lay.star_leaves[i]) {
          CHECK(g.has_edge(lay.centers[i], leaf));
          CHECK(g.degree(leaf) == 1);
        }
      }
    }
  }
}

TEST_CASE("merged star chain keeps one fewer effective star") {
  // k = 5, b = 2: x 1, q 3, r 1, so the last center folds into star two.
  const StarChainLayout lay = star_chain_layout(5, 2);
  CHECK(lay.merged_last);
  CHECK(lay.centers.size() == 2);
  CHECK(lay.star_leaves.back().size() == 2);
}

TEST_CASE("forcing chain grafts onto a star chain") {
  const ForcingChainLayout lay = forcing_chain_layout(10, 2, 2);
  CHECK(lay.k == 4);
  CHECK(lay.chain_centers.size() == 2);
  CHECK(lay.residual_offset == 6);
  const Graph g = make_ts(10, 2, 2);
  CHECK(g.vertex_count() == 10);
  CHECK(is_tree_graph(g));
  for (size_t i = 0; i < lay.chain_centers.size(); ++i) {
    const int c = lay.chain_centers[i];
    REQUIRE(lay.chain_leaves[i].size() == 2);
    for (int leaf : lay.chain_leaves[i]) {
      CHECK(g.has_edge(c, leaf));
      CHECK(g.degree(leaf) == 1);
    }
    if (i + 1 < lay.chain_centers.size()) {
      CHECK(g.has_edge(c, lay.chain_centers[i + 1]));
    }
  }
  CHECK(g.has_edge(lay.chain_centers.back(), lay.residual_offset));
  CHECK_THROWS_AS(make_ts(6, 2, 2), std::invalid_argument);
  // One residual vertex is constructible; the chain suites start from two.
  CHECK(make_ts(7, 2, 2).vertex_count() == 7);
}

TEST_CASE("star path absorbs the remainder into the last star") {
  const Graph g = make_star_path(11, 2, 3);
  CHECK(g.vertex_count() == 11);
  CHECK(is_tree_graph(g));
  // Centers at 0, 3, 6 with 2, 2, 4 leaves.
  CHECK(g.degree(0) == 3);
  CHECK(g.degree(3) == 4);
  CHECK(g.degree(6) == 5);
}

TEST_CASE("fraction family spreads vertices over b+1 stars") {
  const Graph g = make_fraction_sharp(8, 1);
  CHECK(g.vertex_count() == 8);
  CHECK(is_tree_graph(g));
  int centers = 0;
  for (int v = 0; v < 8; ++v) {
    if (g.degree(v) > 1) ++centers;
  }
  CHECK(centers == 2);
}

TEST_CASE("perfect trees and stacked copies have the closed-form sizes") {
  // levels counts vertex ranks: three ranks of a binary tree hold 7 vertices.
  const Graph t = make_perfect_ary_tree(2, 3);
  CHECK(t.vertex_count() == 7);
  CHECK(is_tree_graph(t));
  CHECK(t.has_edge(0, 1));
  CHECK(t.has_edge(0, 2));
  CHECK(t.has_edge(1, 3));
  CHECK(t.has_edge(2, 6));
  CHECK(make_perfect_ary_tree(2, 4).vertex_count() == 15);

  CHECK(ary_stack_vertex_count(1, 2) == 14);
  const Graph st = make_ary_stack(1, 2);
  CHECK(st.vertex_count() == 14);
  // Per copy 7 vertices; ancestor edges make the root adjacent to all six
  // proper descendants.
  CHECK(st.degree(0) == 6);
  CHECK(st.has_edge(0, 3));
  CHECK(!st.has_edge(0, 7));
  CHECK(st.degree(7) == 6);
  CHECK(st.min_degree() == 2);
}

TEST_CASE("spec dispatch matches the direct constructors") {
  FamilySpec spec;
  spec.kind = FamilySpec::Kind::PathPower;
  spec.n = 9;
  spec.k = 2;
  CHECK(construct(spec) == make_path_power(9, 2));

  spec = {};
  spec.kind = FamilySpec::Kind::Tkb;
  spec.k = 7;
  spec.b = 2;
  CHECK(construct(spec) == make_tkb(7, 2));

  spec = {};
  spec.kind = FamilySpec::Kind::Star;
  spec.k = 3;
  CHECK(construct(spec) == make_star(3));

  spec = {};
  spec.kind = FamilySpec::Kind::AryStack;
  spec.b = 1;
  spec.k = 2;
  CHECK(construct(spec) == make_ary_stack(1, 2));
}

TEST_CASE("family names parse back to their kinds") {
  const auto names = family_names();
  CHECK(std::find(names.begin(), names.end(), "tkb") != names.end());
  CHECK(parse_family_name("path") == FamilySpec::Kind::Path);
  CHECK(parse_family_name("cycle-power") == FamilySpec::Kind::CyclePower);
  CHECK(parse_family_name("ary-stack") == FamilySpec::Kind::AryStack);
  CHECK_THROWS_AS(parse_family_name("pathx"), std::invalid_argument);
}
