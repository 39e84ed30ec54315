#include <vector>

#include "doctest.h"
#include "mbd/families.hpp"
#include "mbd/goodness.hpp"
#include "mbd/graph.hpp"
#include "mbd/solver.hpp"

using namespace mbd;

namespace {

Graph double_star() {
  // Two adjacent centers, two leaves each; irreducible, no perfect matching.
  Graph g(6);
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  g.add_edge(0, 3);
  g.add_edge(3, 4);
  g.add_edge(3, 5);
  return g;
}

}  // namespace

TEST_CASE("reduction traces delete a vertex with its outside leaves") {
  const Graph p = make_path(5);
  AdmissibleSequence seq;
  seq.vertices = {1};
  const ReductionTrace tr = forest_after(p, seq);
  CHECK(tr.initial == p.full_mask());
  REQUIRE(tr.steps.size() == 1);
  CHECK(tr.steps[0].vertex == 1);
  CHECK(tr.steps[0].deleted_leaves == vbit(0));
  CHECK(tr.steps[0].forest_after == make_set({2, 3, 4}));
  CHECK(tr.final_mask() == make_set({2, 3, 4}));

  // The exclusion shields leaves from deletion.
  AdmissibleSequence shielded;
  shielded.vertices = {1};
  shielded.exclusion = vbit(0);
  const ReductionTrace tr2 = forest_after(p, shielded);
  CHECK(tr2.steps[0].deleted_leaves == 0);
  CHECK(tr2.final_mask() == make_set({0, 2, 3, 4}));

  AdmissibleSequence repeat;
  repeat.vertices = {1, 1};
  CHECK_THROWS_AS(forest_after(p, repeat), std::invalid_argument);

  // Start masks restrict the initial forest; a step deletes every deletable
  // leaf, so the middle of a three-path takes both ends with it.
  AdmissibleSequence sub;
  sub.vertices = {3};
  const ReductionTrace tr3 = forest_after(p, make_set({2, 3, 4}), sub);
  CHECK(tr3.steps[0].deleted_leaves == make_set({2, 4}));
  CHECK(tr3.final_mask() == 0);
}

TEST_CASE("admissibility needs exactly b deletable leaves per step") {
  const Graph p = make_path(5);
  AdmissibleSequence one;
  one.vertices = {1};
  CHECK(is_admissible(p, one, 1));
  AdmissibleSequence middle;
  middle.vertices = {2};
  CHECK(!is_admissible(p, middle, 1));
  AdmissibleSequence two;
  two.vertices = {1, 3};
  CHECK(!is_admissible(p, two, 1));  // second step sees two leaves
  AdmissibleSequence empty;
  CHECK(is_admissible(p, empty, 1));
  // Center of a 2-star has two leaf neighbors: admissible only for b = 2.
  const Graph s2 = make_star(2);
  AdmissibleSequence center;
  center.vertices = {0};
  CHECK(!is_admissible(s2, center, 1));
  CHECK(is_admissible(s2, center, 2));
}

TEST_CASE("witness search finds the known path witness") {
  const auto w = find_problematic(make_path(5), 0, 1);
  REQUIRE(w.has_value());
  CHECK(w->seq.vertices == std::vector<int>{1});
  CHECK(w->exposed == 3);
  CHECK(w->to_string() == "1 | 3");

  const auto s = find_problematic(make_star(2), 0, 1);
  REQUIRE(s.has_value());
  CHECK(s->seq.vertices.empty());
  CHECK(s->exposed == 0);
  CHECK(s->to_string() == "∅ | 0");

  CHECK(!find_problematic(make_path(4), 0, 1).has_value());
  CHECK_THROWS_AS(find_problematic(make_cycle(5), 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(find_problematic(make_path(5), 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(find_problematic(make_path(17), 0, 1), CapExceededError);
}

TEST_CASE("exclusion sets can rescue a bad tree") {
  const Graph p = make_path(5);
  CHECK(find_problematic(p, vbit(2), 1) == std::nullopt);
  CHECK(find_problematic(p, vbit(0), 1) == std::nullopt);
  CHECK(find_problematic(p, vbit(4), 1) == std::nullopt);
  // No single reserved vertex fixes the double star: both centers expose
  // two leaves right away.
  const Graph d = double_star();
  for (int v = 0; v < 6; ++v) {
    CHECK(find_problematic(d, vbit(v), 1).has_value());
  }
}

TEST_CASE("goodness matches the staller-first game on small trees") {
  for (int n = 2; n <= 8; ++n) {
    for (const Forest& t : enumerate_trees(n)) {
      for (int b = 1; b <= 2; ++b) {
        const bool good = is_b_good(t.graph(), b);
        const GameValue v =
            solve_rounds(GameConfig{t.graph(), b, Player::Staller}).value;
        CHECK(good == v.is_finite());
      }
    }
  }
}

TEST_CASE("a single vertex is good yet unwinnable") {
  // The goodness criterion characterizes winnability only from two vertices
  // up: the one-vertex tree has no witness but the first claim ends it.
  const Graph k1(1);
  CHECK(is_b_good(k1, 1));
  CHECK(solve_rounds(GameConfig{k1, 1, Player::Staller}).value ==
        GameValue::infinity());
}

TEST_CASE("greedy reduction deletes exact-fit stars only") {
  CHECK(greedy_reduction_mask(make_star(2), 2) == 0);
  CHECK(greedy_reduction_mask(make_star(2), 1) == make_star(2).full_mask());
  CHECK(greedy_reduction_mask(make_path(5), 1) == make_set({2, 3, 4}));
  CHECK(greedy_reduction_mask(make_path(4), 1) == 0);
  const Forest reduced = greedy_reduction(Forest{make_path(5)}, 1);
  CHECK(reduced.vertex_count() == 3);
  CHECK(reduced.graph() == make_path(3));
}

TEST_CASE("opening search returns the smallest winning reservation") {
  const auto none = dominator_first_set(make_path(4), 1);
  REQUIRE(none.has_value());
  CHECK(*none == 0);

  const auto p5 = dominator_first_set(make_path(5), 1);
  REQUIRE(p5.has_value());
  CHECK(*p5 == vbit(0));

  CHECK(dominator_first_set(double_star(), 1) == std::nullopt);
  // With two reservations the double star falls: reserve a leaf per center.
  const auto two = dominator_first_set(double_star(), 2);
  REQUIRE(two.has_value());
  CHECK(set_size(*two) <= 2);
}
