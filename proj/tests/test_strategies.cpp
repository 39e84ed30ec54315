#include <memory>
#include <vector>

#include "doctest.h"
#include "mbd/families.hpp"
#include "mbd/formulas.hpp"
#include "mbd/game.hpp"
#include "mbd/goodness.hpp"
#include "mbd/graph.hpp"
#include "mbd/solver.hpp"
#include "mbd/strategies.hpp"

using namespace mbd;

namespace {

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

Move first_choice(const Strategy& s, const GameConfig& cfg) {
  return s.choose(cfg, initial_state(cfg), {});
}

}  // namespace

TEST_CASE("filler strategies claim the lowest free vertices") {
  const auto dom = lowest_free_dominator();
  const auto sta = lowest_free_staller();
  CHECK(dom->side() == Player::Dominator);
  CHECK(sta->side() == Player::Staller);
  const GameConfig cfg{make_path(5), 2, Player::Dominator};
  CHECK(first_choice(*dom, cfg) == Move{Player::Dominator, {0, 1}});
  GameState s = initial_state(cfg);
  s = apply_move(cfg, s, Move{Player::Dominator, {0, 1}});
  CHECK(sta->choose(cfg, s, {}) == Move{Player::Staller, {2}});
  VariantRules forbidden;
  forbidden.dominator_forbidden = vbit(0);
  CHECK(!dom->applies_to(cfg, forbidden));
  CHECK(sta->applies_to(cfg, forbidden));
}

TEST_CASE("interval play opens at the first coverage center") {
  const GameConfig p7{make_path(7), 1, Player::Dominator};
  const auto strat = interval_dominator(7, 1, 1, BoardKind::Path);
  REQUIRE(strat->applies_to(p7, {}));
  CHECK(first_choice(*strat, p7) == Move{Player::Dominator, {1}});
  const Guarantee g = strat->declared_guarantee(p7, {});
  CHECK(g.kind == Guarantee::Kind::WinWithin);
  CHECK(g.value == 3);
  CHECK(verify_strategy(p7, *strat, g).ok);

  CHECK(!strat->applies_to(GameConfig{make_path(6), 1, Player::Dominator}, {}));
  CHECK(!strat->applies_to(GameConfig{make_path(7), 2, Player::Dominator}, {}));
  CHECK(!strat->applies_to(GameConfig{make_path(7), 1, Player::Staller}, {}));

  const GameConfig c9{make_cycle(9), 2, Player::Dominator};
  const auto cyc = interval_dominator(9, 1, 2, BoardKind::Cycle);
  REQUIRE(cyc->applies_to(c9, {}));
  CHECK(first_choice(*cyc, c9) == Move{Player::Dominator, {1, 4}});
  CHECK(verify_strategy(c9, *cyc, cyc->declared_guarantee(c9, {})).ok);

  CHECK_THROWS_AS(interval_dominator(1, 1, 1, BoardKind::Path),
                  std::invalid_argument);
}

TEST_CASE("path adversary walks the longest stretch") {
  PathFamilies fam;
  fam.entries = {{5, 0, 5}};
  fam.k = 1;
  fam.b = 1;
  const GameConfig cfg{fam.board(), 1, Player::Staller};
  const auto strat = path_adversary_staller(fam);
  REQUIRE(strat->applies_to(cfg, fam.rules()));
  CHECK(first_choice(*strat, cfg) == Move{Player::Staller, {1}});
  const Guarantee g = strat->declared_guarantee(cfg, fam.rules());
  CHECK(g.kind == Guarantee::Kind::ForceAtLeast);
  CHECK(g.value == 3);
  CHECK(verify_strategy(cfg, *strat, g, fam.rules()).ok);

  // Dominator moving first buys one interval of headroom.
  const GameConfig dfirst{fam.board(), 1, Player::Dominator};
  CHECK(strat->declared_guarantee(dfirst, fam.rules()).value == 2);

  PathFamilies sub;
  sub.entries = {{4, 0, 4}, {4, 1, 3}};
  sub.k = 1;
  sub.b = 1;
  CHECK(sub.total_vertices() == 8);
  CHECK(sub.q_mask() == (make_set({0, 1, 2, 3}) | make_set({5, 6})));
  const GameConfig two{sub.board(), 1, Player::Staller};
  const auto walker = path_adversary_staller(sub);
  REQUIRE(walker->applies_to(two, sub.rules()));
  // Longest target stretch lives in the first path.
  CHECK(first_choice(*walker, two) == Move{Player::Staller, {1}});

  PathFamilies huge;
  huge.entries = {{40, 0, 40}, {40, 0, 40}};
  CHECK_THROWS_AS(path_adversary_staller(huge), CapExceededError);
}

TEST_CASE("star pairing relays to the inner strategy") {
  const Graph tree = make_ts(10, 2, 2);
  const ForcingChainLayout lay = forcing_chain_layout(10, 2, 2);
  AdmissibleSequence seq;
  seq.vertices = lay.chain_centers;
  std::shared_ptr<Strategy> inner = tkb_dominator(lay.k, 2);
  const auto strat = star_pairing_dominator(tree, seq, inner);
  const GameConfig cfg{tree, 2, Player::Staller};
  REQUIRE(strat->applies_to(cfg, {}));
  const Guarantee g = strat->declared_guarantee(cfg, {});
  CHECK(g.kind == Guarantee::Kind::WinWithin);
  CHECK(g.value == 3);
  CHECK(verify_strategy(cfg, *strat, g).ok);
  // A staller claim inside a forced star is answered in that star.
  GameState s = initial_state(cfg);
  const Move sm{Player::Staller, {1}};
  s = apply_move(cfg, s, sm);
  const Move reply = strat->choose(cfg, s, {sm});
  CHECK(reply == Move{Player::Dominator, {0, 2}});

  CHECK_THROWS_AS(star_pairing_dominator(tree, seq, nullptr),
                  std::invalid_argument);
}

TEST_CASE("scripted witness play forces an infinite game") {
  const Graph p = make_path(5);
  const auto w = find_problematic(p, 0, 1);
  REQUIRE(w.has_value());
  const auto strat = problematic_staller(p, *w);
  const GameConfig cfg{p, 1, Player::Staller};
  REQUIRE(strat->applies_to(cfg, {}));
  CHECK(first_choice(*strat, cfg) == Move{Player::Staller, {1}});
  const Guarantee g = strat->declared_guarantee(cfg, {});
  CHECK(g.kind == Guarantee::Kind::ForceInfinity);
  CHECK(verify_strategy(cfg, *strat, g).ok);
  CHECK(!strat->applies_to(GameConfig{p, 2, Player::Staller}, {}));
  CHECK(!strat->applies_to(GameConfig{p, 1, Player::Dominator}, {}));
}

TEST_CASE("connector play wins every good tree it accepts") {
  const auto p4 = recursive_good_dominator(make_path(4), 0, 1);
  const GameConfig c4{make_path(4), 1, Player::Staller};
  REQUIRE(p4->applies_to(c4, {}));
  CHECK(verify_strategy(c4, *p4, p4->declared_guarantee(c4, {})).ok);

  const auto p6 = recursive_good_dominator(make_path(6), 0, 1);
  const GameConfig c6{make_path(6), 1, Player::Staller};
  REQUIRE(p6->applies_to(c6, {}));
  CHECK(verify_strategy(c6, *p6, p6->declared_guarantee(c6, {})).ok);

  // Bad trees are rejected outright.
  const auto p5 = recursive_good_dominator(make_path(5), 0, 1);
  CHECK(!p5->applies_to(GameConfig{make_path(5), 1, Player::Staller}, {}));

  // Reserving one end of the bad path restores the property under the
  // restricted rules: the reserved vertex is off limits and exempt.
  const Graph p = make_path(5);
  VariantRules rules;
  rules.dominator_forbidden = vbit(0);
  rules.target = p.full_mask() & ~p.closed_neighbor_mask(0);
  const auto rescued = recursive_good_dominator(p, vbit(0), 1);
  const GameConfig rc{p, 1, Player::Staller};
  REQUIRE(rescued->applies_to(rc, rules));
  CHECK(verify_strategy(rc, *rescued, rescued->declared_guarantee(rc, rules),
                        rules)
            .ok);

  // Reserving an interior vertex splits the board when the staller claims
  // it, yet that claim is dead: nothing adjacent to it still needs
  // dominating, so one reply per round must keep sufficing.
  VariantRules mid;
  mid.dominator_forbidden = vbit(1);
  mid.target = p.full_mask() & ~p.closed_neighbor_mask(1);
  const auto midgood = recursive_good_dominator(p, vbit(1), 1);
  REQUIRE(midgood->applies_to(rc, mid));
  const Move grab{Player::Staller, {1}};
  const GameState opened = apply_move(rc, initial_state(rc), grab, mid);
  const Move reply = midgood->choose(rc, opened, {grab});
  CHECK(reply.vertices.size() == 1);
  CHECK(verify_strategy(rc, *midgood, midgood->declared_guarantee(rc, mid),
                        mid)
            .ok);
}

TEST_CASE("star chain pair meets in the closed-form value") {
  for (int k : {4, 5, 8}) {
    const Graph board = make_tkb(k, 2);
    const GameConfig cfg{board, 2, Player::Staller};
    const auto dom = tkb_dominator(k, 2);
    const auto sta = tkb_staller(k, 2);
    REQUIRE(dom->applies_to(cfg, {}));
    REQUIRE(sta->applies_to(cfg, {}));
    const MatchResult res = play_match(cfg, *dom, *sta);
    CHECK(res.status.kind == GameStatus::Kind::DominatorWon);
    CHECK(res.status.rounds == gamma_tkb(k, 2));
    CHECK(verify_strategy(cfg, *dom, dom->declared_guarantee(cfg, {})).ok);
    CHECK(verify_strategy(cfg, *sta, sta->declared_guarantee(cfg, {})).ok);
  }
  CHECK_THROWS_AS(tkb_dominator(1, 2), std::invalid_argument);
  CHECK_THROWS_AS(tkb_staller(5, 1), std::invalid_argument);
}

TEST_CASE("breaker play clears boards under the potential threshold") {
  Graph cliques(8);
  for (int base : {0, 4}) {
    for (int u = 0; u < 4; ++u) {
      for (int v = u + 1; v < 4; ++v) cliques.add_edge(base + u, base + v);
    }
  }
  const GameConfig cfg{cliques, 1, Player::Dominator};
  const auto full = neighborhood_breaker_dominator(cliques, 1,
                                                   NeighborhoodMode::Full);
  REQUIRE(full->applies_to(cfg, {}));
  const Guarantee g = full->declared_guarantee(cfg, {});
  CHECK(g.kind == Guarantee::Kind::WinWithin);
  CHECK(verify_strategy(cfg, *full, g).ok);

  // Past the threshold the mode refuses the board.
  const Graph star = make_star(4);
  const auto refuse = neighborhood_breaker_dominator(star, 1,
                                                     NeighborhoodMode::Full);
  CHECK(!refuse->applies_to(GameConfig{star, 1, Player::Dominator}, {}));

  const Graph k8 = complete_graph(8);
  const VertexSet a = make_set({0, 1, 2, 3});
  const auto subset = neighborhood_breaker_dominator(
      k8, 1, NeighborhoodMode::Subset, a);
  const GameConfig kcfg{k8, 1, Player::Dominator};
  REQUIRE(subset->applies_to(kcfg, {}));
  const Guarantee sg = subset->declared_guarantee(kcfg, {});
  CHECK(sg.kind == Guarantee::Kind::WinWithin);
  CHECK(sg.value == 4);
  CHECK(verify_strategy(kcfg, *subset, sg).ok);
  // Claims stay inside the chosen set.
  CHECK(vin(a, first_choice(*subset, kcfg).vertices[0]));

  const Graph p6 = make_path(6);
  const auto frac = neighborhood_breaker_dominator(p6, 1,
                                                   NeighborhoodMode::Fraction);
  const GameConfig pcfg{p6, 1, Player::Dominator};
  REQUIRE(frac->applies_to(pcfg, {}));
  const Guarantee fg = frac->declared_guarantee(pcfg, {});
  CHECK(fg.kind == Guarantee::Kind::DominateAtLeast);
  CHECK(fg.value == fraction_bound(6, 1));
  CHECK(verify_strategy(pcfg, *frac, fg).ok);
}

TEST_CASE("subset sampling succeeds on dense boards and fails on sparse ones") {
  const Graph k12 = complete_graph(12);
  const VertexSet a = build_dominating_subset(k12, 1, 7);
  CHECK(a == k12.full_mask());
  CHECK(build_dominating_subset(k12, 1, 7) == a);
  CHECK_THROWS_AS(build_dominating_subset(make_cycle(5), 1, 1),
                  std::runtime_error);
}

TEST_CASE("private-count attack opens at the busiest owner") {
  const Graph p11 = make_path(11);
  const auto strat = dstar_staller(p11, 2);
  const GameConfig cfg{p11, 2, Player::Staller};
  REQUIRE(strat->applies_to(cfg, {}));
  CHECK(first_choice(*strat, cfg) == Move{Player::Staller, {3}});
  const Guarantee g = strat->declared_guarantee(cfg, {});
  CHECK(g.kind == Guarantee::Kind::ForceAtLeast);
  CHECK(g.value == 2);
  CHECK(verify_strategy(cfg, *strat, g).ok);
  CHECK_THROWS_AS(dstar_staller(make_path(25), 2), CapExceededError);
}

TEST_CASE("stacked tree attack picks an untouched copy") {
  const Graph board = make_ary_stack(1, 2);
  const auto strat = arystack_staller(1, 2);
  const GameConfig cfg{board, 1, Player::Dominator};
  REQUIRE(strat->applies_to(cfg, {}));
  const Guarantee g = strat->declared_guarantee(cfg, {});
  CHECK(g.kind == Guarantee::Kind::ForceInfinity);

  GameState s = initial_state(cfg);
  const Move dm{Player::Dominator, {0}};
  s = apply_move(cfg, s, dm);
  CHECK(strat->choose(cfg, s, {dm}) == Move{Player::Staller, {7}});

  CHECK(verify_strategy(cfg, *strat, g).ok);
}
