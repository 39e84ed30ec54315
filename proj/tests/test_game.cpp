#include <string>
#include <vector>

#include "doctest.h"
#include "mbd/families.hpp"
#include "mbd/game.hpp"
#include "mbd/strategies.hpp"

using namespace mbd;

namespace {

GameConfig path_cfg(int n, int bias, Player first) {
  return GameConfig{make_path(n), bias, first};
}

IllegalMoveError::Reason reason_of(const GameConfig& cfg, const GameState& s,
                                   const Move& m, const VariantRules& rules = {}) {
  try {
    apply_move(cfg, s, m, rules);
  } catch (const IllegalMoveError& e) {
    return e.reason();
  }
  throw std::logic_error("move was legal");
}

}  // namespace

TEST_CASE("player helpers") {
  CHECK(opponent(Player::Dominator) == Player::Staller);
  CHECK(player_letter(Player::Staller) == 'S');
  CHECK(player_name(Player::Dominator) == "dominator");
  CHECK(parse_player("D") == Player::Dominator);
  CHECK(parse_player("staller") == Player::Staller);
  CHECK(parse_player("S") == Player::Staller);
  CHECK_THROWS_AS(parse_player("X"), std::invalid_argument);
}

TEST_CASE("initial state starts with the configured first player") {
  const GameConfig cfg = path_cfg(4, 2, Player::Staller);
  const GameState s = initial_state(cfg);
  CHECK(s.dominator == 0);
  CHECK(s.staller == 0);
  CHECK(s.to_move == Player::Staller);
  CHECK(s.dominator_moves == 0);
}

TEST_CASE("apply_move validates every illegality separately") {
  const GameConfig cfg = path_cfg(5, 2, Player::Dominator);
  GameState s = initial_state(cfg);
  using R = IllegalMoveError::Reason;
  CHECK(reason_of(cfg, s, Move{Player::Staller, {0}}) == R::WrongTurn);
  CHECK(reason_of(cfg, s, Move{Player::Dominator, {}}) == R::EmptyClaim);
  CHECK(reason_of(cfg, s, Move{Player::Dominator, {0, 1, 2}}) == R::OversizedClaim);
  CHECK(reason_of(cfg, s, Move{Player::Dominator, {5}}) == R::VertexOutOfRange);
  CHECK(reason_of(cfg, s, Move{Player::Dominator, {1, 1}}) == R::DuplicateVertex);

  s = apply_move(cfg, s, Move{Player::Dominator, {1, 3}});
  CHECK(s.dominator == make_set({1, 3}));
  CHECK(s.to_move == Player::Staller);
  CHECK(s.dominator_moves == 1);
  CHECK(reason_of(cfg, s, Move{Player::Staller, {0, 2}}) == R::MultiVertexClaim);
  CHECK(reason_of(cfg, s, Move{Player::Staller, {3}}) == R::VertexTaken);

  VariantRules rules;
  rules.dominator_forbidden = vbit(0);
  s = apply_move(cfg, s, Move{Player::Staller, {2}}, rules);
  CHECK(reason_of(cfg, s, Move{Player::Dominator, {0, 4}}, rules) ==
        R::VertexForbidden);
  // An undersized claim is legal; the bias is an upper limit.
  s = apply_move(cfg, s, Move{Player::Dominator, {4}}, rules);
  CHECK(s.dominator == make_set({1, 3, 4}));
  CHECK(s.dominator_moves == 2);
}

TEST_CASE("status reports domination wins with the round count") {
  const GameConfig cfg = path_cfg(4, 1, Player::Dominator);
  GameState s = initial_state(cfg);
  CHECK(game_status(cfg, s).ongoing());
  s = apply_move(cfg, s, Move{Player::Dominator, {1}});
  CHECK(game_status(cfg, s).ongoing());
  s = apply_move(cfg, s, Move{Player::Staller, {0}});
  s = apply_move(cfg, s, Move{Player::Dominator, {2}});
  const GameStatus st = game_status(cfg, s);
  CHECK(st.kind == GameStatus::Kind::DominatorWon);
  CHECK(st.rounds == 2);
}

TEST_CASE("status reports a closed neighborhood as a staller win") {
  const GameConfig cfg = path_cfg(4, 1, Player::Staller);
  GameState s = initial_state(cfg);
  s = apply_move(cfg, s, Move{Player::Staller, {0}});
  s = apply_move(cfg, s, Move{Player::Dominator, {3}});
  s = apply_move(cfg, s, Move{Player::Staller, {1}});
  // N[0] = {0,1} is fully Staller's.
  CHECK(game_status(cfg, s).kind == GameStatus::Kind::StallerWon);
}

TEST_CASE("running out of legal claims loses for the mover") {
  const GameConfig cfg = path_cfg(2, 1, Player::Staller);
  GameState s = initial_state(cfg);
  s = apply_move(cfg, s, Move{Player::Staller, {0}});
  s = apply_move(cfg, s, Move{Player::Dominator, {1}});
  // Board full, Staller to move, nothing to claim; the board is dominated
  // though, so the domination check wins out.
  CHECK(game_status(cfg, s).kind == GameStatus::Kind::DominatorWon);

  VariantRules rules;
  rules.dominator_forbidden = make_set({0, 1});
  rules.target = vbit(0);
  GameState t = initial_state(path_cfg(2, 1, Player::Dominator));
  // Dominator cannot claim anything at all.
  CHECK(game_status(path_cfg(2, 1, Player::Dominator), t, rules).kind ==
        GameStatus::Kind::StallerWon);
}

TEST_CASE("restricted target narrows both win conditions") {
  const GameConfig cfg = path_cfg(5, 1, Player::Dominator);
  VariantRules rules;
  rules.dominator_forbidden = vbit(2);
  rules.target = make_set({0, 1});
  CHECK(target_mask(cfg, rules) == make_set({0, 1}));
  CHECK(target_mask(cfg, {}) == cfg.board.full_mask());
  GameState s = initial_state(cfg);
  s = apply_move(cfg, s, Move{Player::Dominator, {1}}, rules);
  // N[1] covers the whole target.
  CHECK(game_status(cfg, s, rules).kind == GameStatus::Kind::DominatorWon);
  CHECK(game_status(cfg, s, rules).rounds == 1);
  // A fully Staller-claimed closed neighborhood outside the target does not
  // end the game; the same grip on a target vertex does.
  GameState t;
  t.staller = make_set({3, 4});  // N[4] is all Staller's, 4 is no target
  t.to_move = Player::Dominator;
  CHECK(game_status(cfg, t, rules).ongoing());
  t.staller = make_set({0, 1});  // N[0] is all Staller's, 0 is a target
  CHECK(game_status(cfg, t, rules).kind == GameStatus::Kind::StallerWon);
}

TEST_CASE("transcript format round-trips") {
  const Move dm{Player::Dominator, {0, 2, 5}};
  const Move sm{Player::Staller, {3}};
  CHECK(format_move(dm) == "D 0,2,5");
  CHECK(format_move(sm) == "S 3");
  CHECK(parse_move("D 0,2,5") == dm);
  CHECK(parse_move("S 3") == sm);
  CHECK_THROWS_AS(parse_move("Q 1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_move("D"), std::invalid_argument);
  CHECK_THROWS_AS(parse_move("D 1,,2"), std::invalid_argument);

  GameStatus won;
  won.kind = GameStatus::Kind::DominatorWon;
  won.rounds = 3;
  CHECK(format_status(won) == "RESULT DominatorWon 3");
  GameStatus lost;
  lost.kind = GameStatus::Kind::StallerWon;
  CHECK(format_status(lost) == "RESULT StallerWon");
}

TEST_CASE("guarantee formatting names the kind") {
  CHECK(format_guarantee({Guarantee::Kind::WinWithin, 3}) ==
        "win within 3 rounds");
  CHECK(format_guarantee({Guarantee::Kind::ForceInfinity, 0}) == "force infinity");
  CHECK(format_guarantee({Guarantee::Kind::ForceAtLeast, 2}) ==
        "force at least 2 rounds");
  CHECK(format_guarantee({Guarantee::Kind::DominateAtLeast, 5}) ==
        "dominate at least 5 vertices");
}

TEST_CASE("match playback produces a full transcript") {
  const GameConfig cfg{make_star(3), 1, Player::Staller};
  const auto dom = lowest_free_dominator();
  const auto sta = lowest_free_staller();
  const MatchResult res = play_match(cfg, *dom, *sta);
  CHECK(res.status.kind == GameStatus::Kind::StallerWon);
  REQUIRE(res.transcript.size() == 3);
  CHECK(format_move(res.transcript[0]) == "S 0");
  CHECK(format_move(res.transcript[1]) == "D 1");
  CHECK(format_move(res.transcript[2]) == "S 2");
  CHECK(res.final_state.staller == make_set({0, 2}));

  const MatchResult dwin =
      play_match(GameConfig{make_path(4), 2, Player::Dominator}, *dom, *sta);
  CHECK(dwin.status.kind == GameStatus::Kind::DominatorWon);
  CHECK(dwin.status.rounds == 2);
}
