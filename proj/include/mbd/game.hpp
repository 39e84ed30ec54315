#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mbd/graph.hpp"

namespace mbd {

enum class Player { Dominator, Staller };

inline Player opponent(Player p) {
  return p == Player::Dominator ? Player::Staller : Player::Dominator;
}
inline char player_letter(Player p) { return p == Player::Dominator ? 'D' : 'S'; }
std::string player_name(Player p);  // "dominator" / "staller"
Player parse_player(const std::string& s);

// Dominator claims up to `bias` vertices per round; Staller claims one.
struct GameConfig {
  Graph board;
  int bias = 1;
  Player first = Player::Dominator;
};

// Restricted variant: Dominator may not claim `dominator_forbidden`; she wins
// once `target` (all vertices when unset) lies inside her dominated region.
struct VariantRules {
  VertexSet dominator_forbidden = 0;
  std::optional<VertexSet> target;
};

VertexSet target_mask(const GameConfig& cfg, const VariantRules& rules);

struct Move {
  Player by = Player::Dominator;
  std::vector<int> vertices;  // nonempty; size 1 for Staller

  bool operator==(const Move&) const = default;
};

struct GameState {
  VertexSet dominator = 0;
  VertexSet staller = 0;
  Player to_move = Player::Dominator;
  int dominator_moves = 0;

  VertexSet claimed() const { return dominator | staller; }
};

GameState initial_state(const GameConfig& cfg);

struct GameStatus {
  enum class Kind { Ongoing, DominatorWon, StallerWon };
  Kind kind = Kind::Ongoing;
  int rounds = 0;  // Dominator moves made; meaningful when DominatorWon

  bool ongoing() const { return kind == Kind::Ongoing; }
};

// DominatorWon iff the target is dominated; else StallerWon iff some target
// vertex has its whole closed neighborhood claimed by Staller, or the player
// to move has no legal claim; else Ongoing.
GameStatus game_status(const GameConfig& cfg, const GameState& s,
                       const VariantRules& rules = {});

class IllegalMoveError : public std::runtime_error {
 public:
  enum class Reason {
    WrongTurn,
    EmptyClaim,
    OversizedClaim,     // Dominator claim larger than bias
    MultiVertexClaim,   // Staller claim of more than one vertex
    VertexOutOfRange,
    DuplicateVertex,
    VertexTaken,
    VertexForbidden,    // Dominator claim inside a restricted set
  };
  IllegalMoveError(Reason r, const std::string& msg)
      : std::runtime_error(msg), reason_(r) {}
  Reason reason() const { return reason_; }

 private:
  Reason reason_;
};

// Validates and applies one move. Termination is game_status's concern; this
// only checks the move itself.
GameState apply_move(const GameConfig& cfg, const GameState& s, const Move& m,
                     const VariantRules& rules = {});

// Transcript lines: "D 0,2,5" / "S 3"; result line "RESULT DominatorWon 3"
// or "RESULT StallerWon".
std::string format_move(const Move& m);
std::string format_status(const GameStatus& st);
Move parse_move(const std::string& line);

struct Guarantee {
  enum class Kind {
    WinWithin,        // Dominator wins in at most `value` of her moves
    ForceInfinity,    // Staller wins outright
    ForceAtLeast,     // Dominator cannot win in fewer than `value` moves
    DominateAtLeast,  // Dominator ends with at least `value` dominated vertices
  };
  Kind kind = Kind::WinWithin;
  int value = 0;
};

std::string format_guarantee(const Guarantee& g);

// A deterministic move rule. choose must depend only on its arguments: the
// exhaustive verifier replays histories out of order.
class Strategy {
 public:
  virtual ~Strategy() = default;
  virtual std::string name() const = 0;
  virtual Player side() const = 0;
  virtual bool applies_to(const GameConfig& cfg, const VariantRules& rules) const = 0;
  virtual Guarantee declared_guarantee(const GameConfig& cfg,
                                       const VariantRules& rules) const = 0;
  virtual Move choose(const GameConfig& cfg, const GameState& s,
                      const std::vector<Move>& history) const = 0;
};

struct MatchResult {
  GameStatus status;
  std::vector<Move> transcript;
  GameState final_state;
};

// Alternating playback until terminal or the Dominator-move budget runs out.
// Illegal strategy moves surface as IllegalMoveError.
MatchResult play_match(const GameConfig& cfg, const Strategy& dominator,
                       const Strategy& staller, int max_rounds = 1 << 20,
                       const VariantRules& rules = {});

}  // namespace mbd
