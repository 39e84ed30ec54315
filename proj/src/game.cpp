#include "mbd/game.hpp"

#include <algorithm>
#include <sstream>

namespace mbd {

std::string player_name(Player p) {
  return p == Player::Dominator ? "dominator" : "staller";
}

Player parse_player(const std::string& s) {
  if (s == "dominator" || s == "D" || s == "d") return Player::Dominator;
  if (s == "staller" || s == "S" || s == "s") return Player::Staller;
  throw std::invalid_argument("unknown player '" + s + "'; expected dominator|staller");
}

VertexSet target_mask(const GameConfig& cfg, const VariantRules& rules) {
  return rules.target.value_or(cfg.board.full_mask());
}

GameState initial_state(const GameConfig& cfg) {
  if (cfg.bias < 1) throw std::invalid_argument("bias >= 1 required");
  if (cfg.board.vertex_count() < 1) throw std::invalid_argument("board must be nonempty");
  GameState s;
  s.to_move = cfg.first;
  return s;
}

GameStatus game_status(const GameConfig& cfg, const GameState& s,
                       const VariantRules& rules) {
  const Graph& g = cfg.board;
  VertexSet target = target_mask(cfg, rules);
  if ((target & ~dominated_mask(g, s.dominator)) == 0)
    return {GameStatus::Kind::DominatorWon, s.dominator_moves};
  for (int v : set_vertices(target)) {
    if ((g.closed_neighbor_mask(v) & ~s.staller) == 0)
      return {GameStatus::Kind::StallerWon, s.dominator_moves};
  }
  VertexSet free = g.full_mask() & ~s.claimed();
  VertexSet legal = s.to_move == Player::Dominator ? free & ~rules.dominator_forbidden : free;
  if (legal == 0) return {GameStatus::Kind::StallerWon, s.dominator_moves};
  return {GameStatus::Kind::Ongoing, s.dominator_moves};
}

GameState apply_move(const GameConfig& cfg, const GameState& s, const Move& m,
                     const VariantRules& rules) {
  using R = IllegalMoveError::Reason;
  if (m.by != s.to_move)
    throw IllegalMoveError(R::WrongTurn, "move by " + player_name(m.by) +
                                             " but it is " + player_name(s.to_move) +
                                             "'s turn");
  if (m.vertices.empty()) throw IllegalMoveError(R::EmptyClaim, "empty claim");
  if (m.by == Player::Dominator && static_cast<int>(m.vertices.size()) > cfg.bias)
    throw IllegalMoveError(R::OversizedClaim,
                           "dominator claim of " + std::to_string(m.vertices.size()) +
                               " vertices exceeds bias " + std::to_string(cfg.bias));
  if (m.by == Player::Staller && m.vertices.size() != 1)
    throw IllegalMoveError(R::MultiVertexClaim, "staller must claim exactly one vertex");
  GameState out = s;
  VertexSet picked = 0;
  for (int v : m.vertices) {
    if (v < 0 || v >= cfg.board.vertex_count())
      throw IllegalMoveError(R::VertexOutOfRange, "vertex " + std::to_string(v) +
                                                      " out of range");
    if (vin(picked, v))
      throw IllegalMoveError(R::DuplicateVertex,
                             "vertex " + std::to_string(v) + " claimed twice in one move");
    if (vin(s.claimed(), v))
      throw IllegalMoveError(R::VertexTaken,
                             "vertex " + std::to_string(v) + " is already claimed");
    if (m.by == Player::Dominator && vin(rules.dominator_forbidden, v))
      throw IllegalMoveError(R::VertexForbidden,
                             "vertex " + std::to_string(v) + " is forbidden to dominator");
    picked |= vbit(v);
  }
  if (m.by == Player::Dominator) {
    out.dominator |= picked;
    out.dominator_moves += 1;
  } else {
    out.staller |= picked;
  }
  out.to_move = opponent(s.to_move);
  return out;
}

std::string format_move(const Move& m) {
  std::string out(1, player_letter(m.by));
  out += ' ';
  for (size_t i = 0; i < m.vertices.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(m.vertices[i]);
  }
  return out;
}

std::string format_status(const GameStatus& st) {
  switch (st.kind) {
    case GameStatus::Kind::Ongoing: return "RESULT Ongoing";
    case GameStatus::Kind::DominatorWon:
      return "RESULT DominatorWon " + std::to_string(st.rounds);
    case GameStatus::Kind::StallerWon: return "RESULT StallerWon";
  }
  throw std::logic_error("format_status: bad kind");
}

Move parse_move(const std::string& line) {
  std::istringstream in(line);
  std::string tag, rest;
  if (!(in >> tag) || (tag != "D" && tag != "S"))
    throw std::invalid_argument("move line must start with D or S: '" + line + "'");
  Move m;
  m.by = tag == "D" ? Player::Dominator : Player::Staller;
  if (!(in >> rest)) throw std::invalid_argument("move line lacks vertices: '" + line + "'");
  std::string extra;
  if (in >> extra) throw std::invalid_argument("trailing tokens in move line: '" + line + "'");
  size_t pos = 0;
  while (pos <= rest.size()) {
    size_t comma = rest.find(',', pos);
    std::string tok = rest.substr(pos, comma == std::string::npos ? comma : comma - pos);
    if (tok.empty()) throw std::invalid_argument("empty vertex token in '" + line + "'");
    size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size())
      throw std::invalid_argument("bad vertex token '" + tok + "' in '" + line + "'");
    m.vertices.push_back(v);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return m;
}

std::string format_guarantee(const Guarantee& g) {
  switch (g.kind) {
    case Guarantee::Kind::WinWithin:
      return "win within " + std::to_string(g.value) + " rounds";
    case Guarantee::Kind::ForceInfinity: return "force infinity";
    case Guarantee::Kind::ForceAtLeast:
      return "force at least " + std::to_string(g.value) + " rounds";
    case Guarantee::Kind::DominateAtLeast:
      return "dominate at least " + std::to_string(g.value) + " vertices";
  }
  throw std::logic_error("format_guarantee: bad kind");
}

MatchResult play_match(const GameConfig& cfg, const Strategy& dominator,
                       const Strategy& staller, int max_rounds,
                       const VariantRules& rules) {
  MatchResult r;
  GameState s = initial_state(cfg);
  GameStatus st = game_status(cfg, s, rules);
  while (st.ongoing() && s.dominator_moves < max_rounds) {
    const Strategy& who = s.to_move == Player::Dominator ? dominator : staller;
    Move m = who.choose(cfg, s, r.transcript);
    s = apply_move(cfg, s, m, rules);
    r.transcript.push_back(std::move(m));
    st = game_status(cfg, s, rules);
  }
  r.status = st;
  r.final_state = s;
  return r;
}

}  // namespace mbd
