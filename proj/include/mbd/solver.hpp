#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mbd/game.hpp"
#include "mbd/graph.hpp"

namespace mbd {

struct GameValue {
  bool infinite = false;
  int rounds = 0;  // meaningful when finite

  static GameValue finite(int r) { return {false, r}; }
  static GameValue infinity() { return {true, 0}; }
  bool is_finite() const { return !infinite; }
  bool operator==(const GameValue&) const = default;
};

// Total order with Infinity greatest.
inline bool operator<(const GameValue& a, const GameValue& b) {
  if (a.infinite != b.infinite) return !a.infinite;
  return !a.infinite && a.rounds < b.rounds;
}
inline bool operator<=(const GameValue& a, const GameValue& b) { return !(b < a); }

std::string to_string(const GameValue& v);  // "3" or "infinity"

// Board-size limits keyed by bias; claims beyond them error, never truncate.
int default_solver_cap(int bias);

struct SolverOptions {
  int cap = 0;  // 0 = default_solver_cap(bias)
  // Branch Dominator claims over every size 1..bias instead of exactly
  // min(bias, #free). Values are equal (extra claims never hurt Dominator);
  // the flag exists so that equality stays a tested fact.
  bool unrestricted_dominator = false;
  VariantRules rules;
  bool want_pv = false;
};

struct SolveReport {
  GameValue value;
  std::uint64_t states_visited = 0;
  std::vector<Move> principal_variation;  // empty when value is infinite
};

// Exact minimax: Dominator minimizes her move count to domination, Staller
// maximizes (infinity when he can fully claim some target closed
// neighborhood). Memoized on (dominator set, staller set, side to move).
SolveReport solve_rounds(const GameConfig& cfg, const SolverOptions& opts = {});

struct MaxDominatedReport {
  int dominated = 0;
  std::uint64_t states_visited = 0;
};

// Zero-sum variant played to board exhaustion; payoff is the number of
// vertices Dominator's set dominates. Dominator maximizes, Staller minimizes.
MaxDominatedReport solve_max_dominated(const GameConfig& cfg,
                                       const SolverOptions& opts = {});

// Optimal claim for the side to move in `state`, or none when the position is
// already closed. Lexicographically smallest among value-preserving claims;
// a lost Dominator position falls back to the lowest claim of full size.
std::optional<Move> best_move(const GameConfig& cfg, const GameState& state,
                              const SolverOptions& opts = {});

struct VerifyOutcome {
  bool ok = true;
  std::vector<Move> counterexample;  // transcript of the failing line
  std::string detail;
  std::uint64_t lines = 0;  // terminal or pruned positions examined

  explicit operator bool() const { return ok; }
};

// Plays the strategy against every legal opponent line (opposing Dominator
// tries every claim of every size 1..bias) and checks the guarantee on each.
VerifyOutcome verify_strategy(const GameConfig& cfg, const Strategy& strat,
                              const Guarantee& guarantee,
                              const VariantRules& rules = {});

}  // namespace mbd
