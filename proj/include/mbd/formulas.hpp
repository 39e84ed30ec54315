#pragma once

#include <string>

#include "mbd/families.hpp"
#include "mbd/game.hpp"
#include "mbd/graph.hpp"
#include "mbd/solver.hpp"

namespace mbd {

inline constexpr long long ceil_div(long long a, long long b) {
  return (a + b - 1) / b;
}

// Dominator-first value of the k-th power of a path or cycle on n vertices:
// ceil((n-1)/N) with N = b(2k+1) - 1. Paths need n >= 2, cycles n >= 3.
int gamma_power(int n, int k, int b, BoardKind kind);

// Unbiased tree values from the residual-forest classification and the
// matching criterion. The graph must be a tree.
GameValue gamma_tree_b1(const Graph& tree, Player first);

// Unbiased cycle value: floor(n/2) for either first player, n >= 3.
GameValue gamma_cycle_b1(int n, Player first);

// f(b) = (floor(b/2)+1)(ceil(b/2)+1).
int f_of_b(int b);

// Staller-first value of the balanced star chain: ceil(k/f(b)), k >= 2, b >= 2.
int gamma_tkb(int k, int b);

// Staller-first value of the forcing-chain family on n vertices with s chain
// blocks: s + ceil((n - s(b+1))/f(b)).
int gamma_ts(int n, int b, int s);

struct BoundReport {
  int lower = 0;
  int upper = 0;
  std::string source;
};

// ceil(n/(b(b+3))) <= staller-first tree value <= ceil(n/(b+1)).
BoundReport tree_gamma_bounds(int n, int b);

// n - floor(n/(b+1)^2), the guaranteed dominated count on trees.
int fraction_bound(int n, int b);

// log_{b+1}(n) - 1; the bias beyond which the Dominator wins every
// min-degree-delta graph on n vertices when delta exceeds this.
double mindeg_win_threshold(int n, int b);

// Exact integer test (b+1)^(delta+1) > n.
bool mindeg_condition_holds(int n, int delta, int b);

// ceil(10 n ln n / (b delta)) rounds suffice under the density condition.
int dense_round_bound(int n, int delta, int b);

}  // namespace mbd
