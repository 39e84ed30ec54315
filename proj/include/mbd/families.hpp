#pragma once
// Parametric graph families used by the suites. Each construction documents
// its vertex labeling so strategies can address positions directly.

#include <string>
#include <vector>

#include "mbd/graph.hpp"

namespace mbd {

enum class BoardKind { Path, Cycle };

// Path 0-1-...-(n-1).
Graph make_path(int n);
// Cycle 0-1-...-(n-1)-0, n >= 3.
Graph make_cycle(int n);
// Star with k edges: center 0, leaves 1..k.
Graph make_star(int k);
Graph make_path_power(int n, int k);
Graph make_cycle_power(int n, int k);

// Chain of stars on k vertices total, bias parameter b >= 2. With
// x = ceil(b/2), q = ceil(k/(x+1)), r = k-(q-1)(x+1): stars S_1..S_q carry
// x edges each except S_q which carries r-1; consecutive centers are joined.
// When r == 1 the lone last center is instead viewed as an extra leaf of
// S_{q-1} (the graph is identical; only the star bookkeeping moves).
// Labeling: stars in order, each center immediately followed by its leaves.
struct StarChainLayout {
  int k = 0, b = 0, x = 0, q = 0, r = 0;
  bool merged_last = false;                  // r == 1 and q >= 2
  std::vector<int> centers;                  // effective star centers, in chain order
  std::vector<std::vector<int>> star_leaves; // leaves per effective star
};
StarChainLayout star_chain_layout(int k, int b);
Graph make_tkb(int k, int b);

// Forcing chain glued to a star chain: s centers c_1..c_s, each with b leaf
// children, joined in a path; c_s is joined to the first star center of the
// residual star chain on n - s(b+1) vertices. Labeling: c_i then its leaves,
// blocks in chain order, then the star chain block.
struct ForcingChainLayout {
  int n = 0, b = 0, s = 0, k = 0;
  std::vector<int> chain_centers;
  std::vector<std::vector<int>> chain_leaves;
  int residual_offset = 0;  // first id of the star-chain block
};
ForcingChainLayout forcing_chain_layout(int n, int b, int s);
Graph make_ts(int n, int b, int s);

// t stars joined through their centers; the first t-1 stars carry b edges
// and the last star absorbs the remaining n - (t-1)(b+1) vertices.
Graph make_star_path(int n, int b, int t);

// b+1 stars joined through their centers, the n vertices distributed among
// the stars as evenly as possible (earlier stars get the extras).
Graph make_fraction_sharp(int n, int b);

// Perfect `branching`-ary tree with `levels` levels, heap labeling within
// the tree: root 0, children of i are branching*i+1 .. branching*i+branching.
Graph make_perfect_ary_tree(int branching, int levels);

// b+1 disjoint perfect (b+1)-ary trees with k+1 levels each (heap labeling
// per copy, copies in consecutive id blocks), plus an edge between every
// vertex and each of its proper descendants.
Graph make_ary_stack(int b, int k);
int ary_stack_vertex_count(int b, int k);

struct FamilySpec {
  enum class Kind {
    Path, Cycle, Star, PathPower, CyclePower, Tkb, Ts, StarPath,
    FractionSharp, PerfectAryTree, AryStack
  };
  Kind kind = Kind::Path;
  int n = 0, k = 0, b = 0, s = 0, t = 0, branching = 0, levels = 0;
};

Graph construct(const FamilySpec& spec);
// Family names accepted on the command line; throws std::invalid_argument
// listing valid names on failure.
FamilySpec::Kind parse_family_name(const std::string& name);
std::vector<std::string> family_names();

}  // namespace mbd
