#pragma once

#include <vector>

#include "mbd/graph.hpp"
#include "mbd/rng.hpp"

namespace mbd {

// Maker-Breaker board: Maker tries to claim some set completely, Breaker
// plays q vertices per round to touch every set.
struct Hypergraph {
  int n = 0;
  std::vector<VertexSet> sets;
};

Hypergraph neighborhood_hypergraph(const Graph& g);  // all N[v]
Hypergraph subset_neighborhood_hypergraph(const Graph& g, VertexSet subset);

// Sum over Breaker-free sets of (1+q)^(-free elements). Fully-Maker sets
// contribute 1 each, so the potential bounds how many Maker can complete.
double beck_potential(const Hypergraph& h, int q, VertexSet maker,
                      VertexSet breaker);

// floor of the starting potential, computed in exact integer arithmetic.
long long beck_bound(const Hypergraph& h, int q);

// One Breaker round: q greedy picks, each maximizing the total weight of the
// live sets through the chosen vertex (ties to the lowest id), padding with
// the lowest free vertex when no live set has free elements.
std::vector<int> beck_breaker_claims(const Hypergraph& h, int q, VertexSet maker,
                                     VertexSet breaker);

// Breaker moves first with the greedy rule; Maker plays every counter-line.
// Returns the largest number of sets Maker ever fully occupies.
int exhaustive_max_maker_sets(const Hypergraph& h, int q);

// Root-to-leaf paths of the heap-labeled perfect tree (see
// make_perfect_ary_tree); levels counts edge-depth.
Hypergraph ary_root_leaf_paths(int branching, int levels);

// Maker rule on that tree: claim the root, then always descend to the lowest
// child whose subtree is Breaker-free.
std::vector<int> ary_maker_claim(int branching, int levels, VertexSet maker,
                                 VertexSet breaker);

// Maker moves first with the descent rule against every Breaker line of at
// most q claims per round; true when Maker always completes a path.
bool exhaustive_ary_maker_wins(int branching, int levels, int q);

Hypergraph random_hypergraph(Rng& rng, int n, int set_count, int min_size,
                             int max_size);

}  // namespace mbd
