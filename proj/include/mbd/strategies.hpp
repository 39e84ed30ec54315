#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "mbd/families.hpp"
#include "mbd/game.hpp"
#include "mbd/goodness.hpp"
#include "mbd/graph.hpp"

namespace mbd {

// Claims the lowest legal vertices: bias-many for the Dominator, one for the
// Staller. Vacuous guarantees; useful as a filler opponent.
std::unique_ptr<Strategy> lowest_free_dominator();
std::unique_ptr<Strategy> lowest_free_staller();

// Dominator-first strategy on the k-th power of a path or cycle: the opening
// round dominates a prefix, later rounds each finish one residue interval.
// Wins within ceil((n-1)/(b(2k+1)-1)) rounds.
std::unique_ptr<Strategy> interval_dominator(int n, int k, int b, BoardKind kind);

// Disjoint union of paths, each carrying one target subrange; the board is
// the k-th power of the union and only Q-vertices must be dominated.
struct PathFamilyEntry {
  int length = 0;  // vertices in this path
  int q_lo = 0;    // target subrange [q_lo, q_hi), path-relative
  int q_hi = 0;
};

struct PathFamilies {
  std::vector<PathFamilyEntry> entries;
  int k = 1;
  int b = 1;

  int offset(size_t entry) const;
  int total_vertices() const;
  Graph board() const;
  VertexSet q_mask() const;
  int q_vertex_count() const;
  VariantRules rules() const;
};

// Staller strategy walking down a guarded block of the longest uncolored
// target stretch; forces at least ceil(q/(b(2k+1)-1)) rounds (one fewer
// Dominator handicap when she moves first), and at least ceil(q/(2bk)) when
// every stretch is short.
std::unique_ptr<Strategy> path_adversary_staller(PathFamilies fam);

// Staller-first Dominator play that answers each forced star V_i in full and
// relays everything else to `inner` on the reduced forest.
std::unique_ptr<Strategy> star_pairing_dominator(Graph tree, AdmissibleSequence seq,
                                                 std::shared_ptr<Strategy> inner);

// Staller-first script v_1..v_t then the exposed vertex; punishes any skipped
// forced leaf immediately. Forces an infinite game.
std::unique_ptr<Strategy> problematic_staller(Graph tree, ProblematicWitness witness);

// Staller-first Dominator play on a tree with no problematic pair relative to
// the exclusion set: decomposes around each Staller move and claims the
// connectors of components that lost the property.
std::unique_ptr<Strategy> recursive_good_dominator(Graph tree, VertexSet exclusion,
                                                   int b);

// Matched optimal pair on the balanced star chain, both Staller-first.
std::unique_ptr<Strategy> tkb_dominator(int k, int b);
std::unique_ptr<Strategy> tkb_staller(int k, int b);

enum class NeighborhoodMode {
  Full,    // every closed neighborhood; needs potential below one
  Subset,  // open neighborhoods met by a chosen set A; claims stay inside A
  Fraction // no precondition; guarantees the (1 - 1/(b+1)^2) fraction
};

std::unique_ptr<Strategy> neighborhood_breaker_dominator(
    Graph g, int b, NeighborhoodMode mode, VertexSet subset = 0);

struct SubsetSamplingOptions {
  std::optional<double> probability;       // default 9 ln n / delta
  std::optional<double> degree_threshold;  // default 2 ln n, strict
  std::optional<double> size_limit;        // default (10/9) p n
  int max_retries = 1000;
};

// Random vertex subset hitting every open neighborhood often enough for the
// Subset mode; retries until both predicates hold, else throws runtime_error.
VertexSet build_dominating_subset(const Graph& g, int b, uint64_t seed,
                                  const SubsetSamplingOptions& options = {});

// Staller-first attack on the private-domination counts of a fixed minimum
// dominating set; forces at least ceil(n/(b(b+3))) rounds on trees.
std::unique_ptr<Strategy> dstar_staller(Graph tree, int b);

// Staller reply on the stacked-tree family from the Dominator-first side:
// picks an untouched copy and walks a root-leaf path there, forcing an
// infinite game.
std::unique_ptr<Strategy> arystack_staller(int b, int k);

}  // namespace mbd
