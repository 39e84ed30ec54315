#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mbd/graph.hpp"

namespace mbd {

// Ordered deletion sequence v_1..v_t avoiding the exclusion set A.
struct AdmissibleSequence {
  std::vector<int> vertices;
  VertexSet exclusion = 0;
};

struct ReductionStep {
  int vertex = -1;               // v_i
  VertexSet deleted_leaves = 0;  // N(v_i) ∩ L(F_{i-1}) ∖ A
  VertexSet forest_after = 0;    // F_i
};

struct ReductionTrace {
  VertexSet initial = 0;  // F_0
  std::vector<ReductionStep> steps;

  VertexSet final_mask() const {
    return steps.empty() ? initial : steps.back().forest_after;
  }
};

// Applies F_i = F_{i-1} − ({v_i} ∪ (N(v_i) ∩ L(F_{i-1}) ∖ A)) step by step,
// starting from the induced forest on `start`. Throws when a sequence vertex
// is absent from the current forest (the message names the step).
ReductionTrace forest_after(const Graph& g, VertexSet start,
                            const AdmissibleSequence& seq);
ReductionTrace forest_after(const Graph& g, const AdmissibleSequence& seq);

// True iff every v_i has exactly b leaf neighbors outside A in F_{i-1}.
bool is_admissible(const Graph& g, const AdmissibleSequence& seq, int b);
bool is_admissible(const Graph& g, VertexSet start, const AdmissibleSequence& seq,
                   int b);

struct ProblematicWitness {
  AdmissibleSequence seq;
  int exposed = -1;  // vertex u with >= b+1 deletable leaves after the sequence

  std::string to_string() const;  // "v_1 v_2 ... | u", "∅ | u" when empty
};

inline constexpr int kGoodnessCap = 16;

// Depth-first search over admissible extensions for a sequence exposing a
// vertex with >= b+1 leaf neighbors outside A. Returns the first witness in
// ascending-extension order, or none when the forest admits no such pair.
std::optional<ProblematicWitness> find_problematic(const Graph& g, VertexSet start,
                                                   VertexSet exclusion, int b,
                                                   int cap = kGoodnessCap);
std::optional<ProblematicWitness> find_problematic(const Graph& g,
                                                   VertexSet exclusion, int b,
                                                   int cap = kGoodnessCap);

bool is_b_good(const Graph& g, int b, int cap = kGoodnessCap);

// Repeatedly deletes the lowest vertex having exactly b leaf neighbors,
// together with those leaves, until no vertex has exactly b of them.
VertexSet greedy_reduction_mask(const Graph& g, int b);
Forest greedy_reduction(const Forest& t, int b);  // relabeled result

// Smallest exclusion set (ties lexicographic) of size at most b whose
// restricted game the first-moving Dominator wins, or none.
std::optional<VertexSet> dominator_first_set(const Graph& g, int b,
                                             int cap = kGoodnessCap);

}  // namespace mbd
