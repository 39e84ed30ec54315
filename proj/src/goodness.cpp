#include "mbd/goodness.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace mbd {

namespace {

VertexSet deletable_leaves(const Graph& g, VertexSet mask, VertexSet exclusion,
                           int v) {
  return g.neighbor_mask(v) & mask_leaves(g, mask) & ~exclusion;
}

}  // namespace

ReductionTrace forest_after(const Graph& g, VertexSet start,
                            const AdmissibleSequence& seq) {
  ReductionTrace trace;
  trace.initial = start;
  VertexSet mask = start;
  for (size_t i = 0; i < seq.vertices.size(); ++i) {
    const int v = seq.vertices[i];
    if (v < 0 || v >= g.vertex_count() || !vin(mask, v)) {
      throw std::invalid_argument("reduction step " + std::to_string(i + 1) +
                                  ": vertex " + std::to_string(v) +
                                  " is not in the current forest");
    }
    if (vin(seq.exclusion, v)) {
      throw std::invalid_argument("reduction step " + std::to_string(i + 1) +
                                  ": vertex " + std::to_string(v) +
                                  " is excluded");
    }
    ReductionStep step;
    step.vertex = v;
    step.deleted_leaves = deletable_leaves(g, mask, seq.exclusion, v);
    mask &= ~(vbit(v) | step.deleted_leaves);
    step.forest_after = mask;
    trace.steps.push_back(step);
  }
  return trace;
}

ReductionTrace forest_after(const Graph& g, const AdmissibleSequence& seq) {
  return forest_after(g, g.full_mask(), seq);
}

bool is_admissible(const Graph& g, VertexSet start, const AdmissibleSequence& seq,
                   int b) {
  VertexSet mask = start;
  for (int v : seq.vertices) {
    if (v < 0 || v >= g.vertex_count()) return false;
    if (!vin(mask, v) || vin(seq.exclusion, v)) return false;
    const VertexSet del = deletable_leaves(g, mask, seq.exclusion, v);
    if (set_size(del) != b) return false;
    mask &= ~(vbit(v) | del);
  }
  return true;
}

bool is_admissible(const Graph& g, const AdmissibleSequence& seq, int b) {
  return is_admissible(g, g.full_mask(), seq, b);
}

std::string ProblematicWitness::to_string() const {
  std::ostringstream out;
  if (seq.vertices.empty()) {
    out << "∅";
  } else {
    for (size_t i = 0; i < seq.vertices.size(); ++i) {
      if (i) out << ' ';
      out << seq.vertices[i];
    }
  }
  out << " | " << exposed;
  return out.str();
}

namespace {

struct WitnessSearch {
  const Graph& g;
  VertexSet exclusion;
  int bias;
  std::unordered_set<VertexSet> seen;
  std::vector<int> path;

  std::optional<ProblematicWitness> run(VertexSet mask) {
    if (!seen.insert(mask).second) return std::nullopt;
    const VertexSet leaves = mask_leaves(g, mask);
    for (int u : set_vertices(mask & ~exclusion)) {
      const int exposed = set_size(g.neighbor_mask(u) & leaves & ~exclusion);
      if (exposed >= bias + 1) {
        ProblematicWitness w;
        w.seq.vertices = path;
        w.seq.exclusion = exclusion;
        w.exposed = u;
        return w;
      }
    }
    for (int v : set_vertices(mask & ~exclusion)) {
      const VertexSet del = g.neighbor_mask(v) & leaves & ~exclusion;
      if (set_size(del) != bias) continue;
      path.push_back(v);
      auto found = run(mask & ~(vbit(v) | del));
      if (found) return found;
      path.pop_back();
    }
    return std::nullopt;
  }
};

}  // namespace

std::optional<ProblematicWitness> find_problematic(const Graph& g, VertexSet start,
                                                   VertexSet exclusion, int b,
                                                   int cap) {
  if (g.vertex_count() > cap) {
    throw CapExceededError("witness search on " +
                           std::to_string(g.vertex_count()) +
                           " vertices exceeds cap " + std::to_string(cap));
  }
  if (b < 1) throw std::invalid_argument("bias must be at least 1");
  if (!is_forest_graph(g)) {
    throw std::invalid_argument("witness search requires a forest");
  }
  WitnessSearch search{g, exclusion & start, b, {}, {}};
  return search.run(start);
}

std::optional<ProblematicWitness> find_problematic(const Graph& g,
                                                   VertexSet exclusion, int b,
                                                   int cap) {
  return find_problematic(g, g.full_mask(), exclusion, b, cap);
}

bool is_b_good(const Graph& g, int b, int cap) {
  return !find_problematic(g, 0, b, cap).has_value();
}

VertexSet greedy_reduction_mask(const Graph& g, int b) {
  VertexSet mask = g.full_mask();
  for (;;) {
    const VertexSet leaves = mask_leaves(g, mask);
    bool deleted = false;
    for (int v : set_vertices(mask)) {
      const VertexSet del = g.neighbor_mask(v) & leaves;
      if (set_size(del) == b) {
        mask &= ~(vbit(v) | del);
        deleted = true;
        break;
      }
    }
    if (!deleted) return mask;
  }
}

Forest greedy_reduction(const Forest& t, int b) {
  const VertexSet mask = greedy_reduction_mask(t.graph(), b);
  return Forest(induced_subgraph(t.graph(), mask));
}

std::optional<VertexSet> dominator_first_set(const Graph& g, int b, int cap) {
  const int n = g.vertex_count();
  std::vector<int> pick;
  std::optional<VertexSet> found;
  auto try_size = [&](int size, auto&& self, int next, VertexSet acc) -> bool {
    if (static_cast<int>(pick.size()) == size) {
      if (!find_problematic(g, acc, b, cap).has_value()) {
        found = acc;
        return true;
      }
      return false;
    }
    for (int v = next; v < n; ++v) {
      pick.push_back(v);
      if (self(size, self, v + 1, acc | vbit(v))) return true;
      pick.pop_back();
    }
    return false;
  };
  for (int size = 0; size <= b && size <= n; ++size) {
    pick.clear();
    if (try_size(size, try_size, 0, 0)) return found;
  }
  return std::nullopt;
}

}  // namespace mbd
