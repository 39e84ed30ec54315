#include "mbd/hypergame.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mbd {

namespace {

VertexSet full_board(const Hypergraph& h) {
  return (h.n >= 64) ? ~0ULL : ((1ULL << h.n) - 1);
}

int count_full_maker(const Hypergraph& h, VertexSet maker) {
  int count = 0;
  for (VertexSet f : h.sets) {
    if ((f & ~maker) == 0) ++count;
  }
  return count;
}

// Enumerates size-`want` subsets of `mask` in ascending lexicographic order;
// stops early when visit returns false.
template <typename Visit>
bool for_each_subset(VertexSet mask, int want, Visit&& visit) {
  std::vector<int> pool = set_vertices(mask);
  const int m = static_cast<int>(pool.size());
  if (want > m) return true;
  std::vector<int> idx(want);
  for (int i = 0; i < want; ++i) idx[i] = i;
  for (;;) {
    VertexSet subset = 0;
    for (int i : idx) subset |= vbit(pool[i]);
    if (!visit(subset)) return false;
    int pos = want - 1;
    while (pos >= 0 && idx[pos] == m - want + pos) --pos;
    if (pos < 0) return true;
    ++idx[pos];
    for (int i = pos + 1; i < want; ++i) idx[i] = idx[i - 1] + 1;
  }
}

}  // namespace

Hypergraph neighborhood_hypergraph(const Graph& g) {
  Hypergraph h;
  h.n = g.vertex_count();
  for (int v = 0; v < h.n; ++v) h.sets.push_back(g.closed_neighbor_mask(v));
  return h;
}

Hypergraph subset_neighborhood_hypergraph(const Graph& g, VertexSet subset) {
  Hypergraph h;
  h.n = g.vertex_count();
  for (int v = 0; v < h.n; ++v) h.sets.push_back(g.neighbor_mask(v) & subset);
  return h;
}

double beck_potential(const Hypergraph& h, int q, VertexSet maker,
                      VertexSet breaker) {
  double total = 0.0;
  for (VertexSet f : h.sets) {
    if (f & breaker) continue;
    total += std::pow(1.0 + q, -set_size(f & ~maker));
  }
  return total;
}

long long beck_bound(const Hypergraph& h, int q) {
  int max_size = 0;
  for (VertexSet f : h.sets) max_size = std::max(max_size, set_size(f));
  const double bits = max_size * std::log2(1.0 + q);
  if (bits <= 62.0) {
    unsigned long long scale = 1;
    for (int i = 0; i < max_size; ++i) scale *= static_cast<unsigned>(1 + q);
    unsigned long long total = 0;
    for (VertexSet f : h.sets) {
      unsigned long long w = 1;
      for (int i = 0; i < max_size - set_size(f); ++i) {
        w *= static_cast<unsigned>(1 + q);
      }
      total += w;
    }
    return static_cast<long long>(total / scale);
  }
  return static_cast<long long>(std::floor(beck_potential(h, q, 0, 0)));
}

std::vector<int> beck_breaker_claims(const Hypergraph& h, int q, VertexSet maker,
                                     VertexSet breaker) {
  if (q < 1) throw std::invalid_argument("breaker bias must be at least 1");
  std::vector<int> claims;
  VertexSet mine = breaker;
  const VertexSet full = full_board(h);
  for (int round = 0; round < q; ++round) {
    const VertexSet free = full & ~maker & ~mine;
    if (!free) break;
    int best = -1;
    double best_weight = 0.0;
    for (int v : set_vertices(free)) {
      double weight = 0.0;
      for (VertexSet f : h.sets) {
        if ((f & mine) || !vin(f, v)) continue;
        weight += std::pow(1.0 + q, -set_size(f & ~maker & ~mine));
      }
      if (weight > best_weight) {
        best_weight = weight;
        best = v;
      }
    }
    if (best < 0) best = lowest_vertex(free);
    claims.push_back(best);
    mine |= vbit(best);
  }
  return claims;
}

namespace {

int max_maker_sets_walk(const Hypergraph& h, int q, VertexSet maker,
                        VertexSet breaker, bool maker_turn) {
  const VertexSet free = full_board(h) & ~maker & ~breaker;
  if (!free) return count_full_maker(h, maker);
  if (!maker_turn) {
    VertexSet add = 0;
    for (int v : beck_breaker_claims(h, q, maker, breaker)) add |= vbit(v);
    return max_maker_sets_walk(h, q, maker, breaker | add, true);
  }
  int best = 0;
  for (int v : set_vertices(free)) {
    best = std::max(best,
                    max_maker_sets_walk(h, q, maker | vbit(v), breaker, false));
  }
  return best;
}

}  // namespace

int exhaustive_max_maker_sets(const Hypergraph& h, int q) {
  if (h.n > kMaxMaskVertices) {
    throw CapExceededError("hypergraph board exceeds the mask width");
  }
  return max_maker_sets_walk(h, q, 0, 0, false);
}

namespace {

int tree_size(int branching, int levels) {
  long long total = 0;
  long long layer = 1;
  for (int d = 0; d <= levels; ++d) {
    total += layer;
    layer *= branching;
  }
  if (total > kMaxMaskVertices) {
    throw CapExceededError("perfect tree exceeds the mask width");
  }
  return static_cast<int>(total);
}

VertexSet subtree_mask(int branching, int count, int v) {
  VertexSet mask = vbit(v);
  const long long first = static_cast<long long>(v) * branching + 1;
  if (first >= count) return mask;
  for (int c = 0; c < branching; ++c) {
    const long long child = first + c;
    if (child < count) mask |= subtree_mask(branching, count, static_cast<int>(child));
  }
  return mask;
}

}  // namespace

Hypergraph ary_root_leaf_paths(int branching, int levels) {
  if (branching < 2 || levels < 1) {
    throw std::invalid_argument("perfect tree needs branching >= 2, levels >= 1");
  }
  const int count = tree_size(branching, levels);
  int first_leaf = count;
  long long layer = 1;
  for (int d = 0; d < levels; ++d) layer *= branching;
  first_leaf = count - static_cast<int>(layer);
  Hypergraph h;
  h.n = count;
  for (int leaf = first_leaf; leaf < count; ++leaf) {
    VertexSet path = 0;
    int v = leaf;
    for (;;) {
      path |= vbit(v);
      if (v == 0) break;
      v = (v - 1) / branching;
    }
    h.sets.push_back(path);
  }
  return h;
}

std::vector<int> ary_maker_claim(int branching, int levels, VertexSet maker,
                                 VertexSet breaker) {
  const int count = tree_size(branching, levels);
  const VertexSet full = (count >= 64) ? ~0ULL : ((1ULL << count) - 1);
  const VertexSet free = full & ~maker & ~breaker;
  if (!maker) {
    if (vin(free, 0)) return {0};
    return free ? std::vector<int>{lowest_vertex(free)} : std::vector<int>{};
  }
  // Maker's claims form a root chain; descend to its end.
  int v = 0;
  if (!vin(maker, 0)) return free ? std::vector<int>{lowest_vertex(free)} : std::vector<int>{};
  for (;;) {
    const long long first = static_cast<long long>(v) * branching + 1;
    if (first >= count) break;
    int next = -1;
    for (int c = 0; c < branching; ++c) {
      const int child = static_cast<int>(first) + c;
      if (child < count && vin(maker, child)) {
        next = child;
        break;
      }
    }
    if (next < 0) break;
    v = next;
  }
  const long long first = static_cast<long long>(v) * branching + 1;
  if (first < count) {
    for (int c = 0; c < branching; ++c) {
      const int child = static_cast<int>(first) + c;
      if (child >= count) break;
      if (!vin(free, child)) continue;
      if ((subtree_mask(branching, count, child) & breaker) == 0) {
        return {child};
      }
    }
  }
  return free ? std::vector<int>{lowest_vertex(free)} : std::vector<int>{};
}

namespace {

bool maker_has_full_set(const Hypergraph& h, VertexSet maker) {
  for (VertexSet f : h.sets) {
    if ((f & ~maker) == 0) return true;
  }
  return false;
}

bool ary_walk(const Hypergraph& h, int branching, int levels, int q,
              VertexSet maker, VertexSet breaker) {
  const auto mv = ary_maker_claim(branching, levels, maker, breaker);
  if (mv.empty()) return maker_has_full_set(h, maker);
  maker |= vbit(mv.front());
  if (maker_has_full_set(h, maker)) return true;
  const VertexSet free = full_board(h) & ~maker & ~breaker;
  if (!free) return false;
  const int take = std::min(q, set_size(free));
  for (int size = 1; size <= take; ++size) {
    const bool ok = for_each_subset(free, size, [&](VertexSet s) {
      return ary_walk(h, branching, levels, q, maker, breaker | s);
    });
    if (!ok) return false;
  }
  return true;
}

}  // namespace

bool exhaustive_ary_maker_wins(int branching, int levels, int q) {
  const Hypergraph h = ary_root_leaf_paths(branching, levels);
  return ary_walk(h, branching, levels, q, 0, 0);
}

Hypergraph random_hypergraph(Rng& rng, int n, int set_count, int min_size,
                             int max_size) {
  if (n < 1 || n > kMaxMaskVertices || min_size < 1 || max_size < min_size ||
      max_size > n || set_count < 1) {
    throw std::invalid_argument("bad random hypergraph shape");
  }
  Hypergraph h;
  h.n = n;
  for (int i = 0; i < set_count; ++i) {
    const int size = min_size + rng.next_below(max_size - min_size + 1);
    VertexSet f = 0;
    while (set_size(f) < size) f |= vbit(rng.next_below(n));
    h.sets.push_back(f);
  }
  return h;
}

}  // namespace mbd
