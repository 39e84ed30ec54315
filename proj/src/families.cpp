#include "mbd/families.hpp"

#include <algorithm>
#include <cstdint>

namespace mbd {

Graph make_path(int n) {
  if (n < 1) throw std::invalid_argument("path: n >= 1 required");
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph make_cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle: n >= 3 required");
  Graph g = make_path(n);
  g.add_edge(0, n - 1);
  return g;
}

Graph make_star(int k) {
  if (k < 0) throw std::invalid_argument("star: k >= 0 required");
  Graph g(k + 1);
  for (int v = 1; v <= k; ++v) g.add_edge(0, v);
  return g;
}

Graph make_path_power(int n, int k) { return power(make_path(n), k); }

Graph make_cycle_power(int n, int k) { return power(make_cycle(n), k); }

StarChainLayout star_chain_layout(int k, int b) {
  if (k < 1) throw std::invalid_argument("star chain: k >= 1 required");
  if (b < 2) throw std::invalid_argument("star chain: b >= 2 required");
  StarChainLayout lay;
  lay.k = k;
  lay.b = b;
  lay.x = (b + 1) / 2;
  lay.q = (k + lay.x) / (lay.x + 1);
  lay.r = k - (lay.q - 1) * (lay.x + 1);
  lay.merged_last = (lay.r == 1 && lay.q >= 2);
  std::vector<int> edge_counts;  // per original star
  for (int i = 0; i + 1 < lay.q; ++i) edge_counts.push_back(lay.x);
  edge_counts.push_back(lay.r - 1);
  int id = 0;
  std::vector<int> raw_centers;
  std::vector<std::vector<int>> raw_leaves;
  for (int e : edge_counts) {
    raw_centers.push_back(id++);
    std::vector<int> leaves;
    for (int j = 0; j < e; ++j) leaves.push_back(id++);
    raw_leaves.push_back(std::move(leaves));
  }
  if (lay.merged_last) {
    // The lone last center becomes an extra leaf of the previous star.
    int lone = raw_centers.back();
    raw_centers.pop_back();
    raw_leaves.pop_back();
    raw_leaves.back().push_back(lone);
  }
  lay.centers = std::move(raw_centers);
  lay.star_leaves = std::move(raw_leaves);
  return lay;
}

Graph make_tkb(int k, int b) {
  StarChainLayout lay = star_chain_layout(k, b);
  Graph g(k);
  // Edges follow the unmerged description: all q centers pathed, then leaves.
  int id = 0;
  std::vector<int> centers_raw;
  for (int i = 0; i < lay.q; ++i) {
    int e = (i + 1 < lay.q) ? lay.x : lay.r - 1;
    centers_raw.push_back(id);
    for (int j = 1; j <= e; ++j) g.add_edge(id, id + j);
    id += 1 + e;
  }
  for (size_t i = 0; i + 1 < centers_raw.size(); ++i)
    g.add_edge(centers_raw[i], centers_raw[i + 1]);
  return g;
}

ForcingChainLayout forcing_chain_layout(int n, int b, int s) {
  if (b < 2) throw std::invalid_argument("forcing chain: b >= 2 required");
  if (s < 0 || s > n / (b + 1))
    throw std::invalid_argument("forcing chain: 0 <= s <= n/(b+1) required");
  ForcingChainLayout lay;
  lay.n = n;
  lay.b = b;
  lay.s = s;
  lay.k = n - s * (b + 1);
  if (lay.k < 1) throw std::invalid_argument("forcing chain: residual must be nonempty");
  int id = 0;
  for (int i = 0; i < s; ++i) {
    lay.chain_centers.push_back(id++);
    std::vector<int> leaves;
    for (int j = 0; j < b; ++j) leaves.push_back(id++);
    lay.chain_leaves.push_back(std::move(leaves));
  }
  lay.residual_offset = id;
  return lay;
}

Graph make_ts(int n, int b, int s) {
  ForcingChainLayout lay = forcing_chain_layout(n, b, s);
  if (s == 0) return make_tkb(n, b);
  Graph g(n);
  for (int i = 0; i < s; ++i) {
    for (int leaf : lay.chain_leaves[i]) g.add_edge(lay.chain_centers[i], leaf);
    if (i + 1 < s) g.add_edge(lay.chain_centers[i], lay.chain_centers[i + 1]);
  }
  Graph tail = make_tkb(lay.k, b);
  for (int u = 0; u < lay.k; ++u) {
    for (int v : tail.neighbors(u)) {
      if (u < v) g.add_edge(lay.residual_offset + u, lay.residual_offset + v);
    }
  }
  g.add_edge(lay.chain_centers[s - 1], lay.residual_offset);  // first star center
  return g;
}

Graph make_star_path(int n, int b, int t) {
  if (b < 1 || t < 1) throw std::invalid_argument("star path: b >= 1, t >= 1 required");
  if (t * (b + 1) > n)
    throw std::invalid_argument("star path: t <= n/(b+1) required");
  Graph g(n);
  int id = 0;
  std::vector<int> centers;
  for (int i = 0; i < t; ++i) {
    int size = (i + 1 < t) ? b + 1 : n - (t - 1) * (b + 1);  // last star absorbs remainder
    centers.push_back(id);
    for (int j = 1; j < size; ++j) g.add_edge(id, id + j);
    id += size;
  }
  for (size_t i = 0; i + 1 < centers.size(); ++i) g.add_edge(centers[i], centers[i + 1]);
  return g;
}

Graph make_fraction_sharp(int n, int b) {
  if (b < 1) throw std::invalid_argument("fraction sharp: b >= 1 required");
  if (n < 2 * (b + 1))
    throw std::invalid_argument("fraction sharp: n >= 2(b+1) required");
  Graph g(n);
  int stars = b + 1;
  int id = 0;
  std::vector<int> centers;
  for (int i = 0; i < stars; ++i) {
    int size = n / stars + (i < n % stars ? 1 : 0);
    centers.push_back(id);
    for (int j = 1; j < size; ++j) g.add_edge(id, id + j);
    id += size;
  }
  for (size_t i = 0; i + 1 < centers.size(); ++i) g.add_edge(centers[i], centers[i + 1]);
  return g;
}

namespace {

std::int64_t ipow(std::int64_t base, int exp) {
  std::int64_t out = 1;
  for (int i = 0; i < exp; ++i) {
    out *= base;
    if (out > (std::int64_t{1} << 40)) throw std::overflow_error("ipow: too large");
  }
  return out;
}

}  // namespace

Graph make_perfect_ary_tree(int branching, int levels) {
  if (branching < 1 || levels < 1)
    throw std::invalid_argument("ary tree: branching >= 1, levels >= 1 required");
  std::int64_t n = 0;
  for (int l = 0; l < levels; ++l) n += ipow(branching, l);
  if (n > 1 << 20) throw std::invalid_argument("ary tree: too large");
  Graph g(static_cast<int>(n));
  for (int v = 1; v < n; ++v) g.add_edge((v - 1) / branching, v);
  return g;
}

int ary_stack_vertex_count(int b, int k) {
  std::int64_t per_copy = 0;
  for (int l = 0; l <= k; ++l) per_copy += ipow(b + 1, l);
  std::int64_t n = per_copy * (b + 1);
  if (n > 1 << 20) throw std::invalid_argument("ary stack: too large");
  return static_cast<int>(n);
}

Graph make_ary_stack(int b, int k) {
  if (b < 1 || k < 1) throw std::invalid_argument("ary stack: b >= 1, k >= 1 required");
  int branching = b + 1;
  int per_copy = ary_stack_vertex_count(b, k) / (b + 1);
  Graph g(ary_stack_vertex_count(b, k));
  for (int copy = 0; copy < b + 1; ++copy) {
    int base = copy * per_copy;
    // Edge from every vertex to each proper descendant (subsumes tree edges).
    for (int v = 0; v < per_copy; ++v) {
      std::vector<int> frontier{v};
      while (!frontier.empty()) {
        std::vector<int> next;
        for (int x : frontier) {
          for (int c = branching * x + 1; c <= branching * x + branching; ++c) {
            if (c >= per_copy) break;
            g.add_edge(base + v, base + c);
            next.push_back(c);
          }
        }
        frontier = std::move(next);
      }
    }
  }
  return g;
}

Graph construct(const FamilySpec& spec) {
  using K = FamilySpec::Kind;
  switch (spec.kind) {
    case K::Path: return make_path(spec.n);
    case K::Cycle: return make_cycle(spec.n);
    case K::Star: return make_star(spec.k);
    case K::PathPower: return make_path_power(spec.n, spec.k);
    case K::CyclePower: return make_cycle_power(spec.n, spec.k);
    case K::Tkb: return make_tkb(spec.k, spec.b);
    case K::Ts: return make_ts(spec.n, spec.b, spec.s);
    case K::StarPath: return make_star_path(spec.n, spec.b, spec.t);
    case K::FractionSharp: return make_fraction_sharp(spec.n, spec.b);
    case K::PerfectAryTree: return make_perfect_ary_tree(spec.branching, spec.levels);
    case K::AryStack: return make_ary_stack(spec.b, spec.k);
  }
  throw std::logic_error("construct: unknown family");
}

namespace {
const std::vector<std::pair<std::string, FamilySpec::Kind>>& family_table() {
  static const std::vector<std::pair<std::string, FamilySpec::Kind>> table = {
      {"path", FamilySpec::Kind::Path},
      {"cycle", FamilySpec::Kind::Cycle},
      {"star", FamilySpec::Kind::Star},
      {"path-power", FamilySpec::Kind::PathPower},
      {"cycle-power", FamilySpec::Kind::CyclePower},
      {"tkb", FamilySpec::Kind::Tkb},
      {"ts", FamilySpec::Kind::Ts},
      {"star-path", FamilySpec::Kind::StarPath},
      {"fraction-sharp", FamilySpec::Kind::FractionSharp},
      {"perfect-ary-tree", FamilySpec::Kind::PerfectAryTree},
      {"ary-stack", FamilySpec::Kind::AryStack},
  };
  return table;
}
}  // namespace

FamilySpec::Kind parse_family_name(const std::string& name) {
  for (const auto& [key, kind] : family_table()) {
    if (key == name) return kind;
  }
  std::string msg = "unknown family '" + name + "'; expected one of:";
  for (const auto& [key, kind] : family_table()) msg += " " + key;
  throw std::invalid_argument(msg);
}

std::vector<std::string> family_names() {
  std::vector<std::string> out;
  for (const auto& [key, kind] : family_table()) out.push_back(key);
  return out;
}

}  // namespace mbd
