#include "mbd/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace mbd {

int set_size(VertexSet s) { return std::popcount(s); }

int lowest_vertex(VertexSet s) {
  if (s == 0) return -1;
  return std::countr_zero(s);
}

std::vector<int> set_vertices(VertexSet s) {
  std::vector<int> out;
  while (s) {
    int v = std::countr_zero(s);
    out.push_back(v);
    s &= s - 1;
  }
  return out;
}

VertexSet make_set(const std::vector<int>& vs) {
  VertexSet s = 0;
  for (int v : vs) s |= vbit(v);
  return s;
}

std::string set_to_string(VertexSet s) {
  std::string out = "{";
  bool first = true;
  for (int v : set_vertices(s)) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

Graph::Graph(int n) : n_(n), adj_(n) {
  if (n < 0) throw std::invalid_argument("graph: vertex count must be nonnegative");
  if (mask_supported()) nmask_.assign(n, 0);
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw std::invalid_argument("graph: vertex out of range");
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("graph: self-loops not allowed");
  if (has_edge(u, v)) throw std::invalid_argument("graph: duplicate edge");
  auto insert_sorted = [](std::vector<int>& vec, int x) {
    vec.insert(std::lower_bound(vec.begin(), vec.end(), x), x);
  };
  insert_sorted(adj_[u], v);
  insert_sorted(adj_[v], u);
  if (mask_supported()) {
    nmask_[u] |= vbit(v);
    nmask_[v] |= vbit(u);
  }
  ++m_;
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

const std::vector<int>& Graph::neighbors(int v) const {
  check_vertex(v);
  return adj_[v];
}

int Graph::min_degree() const {
  int d = n_ == 0 ? 0 : degree(0);
  for (int v = 1; v < n_; ++v) d = std::min(d, degree(v));
  return d;
}

VertexSet Graph::neighbor_mask(int v) const {
  check_vertex(v);
  if (!mask_supported()) throw CapExceededError("graph: bitmask operations need n <= 64");
  return nmask_[v];
}

VertexSet Graph::closed_neighbor_mask(int v) const { return neighbor_mask(v) | vbit(v); }

VertexSet Graph::full_mask() const {
  if (!mask_supported()) throw CapExceededError("graph: bitmask operations need n <= 64");
  if (n_ == kMaxMaskVertices) return ~VertexSet{0};
  return (VertexSet{1} << n_) - 1;
}

std::vector<int> Graph::bfs_distances(int src) const {
  check_vertex(src);
  std::vector<int> dist(n_, -1);
  std::deque<int> queue{src};
  dist[src] = 0;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int w : adj_[v]) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

bool Graph::operator==(const Graph& other) const {
  return n_ == other.n_ && adj_ == other.adj_;
}

Graph power(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("power: k must be >= 1");
  Graph out(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) {
    std::vector<int> dist = g.bfs_distances(v);
    for (int w = v + 1; w < g.vertex_count(); ++w) {
      if (dist[w] > 0 && dist[w] <= k) out.add_edge(v, w);
    }
  }
  return out;
}

bool is_connected(const Graph& g) {
  if (g.vertex_count() <= 1) return true;
  std::vector<int> dist = g.bfs_distances(0);
  return std::all_of(dist.begin(), dist.end(), [](int d) { return d >= 0; });
}

bool is_forest_graph(const Graph& g) {
  // A forest has exactly n - c edges where c counts components.
  int n = g.vertex_count();
  std::vector<int> seen(n, 0);
  int comps = 0;
  for (int v = 0; v < n; ++v) {
    if (seen[v]) continue;
    ++comps;
    std::deque<int> queue{v};
    seen[v] = 1;
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      for (int w : g.neighbors(x)) {
        if (!seen[w]) {
          seen[w] = 1;
          queue.push_back(w);
        }
      }
    }
  }
  return g.edge_count() == n - comps;
}

bool is_tree_graph(const Graph& g) {
  return g.vertex_count() >= 1 && is_connected(g) && g.edge_count() == g.vertex_count() - 1;
}

VertexSet dominated_mask(const Graph& g, VertexSet s) {
  VertexSet out = s;
  VertexSet rest = s;
  while (rest) {
    int v = std::countr_zero(rest);
    rest &= rest - 1;
    out |= g.neighbor_mask(v);
  }
  return out;
}

bool is_dominating(const Graph& g, VertexSet s) {
  return dominated_mask(g, s) == g.full_mask();
}

namespace {

// Enumerates size-r subsets of items in lexicographic order of the sorted
// vertex tuples; visit returns true to stop early.
template <typename Visit>
bool for_each_combination(const std::vector<int>& items, int r, const Visit& visit) {
  int n = static_cast<int>(items.size());
  if (r > n) return false;
  std::vector<int> idx(r);
  for (int i = 0; i < r; ++i) idx[i] = i;
  while (true) {
    VertexSet s = 0;
    for (int i : idx) s |= vbit(items[i]);
    if (visit(s)) return true;
    int i = r - 1;
    while (i >= 0 && idx[i] == n - r + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

int domination_number(const Graph& g, int cap) {
  return set_size(minimum_dominating_set(g, cap));
}

VertexSet minimum_dominating_set(const Graph& g, int cap) {
  int n = g.vertex_count();
  if (n == 0) return 0;
  if (n > cap) throw CapExceededError("domination_number: n exceeds cap");
  std::vector<int> all(n);
  for (int v = 0; v < n; ++v) all[v] = v;
  for (int r = 1; r <= n; ++r) {
    VertexSet found = 0;
    bool ok = for_each_combination(all, r, [&](VertexSet s) {
      if (is_dominating(g, s)) {
        found = s;
        return true;
      }
      return false;
    });
    if (ok) return found;
  }
  throw std::logic_error("domination: unreachable");
}

Forest::Forest(Graph g) : g_(std::move(g)) {
  if (!is_forest_graph(g_)) throw std::invalid_argument("forest: graph contains a cycle");
  int n = g_.vertex_count();
  comp_.assign(n, -1);
  ncomp_ = 0;
  for (int v = 0; v < n; ++v) {
    if (comp_[v] >= 0) continue;
    std::deque<int> queue{v};
    comp_[v] = ncomp_;
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      for (int w : g_.neighbors(x)) {
        if (comp_[w] < 0) {
          comp_[w] = ncomp_;
          queue.push_back(w);
        }
      }
    }
    ++ncomp_;
  }
}

std::vector<int> Forest::leaves() const {
  std::vector<int> out;
  for (int v = 0; v < g_.vertex_count(); ++v) {
    if (g_.degree(v) == 1) out.push_back(v);
  }
  return out;
}

int mask_degree(const Graph& g, VertexSet mask, int v) {
  return set_size(g.neighbor_mask(v) & mask);
}

VertexSet mask_leaves(const Graph& g, VertexSet mask) {
  VertexSet out = 0;
  VertexSet rest = mask;
  while (rest) {
    int v = std::countr_zero(rest);
    rest &= rest - 1;
    if (mask_degree(g, mask, v) == 1) out |= vbit(v);
  }
  return out;
}

std::vector<VertexSet> mask_components(const Graph& g, VertexSet mask) {
  std::vector<VertexSet> out;
  VertexSet todo = mask;
  while (todo) {
    int seed = std::countr_zero(todo);
    VertexSet comp = vbit(seed);
    VertexSet frontier = comp;
    while (frontier) {
      VertexSet next = 0;
      VertexSet rest = frontier;
      while (rest) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        next |= g.neighbor_mask(v) & mask & ~comp;
      }
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    todo &= ~comp;
  }
  return out;
}

Graph induced_subgraph(const Graph& g, VertexSet mask, std::vector<int>* old_ids) {
  std::vector<int> ids = set_vertices(mask);
  std::vector<int> to_new(g.vertex_count(), -1);
  for (int i = 0; i < static_cast<int>(ids.size()); ++i) to_new[ids[i]] = i;
  Graph out(static_cast<int>(ids.size()));
  for (int i = 0; i < static_cast<int>(ids.size()); ++i) {
    for (int w : g.neighbors(ids[i])) {
      if (to_new[w] > i) out.add_edge(i, to_new[w]);
    }
  }
  if (old_ids) *old_ids = std::move(ids);
  return out;
}

VertexSet residual_mask(const Graph& tree, const std::vector<int>* leaf_priority) {
  if (!is_tree_graph(tree)) throw std::invalid_argument("residual: input must be a tree");
  VertexSet mask = tree.full_mask();
  while (true) {
    int best = -1;
    VertexSet rest = mask;
    while (rest) {
      int u = std::countr_zero(rest);
      rest &= rest - 1;
      if (mask_degree(tree, mask, u) != 1) continue;
      int nb = lowest_vertex(tree.neighbor_mask(u) & mask);
      if (mask_degree(tree, mask, nb) != 2) continue;
      if (best < 0) {
        best = u;
      } else if (leaf_priority && (*leaf_priority)[u] < (*leaf_priority)[best]) {
        best = u;
      }
      if (!leaf_priority) break;  // ascending order: first hit wins
    }
    if (best < 0) return mask;
    int nb = lowest_vertex(tree.neighbor_mask(best) & mask);
    mask &= ~(vbit(best) | vbit(nb));
  }
}

Forest residual(const Forest& t) {
  if (!t.is_tree()) throw std::invalid_argument("residual: input must be a tree");
  VertexSet mask = residual_mask(t.graph());
  return Forest(induced_subgraph(t.graph(), mask));
}

bool tree_has_perfect_matching(const Forest& t) {
  const Graph& g = t.graph();
  if (g.vertex_count() > kMaxMaskVertices)
    throw CapExceededError("tree_has_perfect_matching: n exceeds 64");
  VertexSet mask = g.full_mask();
  while (mask) {
    int leaf = -1;
    VertexSet rest = mask;
    while (rest) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      int d = mask_degree(g, mask, v);
      if (d == 0) return false;  // isolated vertex can never be matched
      if (d == 1 && leaf < 0) leaf = v;
    }
    if (leaf < 0) return false;
    int nb = lowest_vertex(g.neighbor_mask(leaf) & mask);
    mask &= ~(vbit(leaf) | vbit(nb));
  }
  return true;
}

namespace {

std::string ahu_code(const Graph& g, VertexSet mask, int root, int parent) {
  std::vector<std::string> child_codes;
  for (int w : g.neighbors(root)) {
    if (w != parent && vin(mask, w)) child_codes.push_back(ahu_code(g, mask, w, root));
  }
  std::sort(child_codes.begin(), child_codes.end());
  std::string out = "(";
  for (const auto& c : child_codes) out += c;
  return out + ")";
}

// Centers of the tree induced on mask: peel leaf layers until <= 2 remain.
std::vector<int> tree_centers(const Graph& g, VertexSet mask) {
  VertexSet cur = mask;
  while (set_size(cur) > 2) {
    VertexSet leaves = mask_leaves(g, cur);
    cur &= ~leaves;
  }
  return set_vertices(cur);
}

}  // namespace

std::string tree_canonical_code(const Graph& g, VertexSet mask) {
  if (mask == 0) throw std::invalid_argument("tree_canonical_code: empty mask");
  std::string best;
  for (int c : tree_centers(g, mask)) {
    std::string code = ahu_code(g, mask, c, -1);
    if (best.empty() || code < best) best = code;
  }
  return best;
}

std::string forest_canonical_code(const Graph& g, VertexSet mask) {
  std::vector<std::string> codes;
  for (VertexSet comp : mask_components(g, mask)) {
    codes.push_back(tree_canonical_code(g, comp));
  }
  std::sort(codes.begin(), codes.end());
  std::string out;
  for (const auto& c : codes) out += c;
  return out;
}

GraphParseError::GraphParseError(int line, const std::string& msg)
    : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line) {}

Graph read_graph(std::istream& in) {
  std::string line;
  int lineno = 0;
  int n = -1, m = -1;
  int edges_read = 0;
  std::optional<Graph> g;
  while (std::getline(in, line)) {
    ++lineno;
    std::string data = line.substr(0, line.find('#'));
    std::istringstream ss(data);
    if (data.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (n < 0) {
      if (!(ss >> n >> m) || n < 0 || m < 0)
        throw GraphParseError(lineno, "expected header 'n m'");
      std::string extra;
      if (ss >> extra) throw GraphParseError(lineno, "trailing tokens after header");
      g.emplace(n);
      continue;
    }
    if (edges_read == m) throw GraphParseError(lineno, "more edge lines than declared");
    int u, v;
    if (!(ss >> u >> v)) throw GraphParseError(lineno, "expected edge 'u v'");
    std::string extra;
    if (ss >> extra) throw GraphParseError(lineno, "trailing tokens after edge");
    if (!(0 <= u && u < v && v < n))
      throw GraphParseError(lineno, "edge must satisfy 0 <= u < v < n");
    try {
      g->add_edge(u, v);
    } catch (const std::invalid_argument& e) {
      throw GraphParseError(lineno, e.what());
    }
    ++edges_read;
  }
  if (n < 0) throw GraphParseError(lineno, "missing header 'n m'");
  if (edges_read != m) throw GraphParseError(lineno, "fewer edge lines than declared");
  return *g;
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file: " + path);
  return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g, const std::string& comment) {
  if (!comment.empty()) out << "# " << comment << "\n";
  out << g.vertex_count() << " " << g.edge_count() << "\n";
  for (int u = 0; u < g.vertex_count(); ++u) {
    for (int v : g.neighbors(u)) {
      if (u < v) out << u << " " << v << "\n";
    }
  }
}

}  // namespace mbd
