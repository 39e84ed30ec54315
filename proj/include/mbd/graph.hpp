#pragma once
// Undirected simple graphs with small-graph bitmask support, plus the tree
// machinery the domination-game suites share: graph powers, domination
// checks, pendant-path reduction, leaf matching, canonical tree codes, and
// text-format serialization.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mbd {

// Vertex subsets of graphs with at most 64 vertices, bit i <=> vertex i.
using VertexSet = std::uint64_t;

constexpr int kMaxMaskVertices = 64;

inline VertexSet vbit(int v) { return VertexSet{1} << v; }
inline bool vin(VertexSet s, int v) { return (s >> v) & VertexSet{1}; }
int set_size(VertexSet s);
int lowest_vertex(VertexSet s);  // -1 when empty
std::vector<int> set_vertices(VertexSet s);
VertexSet make_set(const std::vector<int>& vs);
std::string set_to_string(VertexSet s);  // "{0,2,5}"

// Raised when an operation is asked to exceed its configured size cap.
class CapExceededError : public std::runtime_error {
 public:
  explicit CapExceededError(const std::string& what) : std::runtime_error(what) {}
};

class Graph {
 public:
  explicit Graph(int n);

  int vertex_count() const { return n_; }
  int edge_count() const { return m_; }
  void add_edge(int u, int v);  // throws std::invalid_argument on loops/dupes/range
  bool has_edge(int u, int v) const;
  const std::vector<int>& neighbors(int v) const;
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  int min_degree() const;

  bool mask_supported() const { return n_ <= kMaxMaskVertices; }
  VertexSet neighbor_mask(int v) const;         // open neighborhood
  VertexSet closed_neighbor_mask(int v) const;  // N[v]
  VertexSet full_mask() const;

  std::vector<int> bfs_distances(int src) const;  // -1 for unreachable

  bool operator==(const Graph& other) const;

 private:
  void check_vertex(int v) const;
  int n_;
  int m_ = 0;
  std::vector<std::vector<int>> adj_;  // sorted ascending
  std::vector<VertexSet> nmask_;       // maintained while n_ <= 64
};

// k-th graph power: edge uv whenever 0 < dist(u,v) <= k.
Graph power(const Graph& g, int k);

bool is_connected(const Graph& g);
bool is_forest_graph(const Graph& g);
bool is_tree_graph(const Graph& g);

// N[s]: s together with everything adjacent to it. Requires mask support.
VertexSet dominated_mask(const Graph& g, VertexSet s);
bool is_dominating(const Graph& g, VertexSet s);

// Exact domination number by subset search in increasing size.
int domination_number(const Graph& g, int cap = 20);
// Lexicographically-smallest minimum dominating set.
VertexSet minimum_dominating_set(const Graph& g, int cap = 20);

// A graph validated to be acyclic. Component ids are assigned by lowest
// contained vertex, in ascending order.
class Forest {
 public:
  explicit Forest(Graph g);  // throws std::invalid_argument if g has a cycle
  const Graph& graph() const { return g_; }
  int vertex_count() const { return g_.vertex_count(); }
  bool is_tree() const { return ncomp_ == 1 && g_.vertex_count() >= 1; }
  int component_count() const { return ncomp_; }
  const std::vector<int>& component_ids() const { return comp_; }
  std::vector<int> leaves() const;  // degree-1 vertices, ascending

 private:
  Graph g_;
  std::vector<int> comp_;
  int ncomp_;
};

// Helpers on induced subgraphs given as vertex masks of a host graph.
int mask_degree(const Graph& g, VertexSet mask, int v);
VertexSet mask_leaves(const Graph& g, VertexSet mask);  // degree exactly 1 within mask
std::vector<VertexSet> mask_components(const Graph& g, VertexSet mask);
// Relabels mask vertices to 0..|mask|-1 preserving ascending order; if
// old_ids is non-null it receives the sorted original ids.
Graph induced_subgraph(const Graph& g, VertexSet mask, std::vector<int>* old_ids = nullptr);

// Pendant-path reduction: repeatedly delete a leaf u whose unique neighbor
// has degree exactly 2, together with that neighbor. Candidate leaves are
// processed in ascending vertex id order; leaf_priority (a permutation of
// 0..n-1, smaller rank first) overrides that order for invariance tests.
VertexSet residual_mask(const Graph& tree, const std::vector<int>* leaf_priority = nullptr);
Forest residual(const Forest& t);  // relabeled induced result

// Trees have at most one perfect matching; greedy leaf matching decides it.
bool tree_has_perfect_matching(const Forest& t);

// Canonical codes (isomorphism invariants) for trees/forests given as masks.
std::string tree_canonical_code(const Graph& g, VertexSet mask);
std::string forest_canonical_code(const Graph& g, VertexSet mask);

// One representative per isomorphism class of trees on n vertices.
std::vector<Forest> enumerate_trees(int n, int cap = 12);

// Text format: '#' comments and blank lines ignored; first data line "n m";
// then m lines "u v" with 0 <= u < v < n.
class GraphParseError : public std::runtime_error {
 public:
  GraphParseError(int line, const std::string& msg);
  int line() const { return line_; }

 private:
  int line_;
};

Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Graph& g, const std::string& comment = "");

}  // namespace mbd
