#include <set>
#include <stdexcept>
#include <vector>

#include "mbd/graph.hpp"

namespace mbd {

namespace {

// Advances a canonical rooted level sequence to its lexicographic
// predecessor. Returns false from the final sequence [1,2,2,...,2].
bool next_level_sequence(std::vector<int>& lv) {
  int n = static_cast<int>(lv.size());
  int p = -1;
  for (int i = n - 1; i >= 0; --i) {
    if (lv[i] > 2) {
      p = i;
      break;
    }
  }
  if (p < 0) return false;
  int q = -1;
  for (int i = p - 1; i >= 0; --i) {
    if (lv[i] == lv[p] - 1) {
      q = i;
      break;
    }
  }
  for (int i = p; i < n; ++i) lv[i] = lv[i - (p - q)];
  return true;
}

Graph tree_from_levels(const std::vector<int>& lv) {
  int n = static_cast<int>(lv.size());
  Graph g(n);
  for (int i = 1; i < n; ++i) {
    for (int j = i - 1; j >= 0; --j) {
      if (lv[j] == lv[i] - 1) {
        g.add_edge(j, i);
        break;
      }
    }
  }
  return g;
}

}  // namespace

std::vector<Forest> enumerate_trees(int n, int cap) {
  if (n < 1) throw std::invalid_argument("enumerate_trees: n >= 1 required");
  if (n > cap) throw CapExceededError("enumerate_trees: n exceeds cap");
  std::vector<Forest> out;
  if (n == 1) {
    out.emplace_back(Graph(1));
    return out;
  }
  std::vector<int> lv(n);
  for (int i = 0; i < n; ++i) lv[i] = i + 1;
  std::set<std::string> seen;
  do {
    Graph g = tree_from_levels(lv);
    std::string code = tree_canonical_code(g, g.full_mask());
    if (seen.insert(code).second) out.emplace_back(std::move(g));
  } while (next_level_sequence(lv));
  return out;
}

}  // namespace mbd
