#include "mbd/formulas.hpp"

#include <cmath>
#include <stdexcept>

namespace mbd {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

// True when the induced subgraph on `mask` is a star with at least one edge;
// stores the edge count.
bool induced_is_star(const Graph& g, VertexSet mask, int* edges) {
  const int m = set_size(mask);
  if (m < 2) return false;
  int centers = 0;
  int leaves = 0;
  for (int v : set_vertices(mask)) {
    const int d = mask_degree(g, mask, v);
    if (d == m - 1) {
      ++centers;
    } else if (d == 1) {
      ++leaves;
    } else {
      return false;
    }
  }
  // m == 2 counts both endpoints as centers of degree 1.
  if (m == 2) {
    *edges = 1;
    return true;
  }
  if (centers != 1 || leaves != m - 1) return false;
  *edges = m - 1;
  return true;
}

}  // namespace

int gamma_power(int n, int k, int b, BoardKind kind) {
  require(k >= 1 && b >= 1, "power value needs k >= 1 and b >= 1");
  require(k <= n && b <= n, "power value needs k <= n and b <= n");
  if (kind == BoardKind::Path) {
    require(n >= 2, "path power value needs n >= 2");
  } else {
    require(n >= 3, "cycle power value needs n >= 3");
  }
  const long long big_n = static_cast<long long>(b) * (2LL * k + 1) - 1;
  return static_cast<int>(ceil_div(n - 1, big_n));
}

GameValue gamma_tree_b1(const Graph& tree, Player first) {
  require(is_tree_graph(tree), "tree value needs a tree");
  const int n = tree.vertex_count();
  require(n >= 2, "tree value needs at least two vertices");
  const bool matched = tree_has_perfect_matching(Forest(tree));
  if (first == Player::Staller) {
    return matched ? GameValue::finite(n / 2) : GameValue::infinity();
  }
  if (matched) return GameValue::finite(n / 2);
  const VertexSet res = residual_mask(tree);
  if (set_size(res) == 1) return GameValue::finite((n - 1) / 2);
  int edges = 0;
  if (induced_is_star(tree, res, &edges) && edges >= 3) {
    return GameValue::finite((n - edges + 1) / 2);
  }
  return GameValue::infinity();
}

GameValue gamma_cycle_b1(int n, Player) {
  require(n >= 3, "cycle value needs n >= 3");
  return GameValue::finite(n / 2);
}

int f_of_b(int b) {
  require(b >= 1, "f(b) needs b >= 1");
  return (b / 2 + 1) * ((b + 1) / 2 + 1);
}

int gamma_tkb(int k, int b) {
  require(b >= 2, "star chain value needs b >= 2");
  require(k >= 2, "star chain value needs k >= 2");
  return static_cast<int>(ceil_div(k, f_of_b(b)));
}

int gamma_ts(int n, int b, int s) {
  require(b >= 2, "forcing chain value needs b >= 2");
  require(s >= 0, "forcing chain value needs s >= 0");
  const long long k = static_cast<long long>(n) - static_cast<long long>(s) * (b + 1);
  require(k >= 2, "forcing chain value needs a residual star chain on k >= 2");
  return static_cast<int>(s + ceil_div(k, f_of_b(b)));
}

BoundReport tree_gamma_bounds(int n, int b) {
  require(n >= 1 && b >= 1, "tree bounds need n >= 1 and b >= 1");
  BoundReport report;
  report.lower = static_cast<int>(ceil_div(n, static_cast<long long>(b) * (b + 3)));
  report.upper = static_cast<int>(ceil_div(n, b + 1));
  report.source = "staller-first tree bounds";
  return report;
}

int fraction_bound(int n, int b) {
  require(n >= 0 && b >= 1, "fraction bound needs n >= 0 and b >= 1");
  const long long dd = static_cast<long long>(b + 1) * (b + 1);
  return static_cast<int>(n - n / dd);
}

double mindeg_win_threshold(int n, int b) {
  require(n >= 1 && b >= 1, "threshold needs n >= 1 and b >= 1");
  return std::log(static_cast<double>(n)) / std::log(static_cast<double>(b + 1)) -
         1.0;
}

bool mindeg_condition_holds(int n, int delta, int b) {
  require(n >= 1 && delta >= 0 && b >= 1, "condition needs valid n, delta, b");
  long long acc = 1;
  for (int i = 0; i <= delta; ++i) {
    acc *= b + 1;
    if (acc > n) return true;
  }
  return acc > n;
}

int dense_round_bound(int n, int delta, int b) {
  require(n >= 1 && delta >= 1 && b >= 1, "round bound needs n, delta, b >= 1");
  const double raw = 10.0 * n * std::log(static_cast<double>(n)) /
                     (static_cast<double>(b) * delta);
  return static_cast<int>(std::ceil(raw));
}

}  // namespace mbd
