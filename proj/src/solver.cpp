#include "mbd/solver.hpp"

#include <algorithm>

namespace mbd {

std::string to_string(const GameValue& v) {
  return v.infinite ? "infinity" : std::to_string(v.rounds);
}

int default_solver_cap(int bias) {
  if (bias <= 1) return 14;
  if (bias == 2) return 13;
  return 12;
}

namespace {

constexpr std::uint8_t kInf = 255;
constexpr int kKeyVertexBits = 20;

std::uint8_t saturating_inc(std::uint8_t v) { return v == kInf ? kInf : v + 1; }

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Open-addressing map from packed states to byte values; keys stored +1 so
// zero marks an empty slot.
class TranspositionTable {
 public:
  TranspositionTable() { rehash(1 << 16); }

  const std::uint8_t* find(std::uint64_t key) const {
    std::uint64_t stored = key + 1;
    for (std::size_t i = mix64(key) & mask_;; i = (i + 1) & mask_) {
      if (keys_[i] == 0) return nullptr;
      if (keys_[i] == stored) return &vals_[i];
    }
  }

  void insert(std::uint64_t key, std::uint8_t val) {
    if ((size_ + 1) * 10 >= keys_.size() * 7) rehash(keys_.size() * 2);
    std::uint64_t stored = key + 1;
    for (std::size_t i = mix64(key) & mask_;; i = (i + 1) & mask_) {
      if (keys_[i] == 0) {
        keys_[i] = stored;
        vals_[i] = val;
        ++size_;
        return;
      }
      if (keys_[i] == stored) {
        vals_[i] = val;
        return;
      }
    }
  }

  std::uint64_t size() const { return size_; }

 private:
  void rehash(std::size_t capacity) {
    std::vector<std::uint64_t> old_keys = std::move(keys_);
    std::vector<std::uint8_t> old_vals = std::move(vals_);
    keys_.assign(capacity, 0);
    vals_.assign(capacity, 0);
    mask_ = capacity - 1;
    size_ = 0;
    for (std::size_t i = 0; i < old_keys.size(); ++i) {
      if (old_keys[i] == 0) continue;
      std::uint64_t key = old_keys[i] - 1;
      for (std::size_t j = mix64(key) & mask_;; j = (j + 1) & mask_) {
        if (keys_[j] == 0) {
          keys_[j] = old_keys[i];
          vals_[j] = old_vals[i];
          ++size_;
          break;
        }
      }
    }
  }

  std::vector<std::uint64_t> keys_;
  std::vector<std::uint8_t> vals_;
  std::size_t mask_ = 0;
  std::uint64_t size_ = 0;
};

// Visits every size-t subset of the set vertices of `mask` in lexicographic
// order of ascending vertex tuples. Visitor returns false to stop.
template <typename F>
bool for_each_subset_of_size(VertexSet mask, int t, F&& visit) {
  std::vector<int> verts = set_vertices(mask);
  int n = static_cast<int>(verts.size());
  if (t > n || t <= 0) return true;
  std::vector<int> idx(t);
  for (int i = 0; i < t; ++i) idx[i] = i;
  while (true) {
    VertexSet sub = 0;
    for (int i : idx) sub |= vbit(verts[i]);
    if (!visit(sub)) return false;
    int i = t - 1;
    while (i >= 0 && idx[i] == n - t + i) --i;
    if (i < 0) return true;
    ++idx[i];
    for (int j = i + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
  }
}

struct SearchContext {
  const Graph& g;
  int bias;
  bool unrestricted;
  VertexSet forbidden;
  VertexSet target;
  std::vector<VertexSet> closed;  // N[v] per vertex
  TranspositionTable table;

  explicit SearchContext(const GameConfig& cfg, const SolverOptions& opts)
      : g(cfg.board),
        bias(cfg.bias),
        unrestricted(opts.unrestricted_dominator),
        forbidden(opts.rules.dominator_forbidden),
        target(target_mask(cfg, opts.rules)) {
    int n = g.vertex_count();
    closed.reserve(n);
    for (int v = 0; v < n; ++v) closed.push_back(g.closed_neighbor_mask(v));
  }

  VertexSet dominated(VertexSet dom) const {
    VertexSet out = 0;
    for (int v : set_vertices(dom)) out |= closed[v];
    return out;
  }

  bool staller_blocks(VertexSet sta) const {
    for (int v : set_vertices(target)) {
      if ((closed[v] & ~sta) == 0) return true;
    }
    return false;
  }

  std::uint64_t key(VertexSet dom, VertexSet sta, bool dom_to_move) const {
    return dom | (sta << kKeyVertexBits) |
           (std::uint64_t{dom_to_move} << (2 * kKeyVertexBits));
  }
};

// Remaining Dominator moves needed from this position under optimal play.
std::uint8_t search_rounds(SearchContext& cx, VertexSet dom, VertexSet sta,
                           bool dom_to_move) {
  if ((cx.target & ~cx.dominated(dom)) == 0) return 0;
  if (cx.staller_blocks(sta)) return kInf;
  VertexSet free = cx.g.full_mask() & ~(dom | sta);
  VertexSet legal = dom_to_move ? free & ~cx.forbidden : free;
  if (legal == 0) return kInf;

  std::uint64_t key = cx.key(dom, sta, dom_to_move);
  if (const std::uint8_t* hit = cx.table.find(key)) return *hit;

  std::uint8_t best;
  if (dom_to_move) {
    best = kInf;
    int take = std::min(cx.bias, set_size(legal));
    int lo = cx.unrestricted ? 1 : take;
    for (int t = lo; t <= take && best > 1; ++t) {
      for_each_subset_of_size(legal, t, [&](VertexSet sub) {
        std::uint8_t child = search_rounds(cx, dom | sub, sta, false);
        best = std::min(best, saturating_inc(child));
        return best > 1;
      });
    }
  } else {
    best = 0;
    for (int v : set_vertices(free)) {
      best = std::max(best, search_rounds(cx, dom, sta | vbit(v), true));
      if (best == kInf) break;
    }
  }
  cx.table.insert(key, best);
  return best;
}

void check_cap(const GameConfig& cfg, const SolverOptions& opts) {
  int cap = opts.cap > 0 ? opts.cap : default_solver_cap(cfg.bias);
  if (cap > kKeyVertexBits)
    throw std::invalid_argument("solver cap cannot exceed " +
                                std::to_string(kKeyVertexBits));
  int n = cfg.board.vertex_count();
  if (n > cap)
    throw CapExceededError("board has " + std::to_string(n) +
                           " vertices, solver cap is " + std::to_string(cap));
}

std::vector<Move> recover_pv(SearchContext& cx, const GameConfig& cfg,
                             std::uint8_t root_value) {
  std::vector<Move> pv;
  if (root_value == kInf) return pv;
  VertexSet dom = 0, sta = 0;
  bool dom_to_move = cfg.first == Player::Dominator;
  std::uint8_t need = root_value;
  while (true) {
    if ((cx.target & ~cx.dominated(dom)) == 0) break;
    VertexSet free = cx.g.full_mask() & ~(dom | sta);
    VertexSet legal = dom_to_move ? free & ~cx.forbidden : free;
    if (dom_to_move) {
      int take = std::min(cx.bias, set_size(legal));
      int lo = cx.unrestricted ? 1 : take;
      VertexSet picked = 0;
      for (int t = lo; t <= take && picked == 0; ++t) {
        for_each_subset_of_size(legal, t, [&](VertexSet sub) {
          if (saturating_inc(search_rounds(cx, dom | sub, sta, false)) == need) {
            picked = sub;
            return false;
          }
          return true;
        });
      }
      pv.push_back({Player::Dominator, set_vertices(picked)});
      dom |= picked;
      need -= 1;
    } else {
      int picked = -1;
      for (int v : set_vertices(free)) {
        if (search_rounds(cx, dom, sta | vbit(v), true) == need) {
          picked = v;
          break;
        }
      }
      pv.push_back({Player::Staller, {picked}});
      sta |= vbit(picked);
    }
    dom_to_move = !dom_to_move;
  }
  return pv;
}

}  // namespace

SolveReport solve_rounds(const GameConfig& cfg, const SolverOptions& opts) {
  check_cap(cfg, opts);
  SearchContext cx(cfg, opts);
  std::uint8_t v = search_rounds(cx, 0, 0, cfg.first == Player::Dominator);
  SolveReport report;
  report.value = v == kInf ? GameValue::infinity() : GameValue::finite(v);
  if (opts.want_pv && v != kInf) report.principal_variation = recover_pv(cx, cfg, v);
  report.states_visited = cx.table.size();
  return report;
}

std::optional<Move> best_move(const GameConfig& cfg, const GameState& state,
                              const SolverOptions& opts) {
  check_cap(cfg, opts);
  SearchContext cx(cfg, opts);
  const VertexSet dom = state.dominator;
  const VertexSet sta = state.staller;
  if ((cx.target & ~cx.dominated(dom)) == 0) return std::nullopt;
  const VertexSet free = cx.g.full_mask() & ~(dom | sta);
  const bool dom_to_move = state.to_move == Player::Dominator;
  const VertexSet legal = dom_to_move ? free & ~cx.forbidden : free;
  if (legal == 0) return std::nullopt;
  if (dom_to_move) {
    const std::uint8_t best = search_rounds(cx, dom, sta, true);
    const int take = std::min(cx.bias, set_size(legal));
    const int lo = cx.unrestricted ? 1 : take;
    VertexSet picked = 0;
    if (best != kInf) {
      for (int t = lo; t <= take && picked == 0; ++t) {
        for_each_subset_of_size(legal, t, [&](VertexSet sub) {
          if (saturating_inc(search_rounds(cx, dom | sub, sta, false)) == best) {
            picked = sub;
            return false;
          }
          return true;
        });
      }
    }
    if (picked == 0) {
      for_each_subset_of_size(legal, take, [&](VertexSet sub) {
        picked = sub;
        return false;
      });
    }
    return Move{Player::Dominator, set_vertices(picked)};
  }
  const std::uint8_t best = search_rounds(cx, dom, sta, false);
  for (int v : set_vertices(free)) {
    if (search_rounds(cx, dom, sta | vbit(v), true) == best) {
      return Move{Player::Staller, {v}};
    }
  }
  return Move{Player::Staller, {lowest_vertex(free)}};
}

namespace {

// Dominated-vertex payoff at exhaustion; Dominator to move maximizes.
std::uint8_t search_dominated(SearchContext& cx, VertexSet dom, VertexSet sta,
                              bool dom_to_move) {
  const int n = cx.g.vertex_count();
  VertexSet covered = cx.dominated(dom);
  if (covered == cx.g.full_mask()) return static_cast<std::uint8_t>(n);
  VertexSet free = cx.g.full_mask() & ~(dom | sta);
  VertexSet legal = dom_to_move ? free & ~cx.forbidden : free;
  if (legal == 0) return static_cast<std::uint8_t>(set_size(covered));

  std::uint64_t key = cx.key(dom, sta, dom_to_move);
  if (const std::uint8_t* hit = cx.table.find(key)) return *hit;

  std::uint8_t best;
  if (dom_to_move) {
    best = 0;
    int take = std::min(cx.bias, set_size(legal));
    for_each_subset_of_size(legal, take, [&](VertexSet sub) {
      best = std::max(best, search_dominated(cx, dom | sub, sta, false));
      return best < n;
    });
  } else {
    best = static_cast<std::uint8_t>(n);
    for (int v : set_vertices(free)) {
      best = std::min(best, search_dominated(cx, dom, sta | vbit(v), true));
      if (best == set_size(covered)) break;  // staller cannot push lower
    }
  }
  cx.table.insert(key, best);
  return best;
}

}  // namespace

MaxDominatedReport solve_max_dominated(const GameConfig& cfg,
                                       const SolverOptions& opts) {
  check_cap(cfg, opts);
  SearchContext cx(cfg, opts);
  std::uint8_t v = search_dominated(cx, 0, 0, cfg.first == Player::Dominator);
  return {static_cast<int>(v), cx.table.size()};
}

namespace {

struct VerifyWalker {
  const GameConfig& cfg;
  const VariantRules& rules;
  const Strategy& strat;
  Guarantee guarantee;
  Player side;
  VerifyOutcome out;
  std::vector<Move> path;

  bool fail(const std::string& detail) {
    out.ok = false;
    out.counterexample = path;
    out.detail = detail;
    return false;
  }

  bool pass_line() {
    ++out.lines;
    return true;
  }

  // Returns false once a counterexample is found, aborting the walk.
  bool walk(const GameState& s) {
    using K = Guarantee::Kind;
    const Graph& g = cfg.board;

    if (guarantee.kind == K::DominateAtLeast) {
      // Played to exhaustion; blocked closed neighborhoods do not end it.
      int covered = set_size(dominated_mask(g, s.dominator));
      if (covered >= guarantee.value) return pass_line();
      VertexSet free = g.full_mask() & ~s.claimed();
      VertexSet legal = s.to_move == Player::Dominator
                            ? free & ~rules.dominator_forbidden
                            : free;
      if (legal == 0)
        return fail("final position dominates " + std::to_string(covered) +
                    " vertices, needs " + std::to_string(guarantee.value));
      return branch(s);
    }

    GameStatus st = game_status(cfg, s, rules);
    switch (guarantee.kind) {
      case K::WinWithin:
        if (st.kind == GameStatus::Kind::DominatorWon)
          return st.rounds <= guarantee.value
                     ? pass_line()
                     : fail("dominator won in " + std::to_string(st.rounds) +
                            " rounds, bound " + std::to_string(guarantee.value));
        if (st.kind == GameStatus::Kind::StallerWon) return fail("staller won");
        if (s.dominator_moves >= guarantee.value)
          return fail("no win after " + std::to_string(s.dominator_moves) +
                      " dominator moves");
        break;
      case K::ForceInfinity:
        if (st.kind == GameStatus::Kind::DominatorWon) return fail("dominator won");
        if (st.kind == GameStatus::Kind::StallerWon) return pass_line();
        break;
      case K::ForceAtLeast:
        if (st.kind == GameStatus::Kind::DominatorWon)
          return st.rounds >= guarantee.value
                     ? pass_line()
                     : fail("dominator won in " + std::to_string(st.rounds) +
                            " rounds, below " + std::to_string(guarantee.value));
        if (st.kind == GameStatus::Kind::StallerWon) return pass_line();
        if (s.dominator_moves >= guarantee.value - 1) return pass_line();
        break;
      case K::DominateAtLeast: break;  // handled above
    }
    return branch(s);
  }

  bool branch(const GameState& s) {
    if (s.to_move == side) {
      Move m;
      try {
        m = strat.choose(cfg, s, path);
      } catch (const std::exception& e) {
        return fail(std::string("strategy raised: ") + e.what());
      }
      GameState next;
      try {
        next = apply_move(cfg, s, m, rules);
      } catch (const IllegalMoveError& e) {
        path.push_back(m);
        return fail(std::string("illegal strategy move: ") + e.what());
      }
      path.push_back(m);
      bool keep = walk(next);
      path.pop_back();
      return keep;
    }
    VertexSet free = cfg.board.full_mask() & ~s.claimed();
    if (s.to_move == Player::Staller) {
      for (int v : set_vertices(free)) {
        Move m{Player::Staller, {v}};
        GameState next = apply_move(cfg, s, m, rules);
        path.push_back(m);
        bool keep = walk(next);
        path.pop_back();
        if (!keep) return false;
      }
      return true;
    }
    VertexSet legal = free & ~rules.dominator_forbidden;
    int take = std::min(cfg.bias, set_size(legal));
    for (int t = 1; t <= take; ++t) {
      bool keep = for_each_subset_of_size(legal, t, [&](VertexSet sub) {
        Move m{Player::Dominator, set_vertices(sub)};
        GameState next = apply_move(cfg, s, m, rules);
        path.push_back(m);
        bool ok = walk(next);
        path.pop_back();
        return ok;
      });
      if (!keep) return false;
    }
    return true;
  }
};

}  // namespace

VerifyOutcome verify_strategy(const GameConfig& cfg, const Strategy& strat,
                              const Guarantee& guarantee,
                              const VariantRules& rules) {
  if (cfg.board.vertex_count() > kMaxMaskVertices)
    throw CapExceededError("board too large for exhaustive verification");
  VerifyWalker w{cfg, rules, strat, guarantee, strat.side(), {}, {}};
  w.walk(initial_state(cfg));
  return w.out;
}

}  // namespace mbd
