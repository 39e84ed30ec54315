#include "mbd/verification.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "mbd/families.hpp"
#include "mbd/formulas.hpp"
#include "mbd/game.hpp"
#include "mbd/goodness.hpp"
#include "mbd/graph.hpp"
#include "mbd/hypergame.hpp"
#include "mbd/rng.hpp"
#include "mbd/solver.hpp"
#include "mbd/strategies.hpp"

namespace mbd {

bool SuiteResult::pass() const {
  for (const auto& c : cases) {
    if (!c.pass) return false;
  }
  return true;
}

int SuiteResult::failed() const {
  int bad = 0;
  for (const auto& c : cases) {
    if (!c.pass) ++bad;
  }
  return bad;
}

void SuiteResult::merge(const SuiteResult& other) {
  cases.insert(cases.end(), other.cases.begin(), other.cases.end());
}

namespace {

void add(SuiteResult& r, std::string name, bool ok, std::string detail = "") {
  r.cases.push_back({std::move(name), ok, std::move(detail)});
}

// Rolls many same-shaped checks into one case; keeps the first few failures.
struct Agg {
  int checked = 0;
  int failures = 0;
  std::vector<std::string> bad;

  void note(bool ok, const std::string& what) {
    ++checked;
    if (ok) return;
    ++failures;
    if (bad.size() < 4) bad.push_back(what);
  }

  void flush(SuiteResult& r, const std::string& name) const {
    std::ostringstream d;
    if (failures == 0) {
      d << checked << " checked";
    } else {
      d << failures << " of " << checked << " failed:";
      for (const auto& w : bad) d << " [" << w << "]";
    }
    add(r, name, failures == 0, d.str());
  }
};

GameValue solve_first(const Graph& g, int b, Player first,
                      const VariantRules& rules = {}) {
  const GameConfig cfg{g, b, first};
  SolverOptions opt;
  opt.rules = rules;
  return solve_rounds(cfg, opt).value;
}

std::string show_moves(const std::vector<Move>& ms) {
  std::string out;
  for (const Move& m : ms) {
    if (!out.empty()) out += "; ";
    out += format_move(m);
  }
  return out;
}

// Runs the full opponent sweep and folds the result into `r`.
void check_strategy(SuiteResult& r, const std::string& name, const GameConfig& cfg,
                    const Strategy& st, const Guarantee& want,
                    const VariantRules& rules = {}) {
  if (!st.applies_to(cfg, rules)) {
    add(r, name, false, st.name() + " rejects the position");
    return;
  }
  const VerifyOutcome out = verify_strategy(cfg, st, want, rules);
  std::string detail;
  if (!out.ok) {
    detail = out.detail;
    if (!out.counterexample.empty()) detail += " | " + show_moves(out.counterexample);
  }
  add(r, name, out.ok, detail);
}

void agg_strategy(Agg& agg, const std::string& what, const GameConfig& cfg,
                  const Strategy& st, const Guarantee& want,
                  const VariantRules& rules = {}) {
  if (!st.applies_to(cfg, rules)) {
    agg.note(false, what + ": rejected");
    return;
  }
  const VerifyOutcome out = verify_strategy(cfg, st, want, rules);
  agg.note(out.ok, what + ": " + out.detail);
}

Graph random_graph(Rng& rng, int n, double p) {
  Graph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (rng.next_double() < p) g.add_edge(i, j);
    }
  }
  for (int v = 0; v < n; ++v) {
    if (g.neighbor_mask(v) == 0) g.add_edge(v, (v + 1) % n);
  }
  return g;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  }
  return g;
}

std::string tag(const std::string& fam, int n, int k, int b) {
  std::ostringstream s;
  s << fam << " n=" << n << " k=" << k << " b=" << b;
  return s.str();
}

}  // namespace

// ---------------------------------------------------------------------------

SuiteResult check_power_values() {
  SuiteResult r{"power board values", {}};
  for (BoardKind kind : {BoardKind::Path, BoardKind::Cycle}) {
    const bool path = kind == BoardKind::Path;
    Agg agg;
    for (int k = 1; k <= 2; ++k) {
      for (int b = 1; b <= 3; ++b) {
        for (int n = path ? 2 : 3; n <= 12; ++n) {
          if (k > n || b > n) continue;
          const Graph g =
              path ? make_path_power(n, k) : make_cycle_power(n, k);
          const GameValue got = solve_first(g, b, Player::Dominator);
          const int want = gamma_power(n, k, b, kind);
          agg.note(got == GameValue::finite(want),
                   tag(path ? "path" : "cycle", n, k, b) + " solver " +
                       to_string(got) + " formula " + std::to_string(want));
        }
      }
    }
    agg.flush(r, std::string(path ? "path" : "cycle") +
                     " power value matches exact play");
  }
  return r;
}

SuiteResult check_board_certificates() {
  SuiteResult r{"power board certificates", {}};
  {
    Agg agg;
    for (BoardKind kind : {BoardKind::Path, BoardKind::Cycle}) {
      const bool path = kind == BoardKind::Path;
      for (int k = 1; k <= 2; ++k) {
        for (int b = 1; b <= 3; ++b) {
          for (int n = path ? 2 : 3; n <= 11; ++n) {
            if (k > n || b > n) continue;
            const auto st = interval_dominator(n, k, b, kind);
            const Graph g =
                path ? make_path_power(n, k) : make_cycle_power(n, k);
            const GameConfig cfg{g, b, Player::Dominator};
            agg_strategy(agg, tag(path ? "path" : "cycle", n, k, b), cfg, *st,
                         st->declared_guarantee(cfg, {}));
          }
        }
      }
    }
    agg.flush(r, "interval strategy wins within the formula");
  }
  {
    Agg agg;
    for (int k = 1; k <= 2; ++k) {
      for (int b = 1; b <= 2; ++b) {
        for (int n = 2; n <= (b == 1 ? 9 : 10); ++n) {
          const PathFamilies fam{{{n, 0, n}}, k, b};
          const auto st = path_adversary_staller(fam);
          for (Player first : {Player::Dominator, Player::Staller}) {
            const GameConfig cfg{fam.board(), b, first};
            agg_strategy(agg,
                         tag(first == Player::Dominator ? "pathD" : "pathS", n,
                             k, b),
                         cfg, *st, st->declared_guarantee(cfg, {}));
          }
        }
      }
    }
    agg.flush(r, "walking staller forces the formula on full paths");
  }
  {
    // Two paths with target subranges; only the target needs dominating.
    const PathFamilies fam{{{4, 0, 4}, {4, 1, 3}}, 1, 1};
    const auto st = path_adversary_staller(fam);
    for (Player first : {Player::Dominator, Player::Staller}) {
      const GameConfig cfg{fam.board(), 1, first};
      check_strategy(r,
                     std::string("subrange targets, ") +
                         (first == Player::Dominator ? "dominator" : "staller") +
                         " first",
                     cfg, *st, st->declared_guarantee(cfg, fam.rules()),
                     fam.rules());
    }
  }
  {
    // Every stretch short from the start.
    const PathFamilies fam{{{2, 0, 2}, {2, 0, 2}}, 1, 1};
    const auto st = path_adversary_staller(fam);
    for (Player first : {Player::Dominator, Player::Staller}) {
      const GameConfig cfg{fam.board(), 1, first};
      check_strategy(r,
                     std::string("short stretches, ") +
                         (first == Player::Dominator ? "dominator" : "staller") +
                         " first",
                     cfg, *st, {Guarantee::Kind::ForceAtLeast, 2});
    }
  }
  return r;
}

SuiteResult check_goodness_characterization() {
  SuiteResult r{"reduction characterization", {}};
  for (int b = 1; b <= 3; ++b) {
    Agg agg;
    for (int n = 2; n <= 10; ++n) {
      const auto trees = enumerate_trees(n);
      for (size_t i = 0; i < trees.size(); ++i) {
        const bool good = is_b_good(trees[i].graph(), b);
        const GameValue v = solve_first(trees[i].graph(), b, Player::Staller);
        std::ostringstream what;
        what << "n=" << n << " #" << i << (good ? " good" : " witnessed")
             << " value " << to_string(v);
        agg.note(good == v.is_finite(), what.str());
      }
    }
    agg.flush(r, "witness-free equals finite staller-first value, b=" +
                     std::to_string(b));
  }
  return r;
}

SuiteResult check_dominator_start() {
  SuiteResult r{"dominator-start characterization", {}};
  for (int b = 1; b <= 3; ++b) {
    Agg agg;
    for (int n = 2; n <= 9; ++n) {
      const auto trees = enumerate_trees(n);
      for (size_t i = 0; i < trees.size(); ++i) {
        const auto opening = dominator_first_set(trees[i].graph(), b);
        const GameValue v = solve_first(trees[i].graph(), b, Player::Dominator);
        std::ostringstream what;
        what << "n=" << n << " #" << i << " opening "
             << (opening ? set_to_string(*opening) : std::string("none"))
             << " value " << to_string(v);
        agg.note(opening.has_value() == v.is_finite(), what.str());
      }
    }
    agg.flush(r, "opening set exists iff dominator-first value finite, b=" +
                     std::to_string(b));
  }
  return r;
}

SuiteResult check_tree_matching_values() {
  SuiteResult r{"unbiased tree values", {}};
  {
    Agg agg;
    for (int n = 2; n <= 12; ++n) {
      const auto trees = enumerate_trees(n);
      for (size_t i = 0; i < trees.size(); ++i) {
        for (Player first : {Player::Dominator, Player::Staller}) {
          const GameValue formula = gamma_tree_b1(trees[i].graph(), first);
          const GameValue got = solve_first(trees[i].graph(), 1, first);
          std::ostringstream what;
          what << "n=" << n << " #" << i << " "
               << (first == Player::Dominator ? "D" : "S") << " formula "
               << to_string(formula) << " solver " << to_string(got);
          agg.note(formula == got, what.str());
        }
      }
    }
    agg.flush(r, "matching classification equals exact play on all trees");
  }
  {
    Agg agg;
    for (int n = 3; n <= 12; ++n) {
      const Graph c = make_cycle(n);
      for (Player first : {Player::Dominator, Player::Staller}) {
        const GameValue formula = gamma_cycle_b1(n, first);
        const GameValue got = solve_first(c, 1, first);
        agg.note(formula == got, "cycle n=" + std::to_string(n) + " formula " +
                                     to_string(formula) + " solver " +
                                     to_string(got));
      }
    }
    agg.flush(r, "cycle value floor(n/2) equals exact play");
  }
  return r;
}

SuiteResult check_chain_reduction() {
  SuiteResult r{"forcing chain reduction", {}};
  const int b = 2;
  for (int s = 0; s <= 2; ++s) {
    Agg agg;
    for (int n = 3 * s + 2; n <= 12; ++n) {
      const Graph g = make_ts(n, b, s);
      const int want = gamma_ts(n, b, s);
      const GameValue got = solve_first(g, b, Player::Staller);
      agg.note(got == GameValue::finite(want),
               "n=" + std::to_string(n) + " solver " + to_string(got) +
                   " formula " + std::to_string(want));
      if (s > 0) {
        const int k = n - s * (b + 1);
        const GameValue down = solve_first(make_tkb(k, b), b, Player::Staller);
        agg.note(got.is_finite() && down.is_finite() &&
                     got.rounds - down.rounds == s,
                 "n=" + std::to_string(n) + " plateau " + to_string(got) +
                     " vs " + to_string(down));
      }
    }
    agg.flush(r, "chain value adds one round per block, s=" + std::to_string(s));
  }
  {
    Agg agg;
    for (const auto& [n, s] : std::vector<std::pair<int, int>>{
             {8, 2}, {10, 2}, {9, 1}, {11, 1}}) {
      const int k = n - s * (b + 1);
      const Graph g = make_ts(n, b, s);
      const auto layout = forcing_chain_layout(n, b, s);
      const AdmissibleSequence seq{layout.chain_centers, 0};
      std::shared_ptr<Strategy> inner = tkb_dominator(k, b);
      const auto st = star_pairing_dominator(g, seq, inner);
      const GameConfig cfg{g, b, Player::Staller};
      agg_strategy(agg, "n=" + std::to_string(n) + " s=" + std::to_string(s),
                   cfg, *st, st->declared_guarantee(cfg, {}));
    }
    agg.flush(r, "pairing plus relayed play wins within s + ceil(k/f)");
  }
  return r;
}

SuiteResult check_star_chain_values() {
  SuiteResult r{"star chain", {}};
  for (int b = 2; b <= 3; ++b) {
    Agg agg;
    for (int k = 2; k <= 10; ++k) {
      const Graph g = make_tkb(k, b);
      const int want = gamma_tkb(k, b);
      const GameValue got = solve_first(g, b, Player::Staller);
      agg.note(got == GameValue::finite(want),
               "k=" + std::to_string(k) + " solver " + to_string(got) +
                   " formula " + std::to_string(want));
    }
    agg.flush(r, "star chain value equals ceil(k/f), b=" + std::to_string(b));
  }
  for (int b = 2; b <= 3; ++b) {
    Agg agg;
    for (int k = 2; k <= (b == 2 ? 8 : 6); ++k) {
      const Graph g = make_tkb(k, b);
      const GameConfig cfg{g, b, Player::Staller};
      const auto dom = tkb_dominator(k, b);
      const auto sta = tkb_staller(k, b);
      agg_strategy(agg, "k=" + std::to_string(k) + " dominator side", cfg, *dom,
                   dom->declared_guarantee(cfg, {}));
      agg_strategy(agg, "k=" + std::to_string(k) + " staller side", cfg, *sta,
                   sta->declared_guarantee(cfg, {}));
    }
    agg.flush(r, "both sides certify ceil(k/f), b=" + std::to_string(b));
  }
  return r;
}

SuiteResult check_tree_value_bounds() {
  SuiteResult r{"tree value bounds", {}};
  for (int b = 2; b <= 3; ++b) {
    Agg agg;
    for (int n = 2; n <= 10; ++n) {
      const auto trees = enumerate_trees(n);
      const BoundReport bounds = tree_gamma_bounds(n, b);
      for (size_t i = 0; i < trees.size(); ++i) {
        const GameValue v = solve_first(trees[i].graph(), b, Player::Staller);
        if (!v.is_finite()) continue;
        std::ostringstream what;
        what << "n=" << n << " #" << i << " value " << v.rounds << " bounds ["
             << bounds.lower << "," << bounds.upper << "]";
        agg.note(bounds.lower <= v.rounds && v.rounds <= bounds.upper,
                 what.str());
      }
    }
    agg.flush(r, "finite values sit inside the bounds, b=" + std::to_string(b));
  }
  {
    const BoundReport a = tree_gamma_bounds(20, 2);
    add(r, "bounds(20,2) = [2,7]", a.lower == 2 && a.upper == 7,
        std::to_string(a.lower) + "," + std::to_string(a.upper));
    const BoundReport c = tree_gamma_bounds(5, 2);
    add(r, "bounds(5,2) = [1,2]", c.lower == 1 && c.upper == 2,
        std::to_string(c.lower) + "," + std::to_string(c.upper));
    bool sep = true;
    for (int b = 2; b <= 10; ++b) {
      if (4 * f_of_b(b) <= b * (b + 3)) sep = false;
    }
    add(r, "4 f(b) exceeds b(b+3) for b in 2..10", sep);
  }
  {
    Agg agg;
    std::vector<Graph> targets{make_path(11), make_path(12), make_ts(12, 2, 2)};
    const auto big = enumerate_trees(11);
    for (size_t i = 0; i < big.size() && i < 3; ++i) targets.push_back(big[i].graph());
    for (size_t i = 0; i < targets.size(); ++i) {
      const int n = targets[i].vertex_count();
      const auto st = dstar_staller(targets[i], 2);
      const GameConfig cfg{targets[i], 2, Player::Staller};
      agg_strategy(agg, "tree#" + std::to_string(i) + " n=" + std::to_string(n),
                   cfg, *st, st->declared_guarantee(cfg, {}));
    }
    agg.flush(r, "private-domination attack certifies the lower bound");
  }
  return r;
}

SuiteResult check_fraction_guarantee() {
  SuiteResult r{"dominated fraction", {}};
  for (int b = 1; b <= 2; ++b) {
    Agg agg;
    for (int n = 2; n <= 9; ++n) {
      const auto trees = enumerate_trees(n);
      for (size_t i = 0; i < trees.size(); ++i) {
        const auto st = neighborhood_breaker_dominator(
            trees[i].graph(), b, NeighborhoodMode::Fraction);
        const GameConfig cfg{trees[i].graph(), b, Player::Dominator};
        agg_strategy(agg, "n=" + std::to_string(n) + " #" + std::to_string(i),
                     cfg, *st, st->declared_guarantee(cfg, {}));
      }
    }
    agg.flush(r,
              "potential play dominates n - floor(n/(b+1)^2), b=" +
                  std::to_string(b));
  }
  {
    Agg agg;
    for (const auto& [n, b] : std::vector<std::pair<int, int>>{
             {6, 1}, {8, 1}, {12, 2}}) {
      const Graph g = make_fraction_sharp(n, b);
      const GameConfig cfg{g, b, Player::Staller};
      const MaxDominatedReport rep = solve_max_dominated(cfg);
      std::ostringstream what;
      what << "n=" << n << " b=" << b << " dominated " << rep.dominated;
      agg.note(rep.dominated <= n - 1 && rep.dominated >= 0, what.str());
    }
    agg.flush(r, "pathed-stars family denies full domination staller-first");
  }
  return r;
}

SuiteResult check_min_degree_condition() {
  SuiteResult r{"degree threshold", {}};
  {
    Agg agg;
    Rng rng(0x1d5eed);
    int accepted = 0;
    int guard = 0;
    while (accepted < 20 && guard < 400) {
      ++guard;
      const int n = 5 + static_cast<int>(rng.next_below(8));
      const Graph g = random_graph(rng, n, 0.6);
      const int delta = g.min_degree();
      int b = 0;
      for (int cand = 1; cand <= 3; ++cand) {
        if (mindeg_condition_holds(n, delta, cand)) {
          b = cand;
          break;
        }
      }
      if (b == 0) continue;
      ++accepted;
      const auto st =
          neighborhood_breaker_dominator(g, b, NeighborhoodMode::Full);
      const GameConfig cfg{g, b, Player::Dominator};
      agg_strategy(agg,
                   "graph#" + std::to_string(accepted) + " n=" +
                       std::to_string(n) + " b=" + std::to_string(b),
                   cfg, *st, {Guarantee::Kind::WinWithin, n});
      if (n <= default_solver_cap(b)) {
        const GameValue v = solve_first(g, b, Player::Dominator);
        agg.note(v.is_finite(), "graph#" + std::to_string(accepted) +
                                    " solver " + to_string(v));
      }
    }
    agg.note(accepted == 20, "only " + std::to_string(accepted) + " accepted");
    agg.flush(r, "above the threshold the dominator wins, 20 random boards");
  }
  add(r, "threshold(8,1) = 2", mindeg_win_threshold(8, 1) == 2.0);
  add(r, "integer condition at the boundary",
      !mindeg_condition_holds(8, 2, 1) && mindeg_condition_holds(7, 2, 1));
  add(r, "dense round bound (100,50,2) = 47", dense_round_bound(100, 50, 2) == 47);
  {
    const Graph g = make_ary_stack(1, 2);
    add(r, "stacked family sits below the threshold",
        g.vertex_count() == 14 && g.min_degree() == 2 &&
            !mindeg_condition_holds(14, 2, 1));
    const GameValue v = solve_first(g, 1, Player::Dominator);
    add(r, "stacked family value is infinite", v == GameValue::infinity(),
        to_string(v));
    const auto st = arystack_staller(1, 2);
    const GameConfig cfg{g, 1, Player::Dominator};
    check_strategy(r, "copy walk forces the infinite game", cfg, *st,
                   {Guarantee::Kind::ForceInfinity, 0});
  }
  add(r, "root walk beats one claim per round on the 7-vertex copy",
      exhaustive_ary_maker_wins(2, 2, 1));
  add(r, "root walk loses to two claims per round",
      !exhaustive_ary_maker_wins(2, 2, 2));
  return r;
}

SuiteResult check_potential_bound() {
  SuiteResult r{"potential bound", {}};
  {
    Agg agg;
    Rng rng(0xbec0de);
    for (int i = 0; i < 200; ++i) {
      const int n = 4 + static_cast<int>(rng.next_below(6));
      const int sets = 3 + static_cast<int>(rng.next_below(5));
      const Hypergraph h = random_hypergraph(rng, n, sets, 2, 4);
      for (int q = 1; q <= 3; ++q) {
        const long long bound = beck_bound(h, q);
        const int got = exhaustive_max_maker_sets(h, q);
        agg.note(got <= bound, "instance#" + std::to_string(i) + " q=" +
                                   std::to_string(q) + " got " +
                                   std::to_string(got) + " bound " +
                                   std::to_string(bound));
      }
    }
    agg.flush(r, "exhaustive maker never exceeds the floor of the weight sum");
  }
  {
    Hypergraph h{1, {vbit(0)}};
    add(r, "singleton set dies to the first claim",
        beck_bound(h, 1) == 0 && exhaustive_max_maker_sets(h, 1) == 0);
  }
  {
    Hypergraph h{1, {0, vbit(0)}};
    add(r, "empty set counts as fully claimed",
        beck_bound(h, 1) == 1 && exhaustive_max_maker_sets(h, 1) == 1);
  }
  return r;
}

SuiteResult check_sampled_subset() {
  SuiteResult r{"sampled subset", {}};
  {
    const Graph g = complete_graph(12);
    const VertexSet a = build_dominating_subset(g, 1, 7);
    bool deep = true;
    for (int v = 0; v < 12; ++v) {
      if (set_size(g.neighbor_mask(v) & a) <= 2.0 * std::log(12.0)) deep = false;
    }
    add(r, "complete board passes both predicates", deep && set_size(a) <= 12,
        set_to_string(a));
    add(r, "same seed reproduces the subset",
        build_dominating_subset(g, 1, 7) == a);
  }
  {
    bool threw = false;
    try {
      (void)build_dominating_subset(make_cycle(5), 1, 3);
    } catch (const std::runtime_error&) {
      threw = true;
    }
    add(r, "sparse cycle exhausts the retry budget", threw);
  }
  {
    Rng rng(0x60a7);
    const Graph g = random_graph(rng, 60, 0.5);
    const VertexSet a = build_dominating_subset(g, 1, 11);
    const auto st =
        neighborhood_breaker_dominator(g, 1, NeighborhoodMode::Subset, a);
    const GameConfig cfg{g, 1, Player::Dominator};
    if (!st->applies_to(cfg, {})) {
      add(r, "subset playout on 60 vertices", false, "strategy rejected");
    } else {
      const auto sta = lowest_free_staller();
      const MatchResult m = play_match(cfg, *st, *sta);
      const int allowed = static_cast<int>(ceil_div(set_size(a), 1));
      add(r, "subset playout on 60 vertices",
          m.status.kind == GameStatus::Kind::DominatorWon &&
              m.status.rounds <= allowed,
          format_status(m.status));
    }
  }
  return r;
}

SuiteResult check_tree_certificates() {
  SuiteResult r{"tree certificates", {}};
  for (int b = 1; b <= 2; ++b) {
    Agg agg;
    for (int n = 2; n <= (b == 1 ? 9 : 8); ++n) {
      const auto trees = enumerate_trees(n);
      for (size_t i = 0; i < trees.size(); ++i) {
        const GameConfig cfg{trees[i].graph(), b, Player::Staller};
        const auto witness = find_problematic(trees[i].graph(), 0, b);
        const std::string what =
            "n=" + std::to_string(n) + " #" + std::to_string(i);
        if (witness) {
          const auto st = problematic_staller(trees[i].graph(), *witness);
          agg_strategy(agg, what + " witness " + witness->to_string(), cfg,
                       *st, {Guarantee::Kind::ForceInfinity, 0});
        } else {
          const auto st = recursive_good_dominator(trees[i].graph(), 0, b);
          agg_strategy(agg, what + " good", cfg, *st,
                       st->declared_guarantee(cfg, {}));
        }
      }
    }
    agg.flush(r, "each tree yields a winning certificate, b=" +
                     std::to_string(b));
  }
  {
    const Graph p5 = make_path(5);
    const auto w = find_problematic(p5, 0, 1);
    add(r, "five-path witness is (1 | 3)",
        w && w->seq.vertices == std::vector<int>{1} && w->exposed == 3,
        w ? w->to_string() : "none");
    const VertexSet a = vbit(2);
    add(r, "five-path with a reserved center has no witness",
        !find_problematic(p5, a, 1).has_value());
    const auto st = recursive_good_dominator(p5, a, 1);
    const VariantRules rules{a, p5.full_mask() & ~dominated_mask(p5, a)};
    const GameConfig cfg{p5, 1, Player::Staller};
    check_strategy(r, "reserved-center play wins the restricted game", cfg,
                   *st, st->declared_guarantee(cfg, rules), rules);
  }
  {
    // Restricted instances found by scan: witnesses beat the dominator even
    // when her forbidden set shrinks the target.
    Agg agg;
    int used_witness = 0;
    int used_good = 0;
    for (int n = 5; n <= 7 && (used_witness < 3 || used_good < 3); ++n) {
      const auto trees = enumerate_trees(n);
      for (size_t i = 0; i < trees.size(); ++i) {
        for (int av = 0; av < n; ++av) {
          const VertexSet a = vbit(av);
          const VariantRules rules{
              a, trees[i].graph().full_mask() & ~dominated_mask(trees[i].graph(), a)};
          if (!*rules.target) continue;  // nothing left to dominate
          const GameConfig cfg{trees[i].graph(), 1, Player::Staller};
          const auto witness = find_problematic(trees[i].graph(), a, 1);
          const std::string what = "n=" + std::to_string(n) + " #" +
                                   std::to_string(i) + " A=" +
                                   set_to_string(a);
          if (witness && used_witness < 3) {
            ++used_witness;
            const auto st = problematic_staller(trees[i].graph(), *witness);
            agg_strategy(agg, what, cfg, *st,
                         {Guarantee::Kind::ForceInfinity, 0}, rules);
          } else if (!witness && used_good < 3) {
            ++used_good;
            const auto st = recursive_good_dominator(trees[i].graph(), a, 1);
            agg_strategy(agg, what, cfg, *st,
                         st->declared_guarantee(cfg, rules), rules);
          }
        }
      }
    }
    agg.note(used_witness == 3 && used_good == 3, "scan came up short");
    agg.flush(r, "restricted-board certificates hold on sampled instances");
  }
  return r;
}

SuiteResult check_value_order() {
  SuiteResult r{"value order", {}};
  {
    Agg agg;
    for (int n = 2; n <= 12; ++n) {
      const auto trees = enumerate_trees(n);
      for (size_t i = 0; i < trees.size(); ++i) {
        const bool pm = tree_has_perfect_matching(Forest(trees[i].graph()));
        const VertexSet res = residual_mask(trees[i].graph());
        const int rs = set_size(res);
        bool star3 = false;
        if (rs >= 4) {
          int center = 0;
          int leaves = 0;
          for (int v : set_vertices(res)) {
            const int d = set_size(trees[i].graph().neighbor_mask(v) & res);
            if (d == rs - 1) ++center;
            if (d == 1) ++leaves;
          }
          star3 = center == 1 && leaves == rs - 1;
        }
        const std::string what = "n=" + std::to_string(n) + " #" +
                                 std::to_string(i) + " residue " +
                                 set_to_string(res);
        agg.note(!(pm && rs == 1) && !(pm && star3), what);
      }
    }
    agg.flush(r, "matching and residue cases never overlap");
  }
  {
    Agg agg;
    for (int n = 2; n <= 10; ++n) {
      const auto trees = enumerate_trees(n);
      for (size_t i = 0; i < trees.size(); ++i) {
        const GameValue d = solve_first(trees[i].graph(), 1, Player::Dominator);
        const GameValue s = solve_first(trees[i].graph(), 1, Player::Staller);
        agg.note(d <= s, "n=" + std::to_string(n) + " #" + std::to_string(i) +
                             " D " + to_string(d) + " S " + to_string(s));
      }
    }
    agg.flush(r, "moving first never hurts the dominator");
  }
  {
    Agg agg;
    for (int n = 2; n <= 12; ++n) {
      const auto trees = enumerate_trees(n);
      for (size_t i = 0; i < trees.size(); ++i) {
        const bool pm = tree_has_perfect_matching(Forest(trees[i].graph()));
        const GameValue s = gamma_tree_b1(trees[i].graph(), Player::Staller);
        agg.note(pm == s.is_finite() &&
                     (!pm || s == GameValue::finite(n / 2)),
                 "n=" + std::to_string(n) + " #" + std::to_string(i));
      }
    }
    agg.flush(r, "staller-first value is n/2 exactly on matched trees");
  }
  return r;
}

// ---------------------------------------------------------------------------

std::vector<std::string> suite_names() {
  return {"powers",  "trees-b1", "characterization", "dominator-first",
          "residue", "tkb",      "bounds",           "fraction",
          "mindeg",  "beck",     "matching-order"};
}

SuiteResult run_suite(const std::string& name) {
  SuiteResult r{name, {}};
  if (name == "powers") {
    r.merge(check_power_values());
    r.merge(check_board_certificates());
  } else if (name == "trees-b1") {
    r.merge(check_tree_matching_values());
  } else if (name == "characterization") {
    r.merge(check_goodness_characterization());
    r.merge(check_tree_certificates());
  } else if (name == "dominator-first") {
    r.merge(check_dominator_start());
  } else if (name == "residue") {
    r.merge(check_chain_reduction());
  } else if (name == "tkb") {
    r.merge(check_star_chain_values());
  } else if (name == "bounds") {
    r.merge(check_tree_value_bounds());
  } else if (name == "fraction") {
    r.merge(check_fraction_guarantee());
  } else if (name == "mindeg") {
    r.merge(check_min_degree_condition());
    r.merge(check_sampled_subset());
  } else if (name == "beck") {
    r.merge(check_potential_bound());
  } else if (name == "matching-order") {
    r.merge(check_value_order());
  } else {
    throw std::invalid_argument("unknown suite: " + name);
  }
  return r;
}

std::vector<SuiteResult> run_all_suites() {
  std::vector<SuiteResult> out;
  for (const auto& name : suite_names()) out.push_back(run_suite(name));
  return out;
}

}  // namespace mbd
