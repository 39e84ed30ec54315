#include "mbd/strategies.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

#include "mbd/formulas.hpp"
#include "mbd/hypergame.hpp"
#include "mbd/rng.hpp"

namespace mbd {

namespace {

Move dmove(std::vector<int> vs) {
  std::sort(vs.begin(), vs.end());
  return Move{Player::Dominator, std::move(vs)};
}

Move smove(int v) { return Move{Player::Staller, {v}}; }

VertexSet free_mask(const GameConfig& cfg, const GameState& s) {
  return cfg.board.full_mask() & ~s.claimed();
}

int last_staller_vertex(const std::vector<Move>& history) {
  for (auto it = history.rbegin(); it != history.rend(); ++it) {
    if (it->by == Player::Staller) return it->vertices.front();
  }
  return -1;
}

bool plain_rules(const GameConfig& cfg, const VariantRules& rules) {
  if (rules.dominator_forbidden != 0) return false;
  return !rules.target || *rules.target == cfg.board.full_mask();
}

std::vector<int> lowest_claims(VertexSet free, int take) {
  std::vector<int> out;
  for (int v : set_vertices(free)) {
    if (static_cast<int>(out.size()) == take) break;
    out.push_back(v);
  }
  return out;
}

class LowestFreeDominator final : public Strategy {
 public:
  std::string name() const override { return "lowest-free dominator"; }
  Player side() const override { return Player::Dominator; }
  bool applies_to(const GameConfig&, const VariantRules& rules) const override {
    return rules.dominator_forbidden == 0;
  }
  Guarantee declared_guarantee(const GameConfig&, const VariantRules&) const override {
    return {Guarantee::Kind::DominateAtLeast, 0};
  }
  Move choose(const GameConfig& cfg, const GameState& s,
              const std::vector<Move>&) const override {
    const VertexSet free = free_mask(cfg, s);
    const int take = std::min(cfg.bias, set_size(free));
    return dmove(lowest_claims(free, take));
  }
};

class LowestFreeStaller final : public Strategy {
 public:
  std::string name() const override { return "lowest-free staller"; }
  Player side() const override { return Player::Staller; }
  bool applies_to(const GameConfig&, const VariantRules&) const override {
    return true;
  }
  Guarantee declared_guarantee(const GameConfig&, const VariantRules&) const override {
    return {Guarantee::Kind::ForceAtLeast, 0};
  }
  Move choose(const GameConfig& cfg, const GameState& s,
              const std::vector<Move>&) const override {
    return smove(lowest_vertex(free_mask(cfg, s)));
  }
};

// ---------------------------------------------------------------------------
// Interval strategy on path/cycle powers.

class IntervalDominator final : public Strategy {
 public:
  IntervalDominator(int n, int k, int b, BoardKind kind)
      : n_(n), k_(k), b_(b), kind_(kind),
        board_(kind == BoardKind::Path ? make_path_power(n, k)
                                       : make_cycle_power(n, k)) {
    if (b < 1 || k < 1) throw std::invalid_argument("interval strategy needs k,b >= 1");
    if (n < 2) throw std::invalid_argument("interval strategy needs n >= 2");
    big_n_ = b * (2 * k + 1) - 1;
  }

  std::string name() const override { return "interval dominator"; }
  Player side() const override { return Player::Dominator; }

  bool applies_to(const GameConfig& cfg, const VariantRules& rules) const override {
    return cfg.first == Player::Dominator && cfg.bias == b_ &&
           cfg.board == board_ && plain_rules(cfg, rules);
  }

  Guarantee declared_guarantee(const GameConfig&, const VariantRules&) const override {
    return {Guarantee::Kind::WinWithin,
            static_cast<int>(ceil_div(n_ - 1, big_n_))};
  }

  Move choose(const GameConfig& cfg, const GameState& s,
              const std::vector<Move>& history) const override {
    if (s.dominator == 0) return opening();
    // Residue offset: 2 <= start <= N+1 with start == n (mod N).
    int start = n_ % big_n_;
    if (start < 2) start += big_n_;
    const int intervals = (n_ - start) / big_n_;
    const VertexSet dominated = dominated_mask(cfg.board, s.dominator);
    auto interval_lo = [&](int i) { return start + (i - 1) * big_n_; };
    auto interval_hi = [&](int i) { return start + i * big_n_ - 1; };
    auto undominated_in = [&](int i) {
      VertexSet u = 0;
      for (int p = interval_lo(i); p <= interval_hi(i); ++p) {
        if (!vin(dominated, p)) u |= vbit(p);
      }
      return u;
    };
    int chosen = -1;
    const int w = last_staller_vertex(history);
    if (w >= start) {
      const int iv = (w - start) / big_n_ + 1;
      if (iv >= 1 && iv <= intervals && undominated_in(iv)) chosen = iv;
    }
    if (chosen < 0) {
      for (int i = 1; i <= intervals; ++i) {
        if (undominated_in(i)) {
          chosen = i;
          break;
        }
      }
    }
    if (chosen < 0) {
      return dmove({lowest_vertex(free_mask(cfg, s))});
    }
    // Greedy cover: handle the leftmost uncovered position with the highest
    // free vertex within distance k of it.
    VertexSet uncovered = undominated_in(chosen);
    VertexSet taken = s.claimed();
    VertexSet covered = dominated;
    std::vector<int> claims;
    while (uncovered && static_cast<int>(claims.size()) < b_) {
      const int u = lowest_vertex(uncovered);
      int pick = -1;
      for (int cand = std::min(n_ - 1, u + k_); cand >= std::max(0, u - k_);
           --cand) {
        if (!vin(taken, cand)) {
          pick = cand;
          break;
        }
      }
      if (pick < 0) break;
      claims.push_back(pick);
      taken |= vbit(pick);
      covered |= cfg.board.closed_neighbor_mask(pick);
      uncovered &= ~covered;
    }
    if (claims.empty()) claims.push_back(lowest_vertex(free_mask(cfg, s)));
    return dmove(std::move(claims));
  }

 private:
  Move opening() const {
    std::set<int> picks;
    for (int i = 0; i < b_; ++i) {
      const int pos = std::min(k_ + 1 + (2 * k_ + 1) * i, n_);  // 1-indexed
      picks.insert(pos - 1);
    }
    return dmove(std::vector<int>(picks.begin(), picks.end()));
  }

  int n_, k_, b_;
  BoardKind kind_;
  Graph board_;
  int big_n_ = 0;
};

}  // namespace

// ---------------------------------------------------------------------------
// Path families and the walking Staller.

int PathFamilies::offset(size_t entry) const {
  int off = 0;
  for (size_t i = 0; i < entry; ++i) off += entries[i].length;
  return off;
}

int PathFamilies::total_vertices() const { return offset(entries.size()); }

Graph PathFamilies::board() const {
  Graph base(total_vertices());
  int off = 0;
  for (const auto& e : entries) {
    for (int i = 1; i < e.length; ++i) base.add_edge(off + i - 1, off + i);
    off += e.length;
  }
  return power(base, k);
}

VertexSet PathFamilies::q_mask() const {
  VertexSet q = 0;
  int off = 0;
  for (const auto& e : entries) {
    for (int i = e.q_lo; i < e.q_hi; ++i) q |= vbit(off + i);
    off += e.length;
  }
  return q;
}

int PathFamilies::q_vertex_count() const { return set_size(q_mask()); }

VariantRules PathFamilies::rules() const { return VariantRules{0, q_mask()}; }

namespace {

class PathAdversaryStaller final : public Strategy {
 public:
  explicit PathAdversaryStaller(PathFamilies fam) : fam_(std::move(fam)) {
    if (fam_.k < 1 || fam_.b < 1 || fam_.entries.empty()) {
      throw std::invalid_argument("path families need k,b >= 1 and an entry");
    }
    for (const auto& e : fam_.entries) {
      if (e.length < 1 || e.q_lo < 0 || e.q_lo > e.q_hi || e.q_hi > e.length) {
        throw std::invalid_argument("bad path family entry");
      }
    }
    if (fam_.total_vertices() > kMaxMaskVertices) {
      throw CapExceededError("path families exceed the mask width");
    }
    board_ = fam_.board();
    q_ = fam_.q_mask();
  }

  std::string name() const override { return "path adversary staller"; }
  Player side() const override { return Player::Staller; }

  bool applies_to(const GameConfig& cfg, const VariantRules& rules) const override {
    if (cfg.bias != fam_.b || !(cfg.board == board_)) return false;
    if (rules.dominator_forbidden != 0) return false;
    if (rules.target) return *rules.target == q_;
    return q_ == cfg.board.full_mask();
  }

  Guarantee declared_guarantee(const GameConfig& cfg,
                               const VariantRules&) const override {
    const int handicap = cfg.first == Player::Dominator ? 1 : 0;
    const long long big_n = static_cast<long long>(fam_.b) * (2 * fam_.k + 1) - 1;
    const int q = fam_.q_vertex_count();
    return {Guarantee::Kind::ForceAtLeast,
            static_cast<int>(ceil_div(std::max(0, q - handicap), big_n))};
  }

  Move choose(const GameConfig& cfg, const GameState& s,
              const std::vector<Move>& history) const override {
    Sim sim;
    VertexSet reds = 0;
    VertexSet mine = 0;
    const VertexSet full = cfg.board.full_mask();
    auto decide = [&]() -> int {
      if (sim.mode == Sim::Fresh) build(reds, &sim);
      if (sim.mode == Sim::Active) {
        while (sim.next >= sim.stop && vin(reds | mine, sim.next)) --sim.next;
        if (sim.next >= sim.stop) return sim.next--;
      }
      return lowest_vertex(full & ~reds & ~mine);
    };
    for (const Move& m : history) {
      if (m.by == Player::Staller) {
        (void)decide();
        mine |= make_set(m.vertices);
      } else {
        reds |= make_set(m.vertices);
        if (sim.mode == Sim::Active) {
          for (int v : m.vertices) {
            if (v >= sim.qlo - fam_.k && v <= sim.qlo + fam_.k - 1) {
              sim.mode = Sim::Fresh;
              break;
            }
          }
        }
      }
    }
    (void)s;
    return smove(decide());
  }

 private:
  struct Sim {
    enum Mode { Fresh, Active, Short } mode = Fresh;
    int next = -1;  // next scripted claim, counting down
    int stop = -1;  // bottom of the guarded run
    int qlo = -1;   // low end of the guarded target stretch
  };

  // Recolors every path around the Dominator's claims: claims cut the paths
  // into runs, the k positions next to an interior cut are burnt, and what
  // remains of each target range is a candidate stretch.
  void build(VertexSet reds, Sim* sim) const {
    int best_len = 0;
    int off = 0;
    sim->mode = Sim::Short;
    for (const auto& e : fam_.entries) {
      int a = off;
      const int end = off + e.length;
      while (a < end) {
        if (vin(reds, a)) {
          ++a;
          continue;
        }
        int c = a;
        while (c + 1 < end && !vin(reds, c + 1)) ++c;
        int lo = a + (a > off ? fam_.k : 0);
        int hi = c - (c < end - 1 ? fam_.k : 0);
        lo = std::max(lo, off + e.q_lo);
        hi = std::min(hi, off + e.q_hi - 1);
        const int len = hi - lo + 1;
        if (len >= 2 * fam_.k + 1 && len > best_len) {
          best_len = len;
          sim->mode = Sim::Active;
          sim->qlo = lo;
          sim->next = lo + fam_.k;
          sim->stop = a;
        }
        a = c + 1;
      }
      off = end;
    }
  }

  PathFamilies fam_;
  Graph board_{1};
  VertexSet q_ = 0;
};

// ---------------------------------------------------------------------------
// Star pairing with an inner strategy on the reduced forest.

class StarPairingDominator final : public Strategy {
 public:
  StarPairingDominator(Graph tree, AdmissibleSequence seq,
                       std::shared_ptr<Strategy> inner)
      : tree_(std::move(tree)), seq_(std::move(seq)), inner_(std::move(inner)) {
    if (!inner_) throw std::invalid_argument("star pairing needs an inner strategy");
    if (seq_.exclusion != 0) {
      throw std::invalid_argument("star pairing plays the unrestricted game");
    }
    trace_ = forest_after(tree_, seq_);
    for (const auto& st : trace_.steps) {
      stars_.push_back(vbit(st.vertex) | st.deleted_leaves);
      centers_.push_back(st.vertex);
    }
    down_ = trace_.final_mask();
    to_virtual_.assign(tree_.vertex_count(), -1);
    if (down_ != 0) {
      sub_ = induced_subgraph(tree_, down_, &old_ids_);
      for (size_t i = 0; i < old_ids_.size(); ++i) {
        to_virtual_[old_ids_[i]] = static_cast<int>(i);
      }
    }
  }

  std::string name() const override { return "star pairing dominator"; }
  Player side() const override { return Player::Dominator; }

  bool applies_to(const GameConfig& cfg, const VariantRules& rules) const override {
    if (!(cfg.board == tree_) || cfg.first != Player::Staller) return false;
    if (!plain_rules(cfg, rules)) return false;
    if (!is_admissible(tree_, seq_, cfg.bias)) return false;
    if (down_ == 0) return false;
    const GameConfig sub_cfg{sub_, cfg.bias, Player::Staller};
    if (!inner_->applies_to(sub_cfg, {})) return false;
    return inner_->declared_guarantee(sub_cfg, {}).kind ==
           Guarantee::Kind::WinWithin;
  }

  Guarantee declared_guarantee(const GameConfig& cfg,
                               const VariantRules&) const override {
    const GameConfig sub_cfg{sub_, cfg.bias, Player::Staller};
    const Guarantee inner_g = inner_->declared_guarantee(sub_cfg, {});
    return {Guarantee::Kind::WinWithin,
            static_cast<int>(stars_.size()) + inner_g.value};
  }

  Move choose(const GameConfig& cfg, const GameState& s,
              const std::vector<Move>& history) const override {
    const int w = last_staller_vertex(history);
    const VertexSet claimed = s.claimed();
    // Answer a fresh claim inside a forced star by finishing that star.
    for (size_t i = 0; i < stars_.size(); ++i) {
      if (w >= 0 && vin(stars_[i], w)) {
        const VertexSet open = stars_[i] & ~claimed;
        if (open) return dmove(set_vertices(open));
        break;
      }
    }
    if (w >= 0 && vin(down_, w)) {
      // Relay into the reduced game unless it is already won there.
      const GameConfig sub_cfg{sub_, cfg.bias, Player::Staller};
      GameState vstate = initial_state(sub_cfg);
      std::vector<Move> vhist;
      for (const Move& m : history) {
        const VertexSet mv = make_set(m.vertices);
        if ((mv & down_) != mv) continue;
        Move tm{m.by, {}};
        for (int v : m.vertices) tm.vertices.push_back(to_virtual_[v]);
        std::sort(tm.vertices.begin(), tm.vertices.end());
        vstate = apply_move(sub_cfg, vstate, tm);
        vhist.push_back(std::move(tm));
      }
      if (game_status(sub_cfg, vstate).ongoing()) {
        const Move vm = inner_->choose(sub_cfg, vstate, vhist);
        std::vector<int> back;
        for (int v : vm.vertices) back.push_back(old_ids_[v]);
        return dmove(std::move(back));
      }
    }
    // Otherwise finish the first untouched forced star.
    const VertexSet dom = dominated_mask(tree_, s.dominator);
    for (size_t i = 0; i < stars_.size(); ++i) {
      if ((stars_[i] & ~dom) == 0) continue;
      const VertexSet open = stars_[i] & ~claimed;
      if (!open) continue;
      std::vector<int> picks;
      if (vin(open, centers_[i])) picks.push_back(centers_[i]);
      for (int v : set_vertices(open & ~vbit(centers_[i]))) {
        if (static_cast<int>(picks.size()) == cfg.bias) break;
        picks.push_back(v);
      }
      return dmove(std::move(picks));
    }
    return dmove({lowest_vertex(free_mask(cfg, s))});
  }

 private:
  Graph tree_;
  AdmissibleSequence seq_;
  std::shared_ptr<Strategy> inner_;
  ReductionTrace trace_;
  std::vector<VertexSet> stars_;
  std::vector<int> centers_;
  VertexSet down_ = 0;
  Graph sub_{1};
  std::vector<int> old_ids_;
  std::vector<int> to_virtual_;
};

// ---------------------------------------------------------------------------
// Scripted Staller from a problematic pair.

class ProblematicStaller final : public Strategy {
 public:
  ProblematicStaller(Graph tree, ProblematicWitness witness)
      : tree_(std::move(tree)), wit_(std::move(witness)) {
    trace_ = forest_after(tree_, wit_.seq);
    for (const auto& st : trace_.steps) {
      centers_.push_back(st.vertex);
      forced_.push_back(st.deleted_leaves);
    }
    const VertexSet down = trace_.final_mask();
    exposed_ = tree_.neighbor_mask(wit_.exposed) & mask_leaves(tree_, down) &
               ~wit_.seq.exclusion;
  }

  std::string name() const override { return "problematic staller"; }
  Player side() const override { return Player::Staller; }

  bool applies_to(const GameConfig& cfg, const VariantRules& rules) const override {
    if (!(cfg.board == tree_) || cfg.first != Player::Staller) return false;
    if (rules.dominator_forbidden != wit_.seq.exclusion) return false;
    const VertexSet want =
        cfg.board.full_mask() & ~dominated_mask(tree_, wit_.seq.exclusion);
    const VertexSet target =
        rules.target ? *rules.target : cfg.board.full_mask();
    if (wit_.seq.exclusion == 0) {
      if (target != cfg.board.full_mask()) return false;
    } else if (target != want) {
      return false;
    }
    if (!is_admissible(tree_, wit_.seq, cfg.bias)) return false;
    if (vin(wit_.seq.exclusion, wit_.exposed)) return false;
    if (!vin(trace_.final_mask(), wit_.exposed)) return false;
    return set_size(exposed_) >= cfg.bias + 1;
  }

  Guarantee declared_guarantee(const GameConfig&, const VariantRules&) const override {
    return {Guarantee::Kind::ForceInfinity, 0};
  }

  Move choose(const GameConfig& cfg, const GameState& s,
              const std::vector<Move>&) const override {
    const VertexSet free = free_mask(cfg, s);
    // Punish any forced leaf the Dominator failed to answer.
    for (size_t i = 0; i < centers_.size(); ++i) {
      if (!vin(s.staller, centers_[i])) continue;
      const VertexSet open = forced_[i] & free;
      if (open) return smove(lowest_vertex(open));
    }
    if (vin(s.staller, wit_.exposed)) {
      const VertexSet open = exposed_ & free;
      if (open) return smove(lowest_vertex(open));
      return smove(lowest_vertex(free));
    }
    for (int c : centers_) {
      if (!vin(s.staller, c)) {
        return smove(vin(free, c) ? c : lowest_vertex(free));
      }
    }
    if (vin(free, wit_.exposed)) return smove(wit_.exposed);
    return smove(lowest_vertex(free));
  }

 private:
  Graph tree_;
  ProblematicWitness wit_;
  ReductionTrace trace_;
  std::vector<int> centers_;
  std::vector<VertexSet> forced_;
  VertexSet exposed_ = 0;
};

// ---------------------------------------------------------------------------
// Recursive decomposition Dominator on witness-free trees.

class RecursiveGoodDominator final : public Strategy {
 public:
  RecursiveGoodDominator(Graph tree, VertexSet exclusion, int b)
      : tree_(std::move(tree)), exclusion_(exclusion), b_(b) {
    if (b_ < 1) throw std::invalid_argument("bias must be at least 1");
  }

  std::string name() const override { return "recursive decomposition dominator"; }
  Player side() const override { return Player::Dominator; }

  bool applies_to(const GameConfig& cfg, const VariantRules& rules) const override {
    if (!(cfg.board == tree_) || cfg.first != Player::Staller) return false;
    if (cfg.bias != b_) return false;
    if (!is_tree_graph(tree_)) return false;
    if (tree_.vertex_count() > kGoodnessCap) return false;
    if (rules.dominator_forbidden != exclusion_) return false;
    const VertexSet want =
        cfg.board.full_mask() & ~dominated_mask(tree_, exclusion_);
    const VertexSet target =
        rules.target ? *rules.target : cfg.board.full_mask();
    if (exclusion_ == 0) {
      if (target != cfg.board.full_mask()) return false;
    } else if (target != want) {
      return false;
    }
    return good(tree_.full_mask(), exclusion_);
  }

  Guarantee declared_guarantee(const GameConfig& cfg, const VariantRules&) const override {
    return {Guarantee::Kind::WinWithin, cfg.board.vertex_count()};
  }

  Move choose(const GameConfig& cfg, const GameState& s,
              const std::vector<Move>& history) const override {
    std::vector<Node> fresh{{cfg.board.full_mask(), exclusion_}};
    VertexSet dom = 0;
    VertexSet sta = 0;
    std::vector<int> claims;
    for (const Move& m : history) {
      if (m.by == Player::Staller) {
        claims = respond(fresh, m.vertices.front(), dom, sta);
        sta |= make_set(m.vertices);
      } else {
        dom |= make_set(m.vertices);
      }
    }
    (void)s;
    if (claims.empty()) claims.push_back(filler(dom, sta));
    if (static_cast<int>(claims.size()) > b_) {
      throw std::logic_error("connector claims exceed the bias");
    }
    return dmove(std::move(claims));
  }

 private:
  struct Node {
    VertexSet mask = 0;
    VertexSet excl = 0;
  };

  bool good(VertexSet mask, VertexSet excl) const {
    const auto key = std::make_pair(mask, excl & mask);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    const bool ok =
        !find_problematic(tree_, mask, excl & mask, b_, kGoodnessCap).has_value();
    cache_.emplace(key, ok);
    return ok;
  }

  int filler(VertexSet dom, VertexSet sta) const {
    const VertexSet legal = tree_.full_mask() & ~dom & ~sta & ~exclusion_;
    return legal ? lowest_vertex(legal)
                 : lowest_vertex(tree_.full_mask() & ~dom & ~sta);
  }

  // Handles one Staller claim: splits the node around it, claims the
  // connectors of components that lost the property (single-vertex
  // components must be claimed outright), and claims some connector anyway
  // when the claim itself still needs dominating.
  std::vector<int> respond(std::vector<Node>& fresh, int w, VertexSet dom,
                           VertexSet sta) const {
    size_t at = fresh.size();
    for (size_t i = 0; i < fresh.size(); ++i) {
      if (vin(fresh[i].mask, w)) {
        at = i;
        break;
      }
    }
    if (at == fresh.size()) return {filler(dom, sta)};
    // A claim on a settled vertex is dead: no vertex that still needs
    // dominating has it in its closed neighbourhood. The decomposition
    // stands and a filler reply keeps the round budget.
    if (vin(fresh[at].excl, w)) return {filler(dom, sta | vbit(w))};
    const Node node = fresh[at];
    fresh.erase(fresh.begin() + static_cast<long>(at));
    const VertexSet taken = dom | sta | vbit(w);
    std::vector<int> claims;
    struct Child {
      VertexSet mask;
      VertexSet excl;
      int connector;
    };
    std::vector<Child> children;
    for (VertexSet comp : mask_components(tree_, node.mask & ~vbit(w))) {
      const int conn = lowest_vertex(comp & tree_.neighbor_mask(w));
      const VertexSet cexcl = node.excl & comp;
      if (set_size(comp) == 1) {
        // A lone leaf next to the claim has no second chance later.
        if (!vin(cexcl, conn) && !vin(taken, conn)) claims.push_back(conn);
        continue;
      }
      bool claim_conn = !good(comp, cexcl);
      if (claim_conn && (vin(cexcl, conn) || vin(taken, conn))) {
        claim_conn = false;  // forbidden or already settled
      }
      if (claim_conn) claims.push_back(conn);
      Child c{comp, cexcl, conn};
      if (claim_conn || vin(dom, conn)) c.excl |= vbit(conn);
      children.push_back(c);
    }
    const bool w_settled =
        vin(node.excl, w) || (tree_.neighbor_mask(w) & node.excl) != 0;
    if (claims.empty() && !w_settled && !children.empty()) {
      size_t pick = 0;
      for (size_t i = 1; i < children.size(); ++i) {
        if (children[i].connector < children[pick].connector) pick = i;
      }
      if (!vin(taken, children[pick].connector)) {
        claims.push_back(children[pick].connector);
        children[pick].excl |= vbit(children[pick].connector);
      }
    }
    for (const Child& c : children) fresh.push_back({c.mask, c.excl});
    if (claims.empty()) claims.push_back(filler(dom, sta | vbit(w)));
    return claims;
  }

  Graph tree_;
  VertexSet exclusion_;
  int b_;
  mutable std::map<std::pair<VertexSet, VertexSet>, bool> cache_;
};

// ---------------------------------------------------------------------------
// Matched pair on the balanced star chain.

class TkbBase {
 protected:
  TkbBase(int k, int b)
      : k_(k), b_(b), layout_(star_chain_layout(k, b)), board_(make_tkb(k, b)) {
    if (k < 2) throw std::invalid_argument("star chain strategies need k >= 2");
    for (size_t i = 0; i < layout_.centers.size(); ++i) {
      VertexSet star = vbit(layout_.centers[i]);
      for (int leaf : layout_.star_leaves[i]) star |= vbit(leaf);
      star_masks_.push_back(star);
    }
    rounds_ = gamma_tkb(k, b);
  }

  int star_of(int v) const {
    for (size_t i = 0; i < star_masks_.size(); ++i) {
      if (vin(star_masks_[i], v)) return static_cast<int>(i);
    }
    return -1;
  }

  int k_, b_;
  StarChainLayout layout_;
  Graph board_;
  std::vector<VertexSet> star_masks_;
  int rounds_ = 0;
};

class TkbDominator final : public Strategy, private TkbBase {
 public:
  TkbDominator(int k, int b) : TkbBase(k, b) {}

  std::string name() const override { return "star chain dominator"; }
  Player side() const override { return Player::Dominator; }

  bool applies_to(const GameConfig& cfg, const VariantRules& rules) const override {
    return cfg.board == board_ && cfg.bias == b_ &&
           cfg.first == Player::Staller && plain_rules(cfg, rules);
  }

  Guarantee declared_guarantee(const GameConfig&, const VariantRules&) const override {
    return {Guarantee::Kind::WinWithin, rounds_};
  }

  Move choose(const GameConfig& cfg, const GameState& s,
              const std::vector<Move>& history) const override {
    const int w = last_staller_vertex(history);
    VertexSet taken = s.claimed();
    std::vector<int> picks;
    const int j = w >= 0 ? star_of(w) : -1;
    if (j >= 0 && (star_masks_[j] & s.dominator) == 0) {
      for (int v : set_vertices(star_masks_[j] & ~taken)) picks.push_back(v);
      for (int v : picks) taken |= vbit(v);
    }
    // Spend what remains on centers of untouched stars, last star last.
    std::vector<int> order;
    for (int i = 0; i + 1 < static_cast<int>(star_masks_.size()); ++i) {
      order.push_back(i);
    }
    order.push_back(static_cast<int>(star_masks_.size()) - 1);
    for (int idx : order) {
      if (static_cast<int>(picks.size()) >= cfg.bias) break;
      if (star_masks_[idx] & (s.staller | s.dominator)) continue;
      const int center = layout_.centers[idx];
      if (vin(taken, center)) continue;
      picks.push_back(center);
      taken |= vbit(center);
    }
    if (picks.empty()) picks.push_back(lowest_vertex(free_mask(cfg, s)));
    return dmove(std::move(picks));
  }
};

class TkbStaller final : public Strategy, private TkbBase {
 public:
  TkbStaller(int k, int b) : TkbBase(k, b) {}

  std::string name() const override { return "star chain staller"; }
  Player side() const override { return Player::Staller; }

  bool applies_to(const GameConfig& cfg, const VariantRules& rules) const override {
    return cfg.board == board_ && cfg.bias == b_ &&
           cfg.first == Player::Staller && plain_rules(cfg, rules);
  }

  Guarantee declared_guarantee(const GameConfig&, const VariantRules&) const override {
    return {Guarantee::Kind::ForceAtLeast, rounds_};
  }

  Move choose(const GameConfig& cfg, const GameState& s,
              const std::vector<Move>&) const override {
    const VertexSet free = free_mask(cfg, s);
    const int round = set_size(s.staller) + 1;
    if (layout_.merged_last && round == 1) {
      const int v = layout_.centers.back();
      if (vin(free, v)) return smove(v);
    }
    // Immediate completion: one free vertex away from owning a closed
    // neighborhood.
    int best = -1;
    for (int z = 0; z < cfg.board.vertex_count(); ++z) {
      const VertexSet rem = cfg.board.closed_neighbor_mask(z) & ~s.staller;
      if (set_size(rem) != 1) continue;
      const int y = lowest_vertex(rem);
      if (!vin(free, y)) continue;
      if (best < 0 || y < best) best = y;
    }
    if (best >= 0) return smove(best);
    if (round < rounds_) {
      const int limit = layout_.merged_last
                            ? static_cast<int>(layout_.centers.size())
                            : static_cast<int>(layout_.centers.size()) - 1;
      for (int i = 0; i < limit; ++i) {
        if (vin(free, layout_.centers[i])) return smove(layout_.centers[i]);
      }
    }
    return smove(lowest_vertex(free));
  }
};

// ---------------------------------------------------------------------------
// Potential-rule Dominator.

class NeighborhoodBreakerDominator final : public Strategy {
 public:
  NeighborhoodBreakerDominator(Graph g, int b, NeighborhoodMode mode,
                               VertexSet subset)
      : g_(std::move(g)), b_(b), mode_(mode), subset_(subset) {
    if (b_ < 1) throw std::invalid_argument("bias must be at least 1");
    h_ = mode_ == NeighborhoodMode::Subset
             ? subset_neighborhood_hypergraph(g_, subset_)
             : neighborhood_hypergraph(g_);
  }

  std::string name() const override { return "neighborhood breaker dominator"; }
  Player side() const override { return Player::Dominator; }

  bool applies_to(const GameConfig& cfg, const VariantRules& rules) const override {
    if (!(cfg.board == g_) || cfg.bias != b_) return false;
    if (cfg.first != Player::Dominator || !plain_rules(cfg, rules)) return false;
    switch (mode_) {
      case NeighborhoodMode::Full:
        return beck_bound(h_, b_) == 0;
      case NeighborhoodMode::Subset: {
        if (!subset_) return false;
        for (int v = 0; v < g_.vertex_count(); ++v) {
          if ((g_.neighbor_mask(v) & subset_) == 0) return false;
        }
        return beck_bound(h_, b_) == 0;
      }
      case NeighborhoodMode::Fraction:
        return g_.min_degree() >= 1;
    }
    return false;
  }

  Guarantee declared_guarantee(const GameConfig&, const VariantRules&) const override {
    switch (mode_) {
      case NeighborhoodMode::Full:
        return {Guarantee::Kind::WinWithin, g_.vertex_count()};
      case NeighborhoodMode::Subset:
        return {Guarantee::Kind::WinWithin,
                static_cast<int>(ceil_div(set_size(subset_), b_))};
      case NeighborhoodMode::Fraction:
        return {Guarantee::Kind::DominateAtLeast,
                fraction_bound(g_.vertex_count(), b_)};
    }
    return {Guarantee::Kind::WinWithin, g_.vertex_count()};
  }

  Move choose(const GameConfig& cfg, const GameState& s,
              const std::vector<Move>&) const override {
    if (mode_ != NeighborhoodMode::Subset) {
      auto claims = beck_breaker_claims(h_, b_, s.staller, s.dominator);
      if (claims.empty()) claims.push_back(lowest_vertex(free_mask(cfg, s)));
      return dmove(std::move(claims));
    }
    // Subset play: greedy potential picks, padding inside the subset.
    std::vector<int> picks;
    VertexSet mine = s.dominator;
    for (int i = 0; i < b_; ++i) {
      const VertexSet free_a = subset_ & ~s.staller & ~mine;
      if (!free_a) break;
      int best = -1;
      double best_weight = -1.0;
      for (int v : set_vertices(free_a)) {
        double weight = 0.0;
        for (VertexSet f : h_.sets) {
          if ((f & mine) || !vin(f, v)) continue;
          weight += std::pow(1.0 + b_, -set_size(f & ~s.staller & ~mine));
        }
        if (weight > best_weight) {
          best_weight = weight;
          best = v;
        }
      }
      picks.push_back(best);
      mine |= vbit(best);
    }
    if (picks.empty()) picks.push_back(lowest_vertex(free_mask(cfg, s)));
    return dmove(std::move(picks));
  }

 private:
  Graph g_;
  int b_;
  NeighborhoodMode mode_;
  VertexSet subset_;
  Hypergraph h_;
};

// ---------------------------------------------------------------------------
// Private-domination attack.

class DstarStaller final : public Strategy {
 public:
  DstarStaller(Graph tree, int b) : tree_(std::move(tree)), b_(b) {
    if (b_ < 1) throw std::invalid_argument("bias must be at least 1");
    set_ = minimum_dominating_set(tree_);
    dstar_.assign(tree_.vertex_count(), 0);
    for (int w = 0; w < tree_.vertex_count(); ++w) {
      const int owner =
          vin(set_, w) ? w : lowest_vertex(tree_.neighbor_mask(w) & set_);
      ++dstar_[owner];
    }
    quota_ = static_cast<int>(ceil_div(set_size(set_), b_ + 1));
  }

  std::string name() const override { return "private domination staller"; }
  Player side() const override { return Player::Staller; }

  bool applies_to(const GameConfig& cfg, const VariantRules& rules) const override {
    return cfg.board == tree_ && cfg.bias == b_ &&
           cfg.first == Player::Staller && plain_rules(cfg, rules);
  }

  Guarantee declared_guarantee(const GameConfig& cfg, const VariantRules&) const override {
    return {Guarantee::Kind::ForceAtLeast,
            static_cast<int>(ceil_div(cfg.board.vertex_count(),
                                      static_cast<long long>(b_) * (b_ + 3)))};
  }

  Move choose(const GameConfig& cfg, const GameState& s,
              const std::vector<Move>&) const override {
    const VertexSet free = free_mask(cfg, s);
    if (set_size(s.staller) < quota_) {
      int best = -1;
      for (int v : set_vertices(set_ & free)) {
        if (best < 0 || dstar_[v] > dstar_[best]) best = v;
      }
      if (best >= 0) return smove(best);
    }
    return smove(lowest_vertex(free));
  }

 private:
  Graph tree_;
  int b_;
  VertexSet set_ = 0;
  std::vector<int> dstar_;
  int quota_ = 0;
};

// ---------------------------------------------------------------------------
// Stacked-tree Staller.

class AryStackStaller final : public Strategy {
 public:
  AryStackStaller(int b, int k)
      : b_(b), k_(k), board_(make_ary_stack(b, k)) {
    per_copy_ = ary_stack_vertex_count(b, k) / (b + 1);
  }

  std::string name() const override { return "stacked tree staller"; }
  Player side() const override { return Player::Staller; }

  bool applies_to(const GameConfig& cfg, const VariantRules& rules) const override {
    return cfg.board == board_ && cfg.bias == b_ &&
           cfg.first == Player::Dominator && plain_rules(cfg, rules);
  }

  Guarantee declared_guarantee(const GameConfig&, const VariantRules&) const override {
    return {Guarantee::Kind::ForceInfinity, 0};
  }

  Move choose(const GameConfig& cfg, const GameState& s,
              const std::vector<Move>& history) const override {
    const VertexSet free = free_mask(cfg, s);
    if (history.empty()) return smove(lowest_vertex(free));
    const VertexSet first = make_set(history.front().vertices);
    int copy = 0;
    for (; copy <= b_; ++copy) {
      if ((copy_mask(copy) & first) == 0) break;
    }
    if (copy > b_) return smove(lowest_vertex(free));
    const int base = copy * per_copy_;
    const VertexSet cm = copy_mask(copy);
    const VertexSet local_maker = (s.staller & cm) >> base;
    const VertexSet local_breaker = (s.dominator & cm) >> base;
    const auto mv = ary_maker_claim(b_ + 1, k_, local_maker, local_breaker);
    if (!mv.empty()) {
      const int v = mv.front() + base;
      if (vin(free, v)) return smove(v);
    }
    return smove(lowest_vertex(free));
  }

 private:
  VertexSet copy_mask(int copy) const {
    VertexSet m = 0;
    for (int i = 0; i < per_copy_; ++i) m |= vbit(copy * per_copy_ + i);
    return m;
  }

  int b_, k_;
  Graph board_;
  int per_copy_ = 0;
};

}  // namespace

// ---------------------------------------------------------------------------
// Factories.

std::unique_ptr<Strategy> lowest_free_dominator() {
  return std::make_unique<LowestFreeDominator>();
}

std::unique_ptr<Strategy> lowest_free_staller() {
  return std::make_unique<LowestFreeStaller>();
}

std::unique_ptr<Strategy> interval_dominator(int n, int k, int b, BoardKind kind) {
  return std::make_unique<IntervalDominator>(n, k, b, kind);
}

std::unique_ptr<Strategy> path_adversary_staller(PathFamilies fam) {
  return std::make_unique<PathAdversaryStaller>(std::move(fam));
}

std::unique_ptr<Strategy> star_pairing_dominator(Graph tree, AdmissibleSequence seq,
                                                 std::shared_ptr<Strategy> inner) {
  return std::make_unique<StarPairingDominator>(std::move(tree), std::move(seq),
                                                std::move(inner));
}

std::unique_ptr<Strategy> problematic_staller(Graph tree,
                                              ProblematicWitness witness) {
  return std::make_unique<ProblematicStaller>(std::move(tree), std::move(witness));
}

std::unique_ptr<Strategy> recursive_good_dominator(Graph tree, VertexSet exclusion,
                                                   int b) {
  return std::make_unique<RecursiveGoodDominator>(std::move(tree), exclusion, b);
}

std::unique_ptr<Strategy> tkb_dominator(int k, int b) {
  return std::make_unique<TkbDominator>(k, b);
}

std::unique_ptr<Strategy> tkb_staller(int k, int b) {
  return std::make_unique<TkbStaller>(k, b);
}

std::unique_ptr<Strategy> neighborhood_breaker_dominator(Graph g, int b,
                                                         NeighborhoodMode mode,
                                                         VertexSet subset) {
  return std::make_unique<NeighborhoodBreakerDominator>(std::move(g), b, mode,
                                                        subset);
}

VertexSet build_dominating_subset(const Graph& g, int b, uint64_t seed,
                                  const SubsetSamplingOptions& options) {
  (void)b;  // kept for interface parity with the play-side adapters
  const int n = g.vertex_count();
  if (n < 2) throw std::invalid_argument("subset sampling needs n >= 2");
  const int delta = g.min_degree();
  if (delta < 1) throw std::invalid_argument("subset sampling needs min degree 1");
  const double p =
      options.probability.value_or(9.0 * std::log(static_cast<double>(n)) / delta);
  const double size_limit = options.size_limit.value_or(10.0 / 9.0 * p * n);
  const double degree_threshold =
      options.degree_threshold.value_or(2.0 * std::log(static_cast<double>(n)));
  Rng rng(seed);
  for (int attempt = 0; attempt < options.max_retries; ++attempt) {
    VertexSet a = 0;
    for (int v = 0; v < n; ++v) {
      if (rng.next_double() < p) a |= vbit(v);
    }
    if (static_cast<double>(set_size(a)) > size_limit) continue;
    bool deep = true;
    for (int v = 0; v < n && deep; ++v) {
      if (static_cast<double>(set_size(g.neighbor_mask(v) & a)) <=
          degree_threshold) {
        deep = false;
      }
    }
    if (deep) return a;
  }
  throw std::runtime_error("subset sampling failed after " +
                           std::to_string(options.max_retries) + " attempts");
}

std::unique_ptr<Strategy> dstar_staller(Graph tree, int b) {
  return std::make_unique<DstarStaller>(std::move(tree), b);
}

std::unique_ptr<Strategy> arystack_staller(int b, int k) {
  return std::make_unique<AryStackStaller>(b, k);
}

}  // namespace mbd
