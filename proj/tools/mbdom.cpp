#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "mbd/families.hpp"
#include "mbd/game.hpp"
#include "mbd/goodness.hpp"
#include "mbd/graph.hpp"
#include "mbd/solver.hpp"
#include "mbd/strategies.hpp"
#include "mbd/verification.hpp"

namespace {

using nlohmann::json;

struct BoardOpts {
  std::string graph_file;
  std::string family;
  int n = 0;
  int k = 1;
  int s = 0;
  int t = 0;
  int branching = 2;
  int levels = 2;
};

void add_board_flags(CLI::App* cmd, BoardOpts& bo) {
  auto* gf = cmd->add_option("--graph", bo.graph_file,
                             "board file: header 'n m', then one edge per line");
  auto* fam = cmd->add_option("--family", bo.family, "named board family");
  gf->excludes(fam);
  fam->excludes(gf);
  cmd->add_option("--n", bo.n, "vertex count parameter");
  cmd->add_option("--k", bo.k, "power / chain parameter");
  cmd->add_option("--s", bo.s, "chain block count");
  cmd->add_option("--t", bo.t, "star count");
  cmd->add_option("--branching", bo.branching, "tree branching factor");
  cmd->add_option("--levels", bo.levels, "tree edge levels");
}

mbd::Graph build_board(const BoardOpts& bo, int bias) {
  if (!bo.graph_file.empty()) return mbd::read_graph_file(bo.graph_file);
  if (bo.family.empty()) {
    throw std::invalid_argument("need --graph FILE or --family NAME");
  }
  mbd::FamilySpec spec;
  spec.kind = mbd::parse_family_name(bo.family);
  spec.n = bo.n;
  spec.k = bo.k;
  spec.b = bias;
  spec.s = bo.s;
  spec.t = bo.t;
  spec.branching = bo.branching;
  spec.levels = bo.levels;
  return mbd::construct(spec);
}

std::vector<int> parse_vertex_list(const std::string& text) {
  std::vector<int> out;
  std::string piece;
  std::istringstream in(text);
  while (std::getline(in, piece, ',')) {
    std::istringstream ps(piece);
    int v;
    while (ps >> v) out.push_back(v);
    if (!ps.eof()) throw std::invalid_argument("bad vertex list: " + text);
  }
  if (out.empty()) throw std::invalid_argument("empty vertex list");
  return out;
}

mbd::VertexSet parse_set_flag(const std::string& text) {
  if (text.empty()) return 0;
  return mbd::make_set(parse_vertex_list(text));
}

int run_solve(const BoardOpts& bo, int bias, const std::string& first_str,
              int cap, bool unrestricted, bool want_pv, bool as_json) {
  const mbd::Graph g = build_board(bo, bias);
  const mbd::GameConfig cfg{g, bias, mbd::parse_player(first_str)};
  mbd::SolverOptions opts;
  opts.cap = cap;
  opts.unrestricted_dominator = unrestricted;
  opts.want_pv = want_pv || as_json;
  const mbd::SolveReport rep = mbd::solve_rounds(cfg, opts);
  if (as_json) {
    json j;
    if (rep.value.is_finite()) {
      j["value"] = rep.value.rounds;
    } else {
      j["value"] = "infinity";
    }
    j["states"] = rep.states_visited;
    j["pv"] = json::array();
    for (const auto& m : rep.principal_variation) j["pv"].push_back(mbd::format_move(m));
    std::cout << j.dump() << "\n";
    return 0;
  }
  std::cout << "value: " << mbd::to_string(rep.value) << "\n";
  std::cout << "states: " << rep.states_visited << "\n";
  if (opts.want_pv && !rep.principal_variation.empty()) {
    std::cout << "pv:";
    for (const auto& m : rep.principal_variation) std::cout << " [" << mbd::format_move(m) << "]";
    std::cout << "\n";
  }
  return 0;
}

int run_check_good(const BoardOpts& bo, int bias, const std::string& exclusion_str,
                   bool dominator_first, bool as_json) {
  const mbd::Graph g = build_board(bo, bias);
  if (dominator_first) {
    if (!exclusion_str.empty()) {
      throw std::invalid_argument("--exclusion only applies to the goodness check");
    }
    const auto opening = mbd::dominator_first_set(g, bias);
    if (as_json) {
      json j;
      j["winnable"] = opening.has_value();
      if (opening) j["opening"] = mbd::set_vertices(*opening);
      std::cout << j.dump() << "\n";
    } else if (opening) {
      std::cout << "winnable: yes; A=" << mbd::set_to_string(*opening) << "\n";
    } else {
      std::cout << "winnable: no\n";
    }
    return 0;
  }
  const mbd::VertexSet exclusion = parse_set_flag(exclusion_str);
  const auto witness = mbd::find_problematic(g, exclusion, bias);
  if (as_json) {
    json j;
    j["bias"] = bias;
    j["good"] = !witness.has_value();
    if (witness) {
      j["witness"] = {{"sequence", witness->seq.vertices},
                      {"exposed", witness->exposed}};
    }
    std::cout << j.dump() << "\n";
    return 0;
  }
  std::cout << bias << "-good: ";
  if (witness) {
    std::cout << "no; witness: " << witness->to_string() << "\n";
  } else {
    std::cout << "yes\n";
  }
  return 0;
}

int run_construct(const BoardOpts& bo, int bias, const std::string& out_path,
                  bool list) {
  if (list) {
    for (const auto& name : mbd::family_names()) std::cout << name << "\n";
    return 0;
  }
  if (bo.family.empty()) {
    throw std::invalid_argument("construct needs --family NAME (or --list)");
  }
  const mbd::Graph g = build_board(bo, bias);
  std::ostringstream comment;
  comment << bo.family;
  if (bo.n) comment << " n=" << bo.n;
  if (bo.k) comment << " k=" << bo.k;
  if (bias) comment << " b=" << bias;
  if (bo.s) comment << " s=" << bo.s;
  if (bo.t) comment << " t=" << bo.t;
  if (out_path.empty()) {
    mbd::write_graph(std::cout, g, comment.str());
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot open " + out_path);
    mbd::write_graph(out, g, comment.str());
  }
  return 0;
}

int run_verify(const std::string& suite, bool as_json) {
  std::vector<mbd::SuiteResult> results;
  if (suite == "all") {
    results = mbd::run_all_suites();
  } else {
    results.push_back(mbd::run_suite(suite));
  }
  int total = 0;
  int failed = 0;
  json jsuites = json::array();
  for (const auto& sr : results) {
    json jcases = json::array();
    for (const auto& c : sr.cases) {
      ++total;
      if (!c.pass) ++failed;
      if (as_json) {
        jcases.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
      } else {
        std::cout << (c.pass ? "PASS" : "FAIL") << " [" << sr.suite << "] "
                  << c.name;
        if (!c.detail.empty()) std::cout << " (" << c.detail << ")";
        std::cout << "\n";
      }
    }
    if (as_json) jsuites.push_back({{"suite", sr.suite}, {"cases", jcases}});
  }
  if (as_json) {
    json j;
    j["suites"] = jsuites;
    j["total"] = total;
    j["failed"] = failed;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << total << " cases, " << failed << " failed\n";
  }
  return failed == 0 ? 0 : 1;
}

int run_play(const BoardOpts& bo, int bias, const std::string& first_str,
             const std::string& as_str, std::uint64_t seed) {
  (void)seed;  // accepted for reproducible transcripts; the engine is deterministic
  const mbd::Graph g = build_board(bo, bias);
  const mbd::GameConfig cfg{g, bias, mbd::parse_player(first_str)};
  const mbd::Player user = mbd::parse_player(as_str);
  const mbd::Player engine = mbd::opponent(user);
  const bool exact = g.vertex_count() <= mbd::default_solver_cap(bias);
  const auto fallback = engine == mbd::Player::Dominator
                            ? mbd::lowest_free_dominator()
                            : mbd::lowest_free_staller();
  std::cout << "board: " << g.vertex_count() << " vertices, bias " << bias
            << ", " << mbd::player_name(cfg.first) << " first\n";
  std::cout << "you play " << mbd::player_letter(user) << "; engine plays "
            << mbd::player_letter(engine) << " ("
            << (exact ? "exact" : "greedy") << ")\n";
  mbd::GameState st = mbd::initial_state(cfg);
  std::vector<mbd::Move> hist;
  while (true) {
    const mbd::GameStatus status = mbd::game_status(cfg, st);
    if (!status.ongoing()) {
      std::cout << mbd::format_status(status) << "\n";
      return 0;
    }
    if (st.to_move == user) {
      std::cout << "your move (" << mbd::player_letter(user) << "): "
                << std::flush;
      std::string line;
      if (!std::getline(std::cin, line)) {
        std::cout << "\nquit\n";
        return 0;
      }
      while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) {
        line.pop_back();
      }
      if (line == "quit" || line == "q") {
        std::cout << "quit\n";
        return 0;
      }
      try {
        mbd::Move m;
        if (line.size() > 1 && (line[0] == 'D' || line[0] == 'S') &&
            line[1] == ' ') {
          m = mbd::parse_move(line);
          if (m.by != user) {
            std::cout << "that claim belongs to the other side; try again\n";
            continue;
          }
        } else {
          m = mbd::Move{user, parse_vertex_list(line)};
        }
        st = mbd::apply_move(cfg, st, m);
        hist.push_back(m);
        std::cout << "you: " << mbd::format_move(m) << "\n";
      } catch (const mbd::IllegalMoveError& e) {
        std::cout << "illegal move: " << e.what() << "\n";
      } catch (const std::exception& e) {
        std::cout << "cannot read that: " << e.what() << "\n";
      }
      continue;
    }
    mbd::Move m{engine, {}};
    if (exact) {
      const auto bm = mbd::best_move(cfg, st);
      if (bm) m = *bm;
    }
    if (m.vertices.empty()) m = fallback->choose(cfg, st, hist);
    st = mbd::apply_move(cfg, st, m);
    hist.push_back(m);
    std::cout << "engine: " << mbd::format_move(m) << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"maker-breaker domination workbench"};
  app.require_subcommand(1);

  BoardOpts solve_bo, good_bo, cons_bo, play_bo;
  int solve_bias = 1, good_bias = 1, cons_bias = 0, play_bias = 1;
  std::string solve_first = "D", play_first = "D", play_as = "S";
  int solve_cap = 0;
  bool solve_unrestricted = false, solve_pv = false, solve_json = false;
  std::string good_exclusion;
  bool good_dfirst = false, good_json = false;
  std::string cons_out;
  bool cons_list = false;
  std::string verify_suite = "all";
  bool verify_json = false;
  std::uint64_t play_seed = 0;

  auto* solve = app.add_subcommand("solve", "exact game value of a position");
  add_board_flags(solve, solve_bo);
  solve->add_option("--bias", solve_bias, "dominator claims per round");
  solve->add_option("--first", solve_first, "who moves first: D or S");
  solve->add_option("--cap", solve_cap, "override the board-size cap");
  solve->add_flag("--unrestricted", solve_unrestricted,
                  "let the dominator claim fewer than bias vertices");
  solve->add_flag("--pv", solve_pv, "print one optimal line");
  solve->add_flag("--json", solve_json, "machine-readable output");

  auto* good = app.add_subcommand("check-good",
                                  "reduction-based tree characterizations");
  add_board_flags(good, good_bo);
  good->add_option("--bias", good_bias, "dominator claims per round");
  good->add_option("--exclusion", good_exclusion,
                   "comma-separated reserved vertices");
  good->add_flag("--dominator-first", good_dfirst,
                 "search for a winning opening set instead");
  good->add_flag("--json", good_json, "machine-readable output");

  auto* cons = app.add_subcommand("construct", "emit a named board family");
  add_board_flags(cons, cons_bo);
  cons->add_option("--bias", cons_bias, "family bias parameter");
  cons->add_option("--out", cons_out, "write to a file instead of stdout");
  cons->add_flag("--list", cons_list, "list family names");

  auto* verify = app.add_subcommand("verify",
                                    "cross-check closed forms against play");
  auto names = mbd::suite_names();
  names.push_back("all");
  verify->add_option("--suite", verify_suite, "suite name or 'all'")
      ->check(CLI::IsMember(names));
  verify->add_flag("--json", verify_json, "machine-readable output");

  auto* play = app.add_subcommand("play", "interactive match against the engine");
  add_board_flags(play, play_bo);
  play->add_option("--bias", play_bias, "dominator claims per round");
  play->add_option("--first", play_first, "who moves first: D or S");
  play->add_option("--as", play_as, "your side: D or S");
  play->add_option("--seed", play_seed, "transcript reproducibility token");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (solve->parsed()) {
      return run_solve(solve_bo, solve_bias, solve_first, solve_cap,
                       solve_unrestricted, solve_pv, solve_json);
    }
    if (good->parsed()) {
      return run_check_good(good_bo, good_bias, good_exclusion, good_dfirst,
                            good_json);
    }
    if (cons->parsed()) {
      return run_construct(cons_bo, cons_bias, cons_out, cons_list);
    }
    if (verify->parsed()) {
      return run_verify(verify_suite, verify_json);
    }
    if (play->parsed()) {
      return run_play(play_bo, play_bias, play_first, play_as, play_seed);
    }
  } catch (const mbd::GraphParseError& e) {
    std::cerr << "parse error at line " << e.line() << ": " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const mbd::CapExceededError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
