#pragma once

#include <string>
#include <vector>

namespace mbd {

struct CaseResult {
  std::string name;
  bool pass = false;
  std::string detail;  // populated on failure, optional context otherwise
};

struct SuiteResult {
  std::string suite;
  std::vector<CaseResult> cases;

  bool pass() const;
  int failed() const;
  void merge(const SuiteResult& other);
};

// Each checker cross-checks one closed form, characterization, or certified
// strategy against exhaustive play at desk scale. All of them are pure
// functions of the library; the CLI and the acceptance runner only format
// their output.
SuiteResult check_power_values();                // interval formula vs solver
SuiteResult check_goodness_characterization();   // witness-free <=> finite value
SuiteResult check_dominator_start();             // opening set <=> finite value
SuiteResult check_tree_matching_values();        // unbiased tree formulas vs solver
SuiteResult check_chain_reduction();             // forcing-chain plateau vs solver
SuiteResult check_star_chain_values();           // star chain value, both strategies
SuiteResult check_tree_value_bounds();           // general bounds on tree values
SuiteResult check_fraction_guarantee();          // guaranteed dominated fraction
SuiteResult check_min_degree_condition();        // degree threshold for finite value
SuiteResult check_potential_bound();             // weight bound vs exhaustive counts
SuiteResult check_sampled_subset();              // random subset sampler contracts
SuiteResult check_board_certificates();          // strategy pair on power boards
SuiteResult check_tree_certificates();           // strategy pair on small trees
SuiteResult check_value_order();                 // case exclusivity and ordering

// Named groups for the CLI. Suite names:
//   powers, trees-b1, characterization, dominator-first, residue, tkb,
//   bounds, fraction, mindeg, beck, matching-order
std::vector<std::string> suite_names();
SuiteResult run_suite(const std::string& name);  // throws std::invalid_argument
std::vector<SuiteResult> run_all_suites();

}  // namespace mbd
