#pragma once

#include <string>
#include <vector>

namespace tgame::cli {

struct CheckLine {
  std::string name;
  bool ok = true;
  std::string detail;
};

struct SuiteReport {
  std::string name;
  std::vector<CheckLine> lines;
  double seconds = 0;
  bool ok() const;
};

SuiteReport eub_suite();             // EUB strategy on X_1, X_2
SuiteReport fatbranch_suite();       // One's fat-branch strategy on X_1..X_3
SuiteReport tree_suite();            // branch and pair strategies
SuiteReport fan_suite();             // Markov strategy
SuiteReport scheepers_suite();       // F properties, intersection law, F-plays
SuiteReport translator_suite();      // strategy translators
SuiteReport adfamily_suite();        // almost disjoint family prefix law
SuiteReport minimax_suite();         // surrogate solver
SuiteReport infrastructure_suite();  // transcript round trip, determinism

/// partition, tree, fan, scheepers, translators, adfamily, minimax,
/// infrastructure, all.
std::vector<std::string> suite_names();
/// Throws std::invalid_argument on an unknown name.
std::vector<SuiteReport> run_suites(const std::string& name);

}  // namespace tgame::cli
