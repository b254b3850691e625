#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "suites.hpp"

using tgame::cli::SuiteReport;

namespace {

struct Criterion {
  int id;
  std::string title;
  std::function<SuiteReport()> run;
  double limit;
};

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {1, "partition EUB suite", tgame::cli::eub_suite, 60},
      {2, "partition fat-branch suite", tgame::cli::fatbranch_suite, 30},
      {3, "tree suite", tgame::cli::tree_suite, 30},
      {4, "fan Markov suite", tgame::cli::fan_suite, 10},
      {5, "Scheepers suite", tgame::cli::scheepers_suite, 30},
      {6, "translator suite", tgame::cli::translator_suite, 60},
      {7, "AD-family suite", tgame::cli::adfamily_suite, 60},
      {8, "minimax oracle suite", tgame::cli::minimax_suite, 120},
      {9, "infrastructure", tgame::cli::infrastructure_suite, 60},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    SuiteReport r = c.run();
    bool in_time = r.seconds < c.limit;
    bool ok = r.ok() && in_time;
    failed += !ok;
    std::printf("criterion %d %s: %s (%.2f s, limit %.0f s)\n", c.id, c.title.c_str(), ok ? "PASS" : "FAIL", r.seconds,
                c.limit);
    for (const auto& l : r.lines) std::printf("    [%s] %s: %s\n", l.ok ? "ok" : "FAIL", l.name.c_str(), l.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
