#include "doctest.h"

#include <fstream>
#include <functional>
#include <random>
#include <set>

#include "tgame/minimax.hpp"

using namespace tgame;

namespace {

using Set = std::set<std::uint64_t>;

// Two wins iff for every One move some allowed reply keeps Two winning.
bool two_wins(const FiniteGameSpec& g, std::uint64_t n, const Set& picks) {
  if (n == g.depth) {
    for (const auto& t : g.targets) {
      bool meets = false;
      for (auto x : t) meets = meets || picks.count(x);
      if (!meets) return false;
    }
    return true;
  }
  for (const auto& move : g.pool) {
    bool answered = false;
    std::size_t size = move.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << size) && !answered; ++mask) {
      if (static_cast<std::uint64_t>(__builtin_popcountll(mask)) > g.budget[n]) continue;
      Set next = picks;
      for (std::size_t b = 0; b < size; ++b)
        if (mask >> b & 1) next.insert(move[b]);
      answered = two_wins(g, n + 1, next);
    }
    if (!answered) return false;
  }
  return true;
}

Side brute(const FiniteGameSpec& g) { return two_wins(g, 0, {}) ? Side::two : Side::one; }

FiniteGameSpec load(const std::string& name) {
  std::ifstream in(std::string(TGAME_TEST_DATA) + "/" + name);
  return FiniteGameSpec::from_json(json::parse(in));
}

}  // namespace

TEST_CASE("solver agrees with brute force on random games") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 150; ++trial) {
    FiniteGameSpec g;
    g.ground = {0, 1, 2, 3, 4};
    auto subset = [&] {
      std::vector<std::uint64_t> s;
      for (std::uint64_t x = 0; x < 5; ++x)
        if (rng() % 2) s.push_back(x);
      if (s.empty()) s.push_back(rng() % 5);
      return s;
    };
    for (int i = 0, n = 1 + rng() % 3; i < n; ++i) g.pool.push_back(subset());
    for (int i = 0, n = 1 + rng() % 3; i < n; ++i) g.targets.push_back(subset());
    g.depth = 1 + rng() % 2;
    for (std::uint64_t i = 0; i < g.depth; ++i) g.budget.push_back(1 + rng() % 2);
    INFO(g.to_json().dump());
    auto sol = solve(g);
    CHECK(sol.winner == brute(g));
    CHECK(verify(g, sol.strategy, sol.winner));
  }
}

TEST_CASE("example games") {
  for (auto name : {"depth2_budget11.json", "depth1_budget1.json", "depth1_budget2.json"}) {
    auto g = load(name);
    auto sol = solve(g);
    INFO(name);
    CHECK(sol.winner == brute(g));
    CHECK(verify(g, sol.strategy, sol.winner));
  }
}

TEST_CASE("malformed input") {
  std::ifstream in(std::string(TGAME_TEST_DATA) + "/malformed.json");
  CHECK_THROWS(FiniteGameSpec::from_json(json::parse(in)));
  FiniteGameSpec g{{0, 1}, {{0, 5}}, {{0}}, 1, {1}};
  CHECK_THROWS_AS(g.validate(), std::invalid_argument);
  FiniteGameSpec short_budget{{0, 1}, {{0}}, {{0}}, 2, {1}};
  CHECK_THROWS_AS(short_budget.validate(), std::invalid_argument);
}

TEST_CASE("strategy trees are checked") {
  FiniteGameSpec g{{0, 1}, {{0, 1}}, {{0}}, 1, {1}};
  auto sol = solve(g);
  CHECK(sol.winner == Side::two);
  CHECK(verify(g, sol.strategy, Side::two));
  CHECK_THROWS_AS(verify(g, json::object(), Side::two), ShapeError);
  CHECK_THROWS_AS(verify(g, json::array(), Side::one), ShapeError);
  auto bad = two_strategy_from_policy(g, [](auto, const auto&, const auto&) { return std::vector<std::uint64_t>{1}; });
  CHECK_FALSE(verify(g, bad, Side::two));
  auto good = two_strategy_from_policy(g, [](auto, const auto&, const auto&) { return std::vector<std::uint64_t>{0}; });
  CHECK(verify(g, good, Side::two));
}

TEST_CASE("node cap") {
  auto g = load("depth2_budget11.json");
  CHECK_THROWS_AS(solve(g, 2), CapacityError);
}

TEST_CASE("truncated partition game") {
  PartitionConfig cfg{1};
  auto g1 = truncate_partition_space(cfg, 3, 3, 3, 1);
  CHECK_NOTHROW(g1.validate());
  auto g2 = truncate_partition_space(cfg, 3, 3, 3, 2);
  CHECK(solve(g1).winner == Side::one);
  CHECK(solve(g2).winner == Side::two);
}
