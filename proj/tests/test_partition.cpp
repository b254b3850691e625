#include "doctest.h"

#include <algorithm>
#include <functional>
#include <random>

#include "scripted.hpp"
#include "tgame/invariants.hpp"
#include "tgame/partition_space.hpp"

using namespace tgame;
using tgame::test::ScriptedOne;
using tgame::test::ScriptedTwo;

namespace {

Point pt(std::uint64_t n) { return PartitionSpace::point(n); }

PointSet pts(std::initializer_list<std::uint64_t> ns) {
  PointSet s;
  for (auto n : ns) s.insert(pt(n));
  return s;
}

// k-subsets of {0..n-1} listed in colex order.
std::vector<std::vector<std::uint64_t>> colex_subsets(std::uint64_t k, std::uint64_t n) {
  std::vector<std::vector<std::uint64_t>> out;
  std::vector<std::uint64_t> cur;
  std::function<void(std::uint64_t)> rec = [&](std::uint64_t start) {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::uint64_t v = start; v < n; ++v) {
      cur.push_back(v);
      rec(v + 1);
      cur.pop_back();
    }
  };
  rec(0);
  std::sort(out.begin(), out.end(), [](auto a, auto b) {
    std::reverse(a.begin(), a.end());
    std::reverse(b.begin(), b.end());
    return a < b;
  });
  return out;
}

// Every fat branch prefix of the given length with entries below `width`,
// as the set of points it covers.
struct BruteCovers {
  std::vector<PointSet> covers;

  BruteCovers(std::uint64_t k, std::uint64_t width, std::size_t length) {
    auto ksets = colex_subsets(k, width + k);
    Seq g;
    std::function<void()> rec = [&]() {
      if (g.size() == length) {
        PointSet c;
        Seq s;
        for (std::size_t j = 0; j < g.size(); ++j) {
          for (auto m : ksets[g[j]]) {
            Seq q = s;
            q.push_back(m);
            c.insert(Point(q));
          }
          s.push_back(g[j]);
        }
        covers.push_back(std::move(c));
        return;
      }
      for (std::uint64_t v = 0; v < width; ++v) {
        g.push_back(v);
        rec();
        g.pop_back();
      }
    };
    rec();
  }

  bool covered(const PointSet& b) const {
    return std::any_of(covers.begin(), covers.end(),
                       [&](const PointSet& c) { return std::includes(c.begin(), c.end(), b.begin(), b.end()); });
  }
};

}  // namespace

TEST_CASE("points and K-sets") {
  PartitionSpace x1({1});
  CHECK(pt(0) == Point{0});
  CHECK(pt(2) == Point{1});
  CHECK(pt(4) == (Point{0, 1}));
  CHECK(PartitionSpace::block_of(pt(4)) == Seq{0});
  CHECK(x1.kset({}, 0) == pts({0}));
  PartitionSpace x2({2});
  CHECK(x2.kset({}, 0) == pts({0, 2}));
  CHECK(x2.kset_positions(2) == std::vector<std::uint64_t>{1, 2});
  CHECK(x2.least_kset_containing({0}) == 0);
  CHECK(x2.least_kset_containing({1}) == 0);
  CHECK(x2.least_kset_containing({2}) == 1);
  auto ks = colex_subsets(2, 8);
  for (std::uint64_t i = 0; i < ks.size(); ++i) CHECK(x2.kset_positions(i) == ks[i]);
}

TEST_CASE("single fat branch coverage") {
  PartitionSpace x1({1});
  auto w = covered_by_single_fat_branch(x1, pts({0, 4}));
  REQUIRE(w);
  CHECK(w->g == Seq{0, 1});
  auto covered = w->covered(x1);
  CHECK(covered.count(pt(0)) == 1);
  CHECK(covered.count(pt(4)) == 1);
  CHECK_FALSE(covered_by_single_fat_branch(x1, pts({0, 2})));
  PartitionSpace x2({2});
  for (std::uint64_t i = 0; i < 5; ++i) {
    auto k = x2.kset({3}, i);
    auto wk = covered_by_single_fat_branch(x2, k);
    REQUIRE(wk);
    CHECK(wk->g.size() >= 2);
    CHECK(wk->g[0] == 3);
    CHECK(wk->g[1] == i);
  }
}

TEST_CASE("coverage agrees with brute force") {
  for (std::uint64_t k : {1, 2}) {
    PartitionSpace x({k});
    BruteCovers brute(k, k == 1 ? 12 : 30, 3);
    std::mt19937_64 rng(7 + k);
    std::vector<Point> small;
    for (std::uint64_t n = 0; n < 40; ++n)
      if (pt(n).size() <= 3 && std::all_of(pt(n).seq().begin(), pt(n).seq().end(), [](auto v) { return v < 4; }))
        small.push_back(pt(n));
    for (int trial = 0; trial < 300; ++trial) {
      PointSet b;
      std::size_t size = 1 + rng() % (k + 2);
      while (b.size() < size) b.insert(small[rng() % small.size()]);
      INFO("k=" << k << " b=" << to_string(b));
      CHECK(covered_by_single_fat_branch(x, b).has_value() == brute.covered(b));
    }
  }
}

TEST_CASE("uncoverable subsets") {
  PartitionSpace x1({1});
  PartitionSpace x2({2});
  CHECK(find_uncoverable_subset(x1, x1.enumerate(x1.block({}), 6)) == pts({0, 2}));
  CHECK(find_uncoverable_subset(x2, x2.enumerate(x2.block({}), 12)) == pts({0, 2, 5}));
  auto one_kset = x2.kset({1}, 4);
  CHECK_FALSE(find_uncoverable_subset(x2, {one_kset.begin(), one_kset.end()}));
  CHECK(uncoverable_subset_of(x1, x1.full()) == pts({0, 2}));
  CHECK_THROWS_AS(uncoverable_subset_of(x2, x2.make({KSetAtom{{}, 0}})), std::runtime_error);
  auto b = uncoverable_subset_of(x2, x2.make({BlockAtom{{2}}}));
  CHECK(b.size() == 3);
  CHECK_FALSE(covered_by_single_fat_branch(x2, b));
}

TEST_CASE("down sets") {
  PartitionSpace x1({1});
  CHECK(down_set(x1, pts({0})).empty());
  CHECK(down_set(x1, pts({4})) == pts({0}));
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    PointSet y, bigger;
    for (int i = 0; i < 3; ++i) y.insert(pt(rng() % 200));
    bigger = y;
    bigger.insert(pt(rng() % 200));
    auto dy = down_set(x1, y);
    auto db = down_set(x1, bigger);
    CHECK(std::includes(db.begin(), db.end(), dy.begin(), dy.end()));
  }
}

TEST_CASE("Z sets") {
  PartitionSpace x1({1});
  auto z = z_restrict(x1, x1.full(), pts({0}));
  CHECK(x1.contains(z, pt(0)));
  CHECK_FALSE(x1.contains(z, pt(2)));
  for (const auto& q : x1.enumerate(x1.block({0}), 20)) CHECK(x1.contains(z, q));
  for (const auto& q : x1.enumerate(x1.block({1}), 20)) CHECK_FALSE(x1.contains(z, q));
  CHECK(x1.contains(z, Point{0, 0, 5}));
  CHECK(x1.clusters_at_p(z));
  auto empty = z_restrict(x1, x1.block({1}), pts({0}));
  CHECK_FALSE(x1.clusters_at_p(empty));
  CHECK(x1.enumerate(empty, 5).empty());
  auto none = z_set(x1, pts({0, 2}));
  CHECK(x1.enumerate(none, 5).empty());
}

TEST_CASE("Z set membership agrees with brute force") {
  for (std::uint64_t k : {1, 2}) {
    PartitionSpace x({k});
    BruteCovers brute(k, k == 1 ? 12 : 30, 3);
    std::vector<PointSet> ds = {pts({0}), pts({4}), pts({0, 4}), pts({2}), pts({9})};
    if (k == 2) ds.push_back(pts({0, 2}));
    for (const auto& d : ds) {
      auto z = z_set(x, d);
      for (std::uint64_t n = 0; n < 30; ++n) {
        auto q = pt(n);
        if (q.size() > 3) continue;
        PointSet b = d;
        b.insert(q);
        INFO("k=" << k << " D=" << to_string(d) << " i=" << n);
        CHECK(x.contains(z, q) == brute.covered(b));
      }
    }
  }
}

TEST_CASE("set algebra") {
  PartitionSpace x1({1});
  auto a = x1.remove_finite(x1.full(), pts({2}));
  auto b = x1.block({});
  auto meet = intersect(x1, a, b);
  auto diff = subtract(x1, a, b);
  for (std::uint64_t n = 0; n < 300; ++n) {
    auto q = pt(n);
    bool in_a = x1.contains(a, q), in_b = x1.contains(b, q);
    CHECK(x1.contains(meet, q) == (in_a && in_b));
    CHECK(x1.contains(diff, q) == (in_a && !in_b));
  }
}

TEST_CASE("fat branch load") {
  PartitionSpace x1({1});
  CHECK(max_fat_branch_load(x1, pts({0, 2})).first == 1);
  CHECK(max_fat_branch_load(x1, pts({0, 4})).first == 2);
  CHECK(max_fat_branch_load(x1, {}).first == 0);
}

TEST_CASE("EUB strategy") {
  PartitionSpace x1({1});
  ScriptedOne one({x1.full(), x1.block({0}), x1.block({}), x1.full()});
  EubStrategy two;
  auto t = run_play(x1, BoundSpec::constant(2), one, two, 6);
  REQUIRE(t.innings.size() == 6);
  CHECK_FALSE(t.abort);
  CHECK(t.innings[0].two == pts({0, 2}));
  CHECK(t.innings[0].annotations["E"].size() == 2);
  std::size_t last = 0;
  for (const auto& inn : t.innings) {
    std::size_t e = inn.annotations["E"].size();
    CHECK(e >= inn.n + 2);
    CHECK(e > last);
    last = e;
  }
  CHECK(evaluate(x1, t, {eub_invariant()}));
  CHECK(max_fat_branch_load(x1, two.witness()).first <= 1);
}

TEST_CASE("fat branch strategy") {
  PartitionSpace x2({2});
  FatBranchStrategy one;
  ScriptedTwo two({pts({0}), {}});
  auto t = run_play(x2, BoundSpec::constant(2), one, two, 3);
  REQUIRE(t.innings.size() == 3);
  CHECK(t.innings[0].one == x2.block({}));
  CHECK(t.innings[1].one == x2.block({0}));
  CHECK(t.innings[2].one == x2.block({0, 0}));
  CHECK(evaluate(x2, t, {fatbranch_confinement()}));
}
