#include "doctest.h"

#include "scripted.hpp"
#include "tgame/fan_space.hpp"
#include "tgame/partition_space.hpp"
#include "tgame/tree_space.hpp"

using namespace tgame;
using tgame::test::ScriptedOne;
using tgame::test::ScriptedTwo;

namespace {

std::vector<std::uint64_t> numbers(const std::vector<Point>& pts) {
  std::vector<std::uint64_t> out;
  for (const auto& q : pts) out.push_back(*PartitionSpace::number(q));
  return out;
}

PointSet fan_set(std::initializer_list<std::pair<std::uint64_t, std::uint64_t>> cells) {
  PointSet s;
  for (auto [n, m] : cells) s.insert(FanSpace::point(n, m));
  return s;
}

}  // namespace

TEST_CASE("clustering of descriptors") {
  FanSpace fan;
  TreeSpace tree;
  PartitionSpace x1({1});
  CHECK(fan.clusters_at_p(fan.column(3)));
  CHECK_FALSE(fan.clusters_at_p(fan.make({}, fan_set({{0, 0}, {1, 0}, {2, 0}}))));
  CHECK(fan.clusters_at_p(fan.remove_finite(fan.full(), fan_set({{0, 0}}))));
  CHECK(tree.clusters_at_p(tree.children(Point{})));
  CHECK_FALSE(tree.clusters_at_p(tree.make({}, {Point{0}, Point{1}})));
  PointSet first_ten;
  for (std::uint64_t i = 0; i < 10; ++i) first_ten.insert(Point{3, i});
  CHECK(tree.clusters_at_p(tree.remove_finite(tree.children(Point{3}), first_ten)));
  CHECK(x1.clusters_at_p(x1.remove_finite(x1.block({}), {PartitionSpace::point(0), PartitionSpace::point(2)})));
  CHECK(x1.clusters_at_p(x1.remove_finite(x1.block({5}), {PartitionSpace::point(0)})));
  CHECK_FALSE(x1.clusters_at_p(x1.make({KSetAtom{{}, 0}})));
}

TEST_CASE("enumeration and finite removal") {
  PartitionSpace x1({1});
  FanSpace fan;
  CHECK(numbers(x1.enumerate(x1.block({}), 3)) == std::vector<std::uint64_t>{0, 2, 5});
  CHECK(x1.enumerate(x1.make(), 5).empty());
  CHECK(fan.enumerate(fan.column(1), 2) == std::vector<Point>{FanSpace::point(1, 0), FanSpace::point(1, 1)});
  auto d = x1.remove_finite(x1.block({}), {PartitionSpace::point(0)});
  CHECK(numbers(x1.enumerate(d, 3)) == std::vector<std::uint64_t>{2, 5, 9});
  auto same = fan.remove_finite(fan.column(2), {});
  CHECK(fan.enumerate(same, 20) == fan.enumerate(fan.column(2), 20));
  auto many = fan.enumerate(fan.full(), 300);
  CHECK(std::is_sorted(many.begin(), many.end()));
  CHECK(std::adjacent_find(many.begin(), many.end()) == many.end());
}

TEST_CASE("blocks partition an initial segment of omega") {
  PartitionSpace x2({2});
  std::set<Seq> blocks;
  for (std::uint64_t n = 0; n < 10000; ++n) {
    Point q = PartitionSpace::point(n);
    CHECK(PartitionSpace::number(q) == n);
    CHECK(x2.contains(x2.block(PartitionSpace::block_of(q)), q));
    blocks.insert(PartitionSpace::block_of(q));
  }
  for (const auto& s : blocks) {
    for (const auto& q : x2.enumerate(x2.block(s), 5))
      CHECK(PartitionSpace::block_of(q) == s);
  }
}

TEST_CASE("descriptor validation and json") {
  FanSpace fan;
  TreeSpace tree;
  CHECK_THROWS_AS(fan.validate(fan.make({ChildrenAtom{}})), DescriptorError);
  CHECK_THROWS_AS(fan.validate(fan.make({}, {Point{1, 2}})), DescriptorError);
  auto d = fan.remove_finite(fan.column(4), fan_set({{4, 0}}));
  CHECK(fan.descriptor_from_json(fan.to_json(d)) == d);
  auto t = tree.make({ChildrenAtom{{2, 0}}}, {Point{7}});
  CHECK(tree.descriptor_from_json(tree.to_json(t)) == t);
}

TEST_CASE("branch strategy follows Two's picks") {
  TreeSpace tree;
  ScriptedTwo two({{Point{4}}, {Point{4, 0}}});
  BranchStrategy one;
  auto t = run_play(tree, BoundSpec::constant(1), one, two, 2);
  REQUIRE(t.innings.size() == 2);
  CHECK(t.innings[0].one == tree.children(Point{}));
  CHECK(t.innings[1].one == tree.children(Point{4}));
}

TEST_CASE("branch strategy against least picks") {
  TreeSpace tree;
  BranchStrategy one;
  class Least final : public TwoStrategy {
   public:
    std::string name() const override { return "least"; }
    TwoMove respond(const PlayView& v, const Descriptor& d) override { return {{v.space.enumerate(d, 1)[0]}}; }
  } two;
  auto t = run_play(tree, BoundSpec::constant(1), one, two, 3);
  REQUIRE(t.innings.size() == 3);
  CHECK(t.innings[0].two == PointSet{Point{0}});
  CHECK(t.innings[1].two == PointSet{Point{0, 0}});
  CHECK(t.innings[2].two == PointSet{Point{0, 0, 0}});
  CHECK(t.innings[2].one == tree.children(Point{0, 0}));
}

TEST_CASE("pair strategy keeps an antichain witness") {
  TreeSpace tree;
  ScriptedOne one({tree.children(Point{}), tree.children(Point{0})});
  PairStrategy two;
  auto t = run_play(tree, BoundSpec::constant(2), one, two, 2);
  REQUIRE(t.innings.size() == 2);
  CHECK(t.innings[0].two == PointSet{Point{0}, Point{1}});
  CHECK(t.innings[1].two == PointSet{Point{0, 0}, Point{0, 1}});
  CHECK(two.witness() == PointSet{Point{1}, Point{0, 0}, Point{0, 1}});
  CHECK(pairwise_incomparable(two.witness()));
}

TEST_CASE("antichain extraction") {
  auto r = extract_antichain({Point{0}, Point{1}, Point{2}}, 3);
  REQUIRE(r.antichain);
  CHECK(*r.antichain == PointSet{Point{0}, Point{1}, Point{2}});
  r = extract_antichain({Point{}, Point{0}, Point{0, 0}, Point{1}}, 2);
  REQUIRE(r.antichain);
  CHECK(*r.antichain == PointSet{Point{0, 0}, Point{1}});
  r = extract_antichain({Point{}, Point{0}, Point{0, 0}}, 2);
  CHECK_FALSE(r.antichain);
  CHECK_FALSE(r.report.empty());
}

TEST_CASE("markov choice") {
  FanSpace fan;
  CHECK(MarkovStrategy::choose(fan, 1, fan.column(3)) == fan_set({{3, 0}}));
  auto a = fan.remove_finite(fan.full(), fan_set({{0, 0}}));
  CHECK(MarkovStrategy::choose(fan, 3, a) == fan_set({{0, 1}, {0, 2}, {0, 3}}));
  ScriptedOne one({fan.column(5), a, a});
  MarkovStrategy two;
  auto t = run_play(fan, BoundSpec::tabulated("succ"), one, two, 3);
  REQUIRE(t.innings.size() == 3);
  CHECK(t.innings[0].two == fan_set({{5, 0}}));
  CHECK(t.innings[2].two == fan_set({{0, 1}, {0, 2}, {0, 3}}));
}
