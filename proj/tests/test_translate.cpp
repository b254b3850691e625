#include "doctest.h"

#include "scripted.hpp"
#include "tgame/ad_family.hpp"
#include "tgame/fan_space.hpp"
#include "tgame/partition_space.hpp"
#include "tgame/translate.hpp"
#include "tgame/tree_space.hpp"

using namespace tgame;
using tgame::test::ScriptedOne;

namespace {

std::vector<std::uint64_t> first(const InningMap& m, std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 0; i < n; ++i) out.push_back(m.at(i));
  return out;
}

class CountingTwo final : public TwoStrategy {
 public:
  std::string name() const override { return "counting"; }
  TwoMove respond(const PlayView& v, const Descriptor& d) override {
    ++calls;
    return {{v.space.enumerate(d, 1)[0]}};
  }
  int calls = 0;
};

}  // namespace

TEST_CASE("inning schedules") {
  auto two = InningMap::for_two(BoundSpec::constant(2), BoundSpec::tabulated("cycle:1,2"));
  CHECK(two.mode() == TranslationMode::schedule);
  CHECK(first(two, 3) == std::vector<std::uint64_t>{1, 3, 5});
  CHECK(two.inner_inning_at(3) == 1u);
  CHECK_FALSE(two.inner_inning_at(2));
  auto grow = InningMap::for_two(BoundSpec::tabulated("succ"), BoundSpec::tabulated("pow2"));
  CHECK(first(grow, 4) == std::vector<std::uint64_t>{0, 1, 2, 3});
  auto one = InningMap::for_one(BoundSpec::tabulated("succ"), BoundSpec::tabulated("pow2"));
  CHECK(first(one, 5) == std::vector<std::uint64_t>{0, 1, 3, 7, 15});
  auto id = InningMap::for_one(BoundSpec::tabulated("succ"), BoundSpec::constant(1));
  CHECK(first(id, 6) == std::vector<std::uint64_t>{0, 1, 2, 3, 4, 5});
  auto mask = InningMap::for_two(BoundSpec::tabulated("cycle:1,3"), BoundSpec::constant(3));
  CHECK(mask.mode() == TranslationMode::mask);
  auto compress = InningMap::for_one(BoundSpec::constant(2), BoundSpec::tabulated("cycle:1,2"));
  CHECK(compress.mode() == TranslationMode::compress);
}

TEST_CASE("unsupported translations are rejected") {
  CHECK_THROWS_AS(InningMap::for_two(BoundSpec::constant(2), BoundSpec::tabulated("cycle:1,3")), TranslationError);
  CHECK_THROWS_AS(InningMap::for_two(BoundSpec::constant(2), BoundSpec::tabulated("succ")), TranslationError);
  CHECK_THROWS_AS(InningMap::for_two(BoundSpec::tabulated("succ"), BoundSpec::constant(2)), TranslationError);
}

TEST_CASE("translated Two skips innings") {
  TreeSpace tree;
  auto inner = std::make_unique<CountingTwo>();
  auto* counter = inner.get();
  auto two = translate_two(std::move(inner), BoundSpec::constant(2), BoundSpec::tabulated("cycle:1,2"));
  ScriptedOne one({tree.children(Point{})});
  auto t = run_play(tree, BoundSpec::tabulated("cycle:1,2"), one, *two, 4);
  REQUIRE(t.innings.size() == 4);
  CHECK(t.innings[0].two.empty());
  CHECK(t.innings[1].two == PointSet{Point{0}});
  CHECK(t.innings[2].two.empty());
  CHECK(counter->calls == 2);
  CHECK(two->invocations() == 2);
  CountingTwo fresh;
  CHECK(replay_two(tree, t, fresh, BoundSpec::constant(2)).ok());
}

TEST_CASE("translated One pads the inner history") {
  FanSpace fan;
  class Column final : public OneStrategy {
   public:
    std::string name() const override { return "column"; }
    OneMove respond(const PlayView& v) override {
      return {static_cast<const FanSpace&>(v.space).column(v.inning)};
    }
  };
  auto one = translate_one(std::make_unique<Column>(), BoundSpec::tabulated("succ"), BoundSpec::tabulated("pow2"));
  auto two = markov_two_strategy();
  auto t = run_play(fan, BoundSpec::tabulated("pow2"), *one, *two, 3);
  REQUIRE(t.innings.size() == 3);
  CHECK(t.innings[0].one == fan.column(0));
  CHECK(t.innings[1].one == fan.column(1));
  CHECK(t.innings[2].one == fan.column(3));
  CHECK(one->inner_history().size() == 3);
  PointSet outer, inner;
  for (std::size_t i = 0; i + 1 < t.innings.size(); ++i) outer.insert(t.innings[i].two.begin(), t.innings[i].two.end());
  for (const auto& inn : one->inner_history()) inner.insert(inn.two.begin(), inn.two.end());
  CHECK(outer == inner);
  Column fresh;
  CHECK(replay_one(fan, t, fresh, BoundSpec::tabulated("succ")).ok());
}

TEST_CASE("translated fat branch strategy under a compressed schedule") {
  PartitionSpace x2({2});
  auto one = translate_one(one_fatbranch_strategy(), BoundSpec::constant(2), BoundSpec::tabulated("cycle:1,2"));
  class Least final : public TwoStrategy {
   public:
    std::string name() const override { return "least"; }
    TwoMove respond(const PlayView& v, const Descriptor& d) override { return {{v.space.enumerate(d, 1)[0]}}; }
  } least;
  auto t = run_play(x2, BoundSpec::tabulated("cycle:1,2"), *one, least, 6);
  CHECK_FALSE(t.abort);
  auto fresh = one_fatbranch_strategy();
  CHECK(replay_one(x2, t, *fresh, BoundSpec::constant(2)).ok());
}

TEST_CASE("almost disjoint family") {
  FanSpace fan;
  CHECK(binary_sequences(2) == std::vector<std::string>{"", "0", "1", "00", "01", "10", "11"});
  MarkovStrategy markov;
  auto root = build_ad_family(fan, markov, 0, BoundSpec::tabulated("succ"));
  CHECK(root.a.size() == 1);
  auto fam = build_ad_family(fan, markov, 1, BoundSpec::tabulated("succ"));
  CHECK(fam.a.at("") == PointSet{FanSpace::point(0, 0)});
  CHECK(fan.clusters_at_p(fam.q.at("")));
  auto deep = build_ad_family(fan, markov, 5, BoundSpec::tabulated("succ"));
  CHECK(deep.a.size() == 63);
  for (std::size_t len = 1; len <= 5; ++len) CHECK(check_prefix_law(deep, len).ok());
  for (const auto& [s, a] : deep.a) {
    CHECK(a.size() == s.size() + 1);
    for (const auto& [u, b] : deep.a) {
      if (s >= u) continue;
      for (const auto& q : a) CHECK(b.count(q) == 0);
    }
  }
  CHECK(deep.warnings.empty());
}
