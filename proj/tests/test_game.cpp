#include "doctest.h"

#include "scripted.hpp"
#include "tgame/fan_space.hpp"
#include "tgame/invariants.hpp"
#include "tgame/registry.hpp"
#include "tgame/tree_space.hpp"

using namespace tgame;
using tgame::test::ScriptedOne;
using tgame::test::ScriptedTwo;

TEST_CASE("horizon zero is rejected") {
  TreeSpace tree;
  ScriptedOne one({tree.full()});
  ScriptedTwo two({});
  CHECK_THROWS_AS(run_play(tree, BoundSpec::constant(1), one, two, 0), std::invalid_argument);
}

TEST_CASE("empty picks are legal and make pick invariants vacuous") {
  FanSpace fan;
  ScriptedOne one({fan.full()});
  ScriptedTwo two({});
  auto t = run_play(fan, BoundSpec::fin(), one, two, 5);
  CHECK(t.innings.size() == 5);
  CHECK_FALSE(t.abort);
  CHECK(evaluate(fan, t, {markov_progress()}));
  CHECK(t.diagnostics["legality"]["status"] == "pass");
  CHECK(t.diagnostics["markov-progress"]["status"] == "vacuous-pass");
}

TEST_CASE("illegal moves abort the play") {
  TreeSpace tree;
  SUBCASE("One plays a finite set") {
    ScriptedOne one({tree.make({}, {Point{0}})});
    ScriptedTwo two({});
    auto t = run_play(tree, BoundSpec::constant(1), one, two, 3);
    REQUIRE(t.abort);
    CHECK(t.abort->kind == "illegal-one-move");
    CHECK(t.abort->inning == 0);
  }
  SUBCASE("Two picks outside One's set") {
    ScriptedOne one({tree.children(Point{})});
    ScriptedTwo two({{Point{0}}, {Point{0, 0}}});
    auto t = run_play(tree, BoundSpec::constant(1), one, two, 3);
    REQUIRE(t.abort);
    CHECK(t.abort->kind == "illegal-two-move");
    CHECK(t.abort->inning == 1);
    REQUIRE(t.innings.size() == 2);
    CHECK(t.innings[1].two == PointSet{Point{0, 0}});
  }
  SUBCASE("Two exceeds its budget") {
    ScriptedOne one({tree.children(Point{})});
    ScriptedTwo two({{Point{0}, Point{1}}});
    auto t = run_play(tree, BoundSpec::constant(1), one, two, 1);
    REQUIRE(t.abort);
    CHECK(t.abort->kind == "illegal-two-move");
  }
  SUBCASE("strict G_1 rejects an empty pick") {
    ScriptedOne one({tree.children(Point{})});
    ScriptedTwo two({});
    auto t = run_play(tree, BoundSpec::constant(1), one, two, 1, {.strict_g1 = true});
    REQUIRE(t.abort);
    CHECK(t.abort->kind == "illegal-two-move");
    auto loose = run_play(tree, BoundSpec::constant(1), one, two, 1);
    CHECK_FALSE(loose.abort);
  }
  SUBCASE("an inapplicable strategy") {
    FanSpace fan;
    ScriptedOne one({fan.column(0)});
    auto pair = make_core_two("pair");
    auto t = run_play(fan, BoundSpec::constant(2), one, *pair, 2);
    REQUIRE(t.abort);
    CHECK(t.abort->kind == "strategy-inapplicable");
  }
}

TEST_CASE("a stopped play keeps completed innings") {
  TreeSpace tree;
  ScriptedOne one({tree.children(Point{})});
  class Stopper final : public TwoStrategy {
   public:
    std::string name() const override { return "stopper"; }
    TwoMove respond(const PlayView& v, const Descriptor&) override {
      if (v.inning == 2) throw PlayStopped("quit");
      return {{Point{v.inning}}};
    }
  } two;
  auto t = run_play(tree, BoundSpec::constant(1), one, two, 10);
  CHECK(t.innings.size() == 2);
  CHECK_FALSE(t.abort);
}

TEST_CASE("transcripts round trip through json") {
  TreeSpace tree;
  auto one = make_core_one("branch");
  auto two = make_core_two("pair");
  auto t = run_play(tree, BoundSpec::constant(2), *one, *two, 6);
  evaluate(tree, t, invariants_for("tree", "branch", "pair"));
  json j = to_json(tree, t);
  auto back = transcript_from_json(tree, j);
  CHECK(to_json(tree, back) == j);
  REQUIRE(back.innings.size() == 6);
  CHECK(back.innings[3].two == t.innings[3].two);
  CHECK(back.innings[3].one == t.innings[3].one);
  CHECK(back.bound == t.bound);
}

TEST_CASE("registry selectors") {
  CHECK(make_space("tree")->name() == "tree");
  auto x = make_space("partition:k=3");
  CHECK(x->params()["k"] == 3);
  CHECK(space_selector(*x) == "partition:k=3");
  CHECK_THROWS_AS(make_space("partition:k=0"), std::invalid_argument);
  CHECK_THROWS_AS(make_space("moon"), std::invalid_argument);
  CHECK(make_core_one("nope") == nullptr);
  CHECK(make_core_two("eub") != nullptr);
}
