#include "doctest.h"

#include <set>

#include "tgame/invariants.hpp"
#include "tgame/scheepers_space.hpp"

using namespace tgame;

namespace {

std::uint64_t pi(std::uint64_t a, std::uint64_t b) { return (a + b) * (a + b + 1) / 2 + b; }

}  // namespace

TEST_CASE("sequence enumeration") {
  CHECK(seq_enum(0) == SetSeq{{0}});
  CHECK(enum_index(seq_enum(7)) == 7);
  std::set<SetSeq> seen;
  for (std::uint64_t n = 0; n <= 1000; ++n) {
    auto t = seq_enum(n);
    CHECK_NOTHROW(validate_seq(t));
    CHECK(enum_index(t) == n);
    seen.insert(t);
  }
  CHECK(seen.size() == 1001);
  CHECK_THROWS_AS(validate_seq({{0}, {2}}), DescriptorError);
  CHECK_THROWS_AS(validate_seq({{}}), DescriptorError);
  CHECK_THROWS_AS(validate_seq({}), DescriptorError);
}

TEST_CASE("F follows its defining rule") {
  CHECK(strategy_f(seq_enum(0)) == 1);
  std::set<std::uint64_t> k;
  for (std::uint64_t n = 0; n < 400; ++n) {
    auto t = seq_enum(n);
    std::set<std::uint64_t> blocks;
    for (const auto& entry : t) blocks.insert(ScheepersSpace::block_of(entry.front()));
    std::uint64_t expect = 0;
    while (k.count(expect) || blocks.count(expect)) ++expect;
    CHECK(strategy_f_at(n) == expect);
    CHECK(strategy_f(t) == expect);
    k.insert(expect);
  }
}

TEST_CASE("enumeration capacity") {
  auto size = enumeration_size();
  set_enumeration_capacity(size + 5);
  CHECK_THROWS_AS(seq_enum(size + 50), CapacityError);
  set_enumeration_capacity(std::size_t{1} << 21);
  CHECK_NOTHROW(seq_enum(size + 50));
}

TEST_CASE("F-plays") {
  auto p = FPlay::from_picks({{0}}, true);
  CHECK(p.blocks == std::vector<std::uint64_t>{0, 1});
  CHECK_NOTHROW(check_fplay(p));
  FPlay bad{{0, 2}, {{0}, {pi(2, 0)}}};
  CHECK_THROWS_AS(check_fplay(bad), NotAnFPlay);
  CHECK(FPlay::from_json(p.to_json()).blocks == p.blocks);
  CHECK(p.s_value() == PointSet{Point::natural(0)});
}

TEST_CASE("intersection of two plays") {
  auto p1 = FPlay::from_picks({{0}});
  auto p2 = FPlay::from_picks({{0, pi(0, 1)}});
  auto r = play_intersection(p1, p2);
  CHECK(r.diverge_at == 1);
  CHECK(r.brute == PointSet{Point::natural(0)});
  CHECK(r.prefix_union.empty());
  CHECK(r.holds);
  CHECK_FALSE(r.literal_holds);

  auto q1 = FPlay::from_picks({{0}, {pi(1, 0)}});
  auto q2 = FPlay::from_picks({{0}, {pi(1, 1)}});
  auto r2 = play_intersection(q1, q2);
  CHECK(r2.diverge_at == 2);
  CHECK(r2.brute == PointSet{Point::natural(0)});
  CHECK(r2.holds);
  CHECK(r2.literal_holds);
}

TEST_CASE("fin strategy plays fresh blocks") {
  ScheepersSpace y;
  FinStrategy one;
  class Least final : public TwoStrategy {
   public:
    std::string name() const override { return "least"; }
    TwoMove respond(const PlayView& v, const Descriptor& d) override { return {{v.space.enumerate(d, 1)[0]}}; }
  } two;
  auto t = run_play(y, BoundSpec::fin(), one, two, 6);
  REQUIRE(t.innings.size() == 6);
  CHECK(t.innings[0].one == y.block(0));
  CHECK(t.innings[1].one == y.block(1));
  std::set<std::uint64_t> blocks;
  for (const auto& inn : t.innings) blocks.insert(std::get<StripAtom>(inn.one.atoms.at(0)).j);
  CHECK(blocks.size() == 6);
  CHECK(evaluate(y, t, {fplay_freshness()}));
}
