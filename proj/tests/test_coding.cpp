#include "doctest.h"

#include <algorithm>
#include <set>

#include "tgame/bound.hpp"
#include "tgame/coding.hpp"
#include "tgame/point.hpp"

using namespace tgame;

namespace {

std::uint64_t pi(std::uint64_t a, std::uint64_t b) { return (a + b) * (a + b + 1) / 2 + b; }

}  // namespace

TEST_CASE("pairing matches the closed form and inverts") {
  for (std::uint64_t a = 0; a < 40; ++a)
    for (std::uint64_t b = 0; b < 40; ++b) {
      CHECK(pair64(a, b) == pi(a, b));
      CHECK(unpair64(pi(a, b)) == std::pair{a, b});
    }
  CHECK(pair64(0, 0) == 0);
  CHECK(pair64(0, 1) == 2);
  CHECK(pair64(0, 2) == 5);
  CHECK(pair64(1, 1) == 4);
  CHECK_THROWS_AS(pair64(UINT64_MAX, 1), std::overflow_error);
}

TEST_CASE("sequence codes") {
  CHECK(sequence_code(Seq{}) == u128{0});
  CHECK(sequence_code(Seq{0}) == u128{pi(0, 0) + 1});
  CHECK(sequence_code(Seq{3}) == u128{pi(0, 3) + 1});
  CHECK(sequence_code(Seq{0, 0}) == u128{pi(pi(0, 0) + 1, 0) + 1});
  for (std::uint64_t c = 0; c < 2000; ++c) {
    Seq s = decode_sequence(c);
    CHECK(sequence_code(s) == u128{c});
  }
  Seq deep(40, 0);
  CHECK_FALSE(sequence_code(deep).has_value());
}

TEST_CASE("combinadic rank and unrank") {
  CHECK(combinadic_rank(std::vector<std::uint64_t>{0, 1}) == 0);
  CHECK(combinadic_rank(std::vector<std::uint64_t>{0, 2}) == 1);
  CHECK(combinadic_rank(std::vector<std::uint64_t>{1, 2}) == 2);
  CHECK(combinadic_rank(std::vector<std::uint64_t>{0, 3}) == 3);
  for (std::uint64_t k = 1; k <= 3; ++k)
    for (std::uint64_t r = 0; r < 200; ++r) {
      auto c = combinadic_unrank(r, k);
      REQUIRE(c.size() == k);
      CHECK(std::is_sorted(c.begin(), c.end()));
      CHECK(combinadic_rank(c) == r);
    }
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(2, 5) == 0);
  CHECK(binomial(200, 100) == UINT64_MAX);
}

TEST_CASE("point order follows codes and has finite predecessors") {
  std::vector<Point> pts;
  for (std::uint64_t c = 0; c < 500; ++c) pts.emplace_back(decode_sequence(c));
  CHECK(std::is_sorted(pts.begin(), pts.end()));
  Point s{2, 1};
  CHECK(s < s.child(0));
  CHECK(s < s.next_sibling());
  Point big(Seq(60, 1));
  CHECK_FALSE(big.code().has_value());
  CHECK(Point{1000} < big);
  CHECK(big < big.child(0));
  CHECK(Point::natural(3) < Point::natural(4));
  CHECK(Point{0, 1}.extends(Point{0}));
  CHECK_FALSE(Point{0}.comparable(Point{1}));
}

TEST_CASE("bound selectors") {
  CHECK(BoundSpec::parse("1").budget(7) == 1u);
  CHECK(BoundSpec::parse("k:3").budget(0) == 3u);
  CHECK_THROWS_AS(BoundSpec::parse("k:0"), BoundError);
  CHECK_THROWS_AS(BoundSpec::parse("f:nope"), BoundError);
  auto succ = BoundSpec::parse("f:succ");
  CHECK(succ.budget(0) == 1u);
  CHECK(succ.budget(4) == 5u);
  CHECK_FALSE(succ.bounded());
  auto pow2 = BoundSpec::parse("f:pow2");
  CHECK(pow2.budget(3) == 8u);
  CHECK(pow2.budget(200) == std::uint64_t{1} << 63);
  auto cyc = BoundSpec::parse("f:cycle:1,2");
  CHECK(cyc.budget(0) == 1u);
  CHECK(cyc.budget(1) == 2u);
  CHECK(cyc.bounded());
  CHECK(cyc.limsup() == 2u);
  auto fin = BoundSpec::parse("fin");
  CHECK_FALSE(fin.budget(0).has_value());
  CHECK(BoundSpec::from_json(cyc.to_json()) == cyc);
}
