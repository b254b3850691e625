#pragma once

#include <memory>
#include <string>

#include "tgame/game.hpp"

namespace tgame {

/// The fan (omega x omega) + {p}. A set clusters at p iff its intersections
/// with the columns C_n have unbounded size. Point (n, m) is stored as the
/// natural pi(n, m). Atoms: full, column(n), column tail(n, from).
class FanSpace final : public Space {
 public:
  std::string name() const override { return "fan"; }

  static Point point(std::uint64_t n, std::uint64_t m) { return Point::natural(pair64(n, m)); }
  static std::pair<std::uint64_t, std::uint64_t> coords(const Point& q) { return unpair64(q.value()); }

  bool accepts(const Atom& atom) const override;
  bool is_point(const Point& q) const override { return q.size() == 1; }
  bool atom_clusters(const Atom& atom) const override { return accepts(atom); }
  bool atom_contains(const Atom& atom, const Point& q) const override;
  std::unique_ptr<Cursor> atom_cursor(const Atom& atom) const override;

  json point_to_json(const Point& q) const override;
  Point point_from_json(const json& j) const override;
  json atom_to_json(const Atom& atom) const override;
  Atom atom_from_json(const json& j) const override;
  std::string format_point(const Point& q) const override;
  std::string format_atom(const Atom& atom) const override;

  Descriptor column(std::uint64_t n) const { return make({ColumnAtom{n}}); }
};

/// Two's Markov strategy in G_f: in inning j take the least column meeting
/// One's set in at least f(j) points and pick its f(j) least points there.
class MarkovStrategy final : public TwoStrategy {
 public:
  std::string name() const override { return "markov"; }
  TwoMove respond(const PlayView& view, const Descriptor& current) override;

  /// The move as a function of (budget, One's set) only.
  static PointSet choose(const Space& fan, std::uint64_t budget, const Descriptor& a, std::uint64_t* column = nullptr);
};

std::unique_ptr<TwoStrategy> markov_two_strategy();

}  // namespace tgame
