#include "tgame/fan_space.hpp"

#include <map>

namespace tgame {

bool FanSpace::accepts(const Atom& atom) const {
  return std::holds_alternative<FullAtom>(atom) || std::holds_alternative<ColumnAtom>(atom) ||
         std::holds_alternative<ColumnTailAtom>(atom);
}

bool FanSpace::atom_contains(const Atom& atom, const Point& q) const {
  if (!is_point(q)) return false;
  if (std::holds_alternative<FullAtom>(atom)) return true;
  auto [n, m] = coords(q);
  if (const auto* c = std::get_if<ColumnAtom>(&atom)) return n == c->n;
  const auto& t = std::get<ColumnTailAtom>(atom);
  return n == t.n && m >= t.from;
}

std::unique_ptr<Cursor> FanSpace::atom_cursor(const Atom& atom) const {
  if (std::holds_alternative<FullAtom>(atom))
    return index_cursor([](std::uint64_t z) { return Point::natural(z); });
  if (const auto* c = std::get_if<ColumnAtom>(&atom))
    return index_cursor([n = c->n](std::uint64_t m) { return point(n, m); });
  const auto& t = std::get<ColumnTailAtom>(atom);
  return index_cursor([n = t.n, from = t.from](std::uint64_t m) { return point(n, from + m); });
}

json FanSpace::point_to_json(const Point& q) const {
  auto [n, m] = coords(q);
  return json::array({n, m});
}

Point FanSpace::point_from_json(const json& j) const {
  if (!j.is_array() || j.size() != 2) throw DescriptorError("fan point must be [n, m]: " + j.dump());
  try {
    return point(j[0].get<std::uint64_t>(), j[1].get<std::uint64_t>());
  } catch (const std::exception& e) {
    throw DescriptorError(std::string("bad fan point: ") + e.what());
  }
}

json FanSpace::atom_to_json(const Atom& atom) const {
  if (std::holds_alternative<FullAtom>(atom)) return {{"kind", "full"}};
  if (const auto* c = std::get_if<ColumnAtom>(&atom)) return {{"kind", "column"}, {"n", c->n}};
  if (const auto* t = std::get_if<ColumnTailAtom>(&atom))
    return {{"kind", "tail"}, {"n", t->n}, {"from", t->from}};
  throw DescriptorError("atom not in the fan language");
}

Atom FanSpace::atom_from_json(const json& j) const {
  try {
    auto kind = j.at("kind").get<std::string>();
    if (kind == "full") return FullAtom{};
    if (kind == "column") return ColumnAtom{j.at("n").get<std::uint64_t>()};
    if (kind == "tail") return ColumnTailAtom{j.at("n").get<std::uint64_t>(), j.at("from").get<std::uint64_t>()};
    throw DescriptorError("unknown fan atom kind '" + kind + "'");
  } catch (const json::exception& e) {
    throw DescriptorError(std::string("malformed fan atom: ") + e.what());
  }
}

std::string FanSpace::format_point(const Point& q) const {
  auto [n, m] = coords(q);
  return "(" + std::to_string(n) + "," + std::to_string(m) + ")";
}

std::string FanSpace::format_atom(const Atom& atom) const {
  if (std::holds_alternative<FullAtom>(atom)) return "whole fan";
  if (const auto* c = std::get_if<ColumnAtom>(&atom)) return "column " + std::to_string(c->n);
  const auto& t = std::get<ColumnTailAtom>(atom);
  return "column " + std::to_string(t.n) + " from row " + std::to_string(t.from);
}

PointSet MarkovStrategy::choose(const Space& fan, std::uint64_t budget, const Descriptor& a, std::uint64_t* column) {
  // Least column with an infinite part; columns below it can only qualify
  // through the finite extra set.
  std::optional<std::uint64_t> infinite_col;
  for (const auto& atom : a.atoms) {
    std::uint64_t n = 0;
    if (const auto* c = std::get_if<ColumnAtom>(&atom)) n = c->n;
    else if (const auto* t = std::get_if<ColumnTailAtom>(&atom)) n = t->n;
    if (!infinite_col || n < *infinite_col) infinite_col = n;
  }
  std::map<std::uint64_t, std::uint64_t> extra_count;
  for (const auto& q : a.extra) ++extra_count[FanSpace::coords(q).first];

  std::optional<std::uint64_t> chosen;
  for (auto [n, cnt] : extra_count) {
    if (infinite_col && n >= *infinite_col) break;
    if (cnt >= budget) {
      chosen = n;
      break;
    }
  }
  if (!chosen) chosen = infinite_col;
  if (!chosen) throw StrategyInapplicable("no column of One's move has " + std::to_string(budget) + " points");
  if (column) *column = *chosen;

  PointSet pick;
  for (std::uint64_t m = 0; pick.size() < budget; ++m) {
    Point q = FanSpace::point(*chosen, m);
    if (fan.contains(a, q)) pick.insert(q);
  }
  return pick;
}

TwoMove MarkovStrategy::respond(const PlayView& view, const Descriptor& a) {
  if (!dynamic_cast<const FanSpace*>(&view.space)) throw StrategyInapplicable("Markov strategy runs on the fan space only");
  auto budget = view.bound.budget(view.inning);
  if (!budget) throw StrategyInapplicable("Markov strategy needs a tabulated or constant bound");
  std::uint64_t column = 0;
  PointSet pick = choose(view.space, *budget, a, &column);
  return {pick, {{"column", column}}};
}

std::unique_ptr<TwoStrategy> markov_two_strategy() { return std::make_unique<MarkovStrategy>(); }

}  // namespace tgame
