#include "tgame/tree_space.hpp"

#include <algorithm>
#include <numeric>

namespace tgame {

bool TreeSpace::accepts(const Atom& atom) const {
  return std::holds_alternative<FullAtom>(atom) || std::holds_alternative<ChildrenAtom>(atom);
}

bool TreeSpace::atom_clusters(const Atom& atom) const { return accepts(atom); }

bool TreeSpace::atom_contains(const Atom& atom, const Point& q) const {
  if (std::holds_alternative<FullAtom>(atom)) return true;
  const auto& node = std::get<ChildrenAtom>(atom).node;
  return q.size() == node.size() + 1 && is_prefix(node, q.seq());
}

std::unique_ptr<Cursor> TreeSpace::atom_cursor(const Atom& atom) const {
  if (std::holds_alternative<FullAtom>(atom)) {
    return heap_cursor({Point{}}, [](const Point& v) {
      std::vector<Point> next{v.child(0)};
      if (!v.empty()) next.push_back(v.next_sibling());
      return next;
    });
  }
  Point node(std::get<ChildrenAtom>(atom).node);
  return index_cursor([node](std::uint64_t k) { return node.child(k); });
}

json TreeSpace::point_to_json(const Point& q) const { return q.seq(); }

Point TreeSpace::point_from_json(const json& j) const {
  if (!j.is_array()) throw DescriptorError("tree point must be an array: " + j.dump());
  return Point(j.get<Seq>());
}

json TreeSpace::atom_to_json(const Atom& atom) const {
  if (std::holds_alternative<FullAtom>(atom)) return {{"kind", "full"}};
  if (const auto* c = std::get_if<ChildrenAtom>(&atom)) return {{"kind", "children"}, {"node", c->node}};
  throw DescriptorError("atom not in the tree language");
}

Atom TreeSpace::atom_from_json(const json& j) const {
  try {
    auto kind = j.at("kind").get<std::string>();
    if (kind == "full") return FullAtom{};
    if (kind == "children") return ChildrenAtom{j.at("node").get<Seq>()};
    throw DescriptorError("unknown tree atom kind '" + kind + "'");
  } catch (const json::exception& e) {
    throw DescriptorError(std::string("malformed tree atom: ") + e.what());
  }
}

std::string TreeSpace::format_atom(const Atom& atom) const {
  if (std::holds_alternative<FullAtom>(atom)) return "all nodes";
  return "children of " + Point(std::get<ChildrenAtom>(atom).node).to_string();
}

OneMove BranchStrategy::respond(const PlayView& view) {
  const auto& tree = view.space;
  if (!dynamic_cast<const TreeSpace*>(&tree)) throw StrategyInapplicable("branch strategy runs on the tree space only");
  if (view.history.empty()) return {tree.make({ChildrenAtom{}}), {}};
  const Inning& last = view.history.back();
  if (last.two.empty()) return {last.one, {}};
  const Point& s = *last.two.begin();
  return {tree.make({ChildrenAtom{s.seq()}}), {{"branch_node", s.seq()}}};
}

namespace {

bool incomparable_to_all(const Point& q, const PointSet& w) {
  return std::none_of(w.begin(), w.end(), [&](const Point& x) { return x.comparable(q); });
}

/// The element of the antichain w that is a prefix of q, if any.
std::optional<Point> witness_below(const Point& q, const PointSet& w) {
  for (const auto& x : w)
    if (q.extends(x)) return x;
  return std::nullopt;
}

json witness_json(const Space& space, const PointSet& w) { return space.to_json(w); }

}  // namespace

TwoMove PairStrategy::respond(const PlayView& view, const Descriptor& a) {
  const Space& space = view.space;
  if (!dynamic_cast<const TreeSpace*>(&space)) throw StrategyInapplicable("pair strategy runs on the tree space only");
  auto budget = view.bound.budget(view.inning);
  if (budget && *budget < 2) throw StrategyInapplicable("pair strategy needs a budget of at least 2");
  if (!space.clusters_at_p(a)) throw StrategyInapplicable("One's move does not cluster");

  if (witness_.empty()) {
    // least pair of incompatible points, scanning the move in canonical order
    std::vector<Point> seen;
    DescriptorStream stream(space, a);
    while (auto q = stream.next()) {
      for (const auto& p : seen) {
        if (!p.comparable(*q)) {
          witness_ = {p, *q};
          return {witness_, {{"witness", witness_json(space, witness_)}}};
        }
      }
      seen.push_back(*q);
    }
    throw StrategyInapplicable("no incompatible pair in One's move");
  }

  // A point on a branch missing the witness exists iff some atom has one.
  bool fresh_exists = std::any_of(a.extra.begin(), a.extra.end(),
                                  [&](const Point& q) { return incomparable_to_all(q, witness_); });
  for (const auto& atom : a.atoms) {
    if (std::holds_alternative<FullAtom>(atom)) fresh_exists = true;
    else if (!witness_below(Point(std::get<ChildrenAtom>(atom).node), witness_)) fresh_exists = true;
  }
  if (fresh_exists) {
    auto fresh = space.find_first(a, [&](const Point& q) { return incomparable_to_all(q, witness_); }, 50'000'000);
    if (!fresh) throw StrategyInapplicable("scan limit reached looking for a fresh branch");
    PointSet pick{*fresh};
    for (const auto& q : space.enumerate(a, 2)) {
      if (q != *fresh) {
        pick.insert(q);
        break;
      }
    }
    witness_.insert(*fresh);
    return {pick, {{"witness", witness_json(space, witness_)}, {"case", "fresh-branch"}}};
  }

  // Every atom is children(s) with s above a witness point: split it.
  std::optional<std::pair<Point, Point>> best;
  std::optional<Point> replaced;
  for (const auto& atom : a.atoms) {
    Point node(std::get<ChildrenAtom>(atom).node);
    Descriptor only = space.make({atom}, {}, {});
    only.excluded = {};
    for (const auto& x : a.excluded)
      if (space.atom_contains(atom, x)) only.excluded.insert(x);
    auto two = space.enumerate(only, 2);
    std::pair<Point, Point> cand{two[0], two[1]};
    if (!best || cand < *best) {
      best = cand;
      replaced = witness_below(node, witness_);
    }
  }
  if (!best) throw StrategyInapplicable("One's move has no atoms");
  witness_.erase(*replaced);
  witness_.insert(best->first);
  witness_.insert(best->second);
  return {PointSet{best->first, best->second},
          {{"witness", witness_json(space, witness_)}, {"case", "split"}, {"split", replaced->seq()}}};
}

std::unique_ptr<OneStrategy> one_branch_strategy() { return std::make_unique<BranchStrategy>(); }
std::unique_ptr<TwoStrategy> two_pair_strategy() { return std::make_unique<PairStrategy>(); }

bool pairwise_incomparable(const PointSet& s) {
  for (auto i = s.begin(); i != s.end(); ++i)
    for (auto j = std::next(i); j != s.end(); ++j)
      if (i->comparable(*j)) return false;
  return true;
}

namespace {

PointSet take_least(const PointSet& s, std::size_t n) {
  PointSet out;
  for (const auto& q : s) {
    if (out.size() == n) break;
    out.insert(q);
  }
  return out;
}

/// Maximal elements of s under end-extension.
PointSet maximal_elements(const PointSet& s) {
  PointSet out;
  for (const auto& q : s) {
    bool top = std::none_of(s.begin(), s.end(), [&](const Point& r) { return r != q && r.extends(q); });
    if (top) out.insert(q);
  }
  return out;
}

}  // namespace

AntichainResult extract_antichain(const PointSet& a, std::size_t target) {
  if (a.empty()) return {std::nullopt, "empty input"};
  if (pairwise_incomparable(a) && a.size() >= target) return {take_least(a, target), "input is an antichain"};

  PointSet y;
  for (const auto& s : a) {
    bool split = false;
    for (auto u = a.begin(); u != a.end() && !split; ++u) {
      if (!u->extends(s)) continue;
      for (auto v = std::next(u); v != a.end(); ++v) {
        if (v->extends(s) && !u->comparable(*v)) {
          split = true;
          break;
        }
      }
    }
    if (split) y.insert(s);
  }

  // Outside Y the extensions of any point form a chain, so the comparability
  // components of A \ Y are chains; keep the top of each.
  PointSet rest;
  std::set_difference(a.begin(), a.end(), y.begin(), y.end(), std::inserter(rest, rest.end()));
  PointSet reps = maximal_elements(rest);
  if (reps.size() >= target) return {take_least(reps, target), "one point per maximal chain outside Y"};

  PointSet tops = maximal_elements(y);
  if (tops.size() >= target) return {take_least(tops, target), "maximal points of Y"};

  if (!y.empty()) {
    // longest chain in Y: the prefixes in Y of its deepest point
    Point deepest = *std::max_element(y.begin(), y.end(),
                                      [](const Point& l, const Point& r) { return l.size() < r.size(); });
    std::vector<Point> chain;
    for (const auto& s : y)
      if (deepest.extends(s)) chain.push_back(s);
    std::sort(chain.begin(), chain.end(), [](const Point& l, const Point& r) { return l.size() < r.size(); });
    PointSet picked;
    std::size_t threshold = 0;
    for (const auto& s : chain) {
      if (s.size() < threshold) continue;
      std::optional<Point> t;
      for (const auto& q : a) {
        if (q.size() > s.size() && q.extends(s) && !q.comparable(deepest)) {
          t = q;
          break;
        }
      }
      if (!t) continue;
      picked.insert(*t);
      threshold = t->size();
    }
    if (picked.size() >= target) return {take_least(picked, target), "alternation along the longest chain of Y"};
  }

  std::size_t best = std::max({reps.size(), tops.size(), std::size_t{1}});
  std::string why = y.empty() && rest.size() == a.size() && reps.size() == 1 ? "input is a chain"
                                                                              : "largest antichain found has size " +
                                                                                    std::to_string(best);
  return {std::nullopt, why};
}

}  // namespace tgame
