#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tgame/game.hpp"

namespace tgame {

/// One-point compactification of the tree of finite and infinite sequences
/// over omega. Only the finite sequences are represented; they are the
/// isolated points. Atoms: full, children(s).
///
/// A descriptor clusters at p iff it has at least one atom: every atom
/// contains an infinite antichain, which survives removal of finitely many
/// points, while a finite set never clusters.
class TreeSpace final : public Space {
 public:
  std::string name() const override { return "tree"; }

  bool accepts(const Atom& atom) const override;
  bool is_point(const Point&) const override { return true; }
  bool atom_clusters(const Atom& atom) const override;
  bool atom_contains(const Atom& atom, const Point& q) const override;
  std::unique_ptr<Cursor> atom_cursor(const Atom& atom) const override;

  json point_to_json(const Point& q) const override;
  Point point_from_json(const json& j) const override;
  json atom_to_json(const Atom& atom) const override;
  Atom atom_from_json(const json& j) const override;
  std::string format_atom(const Atom& atom) const override;

  Descriptor children(const Point& s) const { return make({ChildrenAtom{s.seq()}}); }
};

/// One's strategy in G_1: play the children of Two's last pick.
/// An empty pick repeats the previous move.
class BranchStrategy final : public OneStrategy {
 public:
  std::string name() const override { return "branch"; }
  OneMove respond(const PlayView& view) override;
};

/// Two's strategy in G_2. Keeps a witness antichain W among its picks that
/// grows by one point per inning; the witness is annotated as "witness".
class PairStrategy final : public TwoStrategy {
 public:
  std::string name() const override { return "pair"; }
  void reset() override { witness_.clear(); }
  TwoMove respond(const PlayView& view, const Descriptor& current) override;

  const PointSet& witness() const { return witness_; }

 private:
  PointSet witness_;
};

std::unique_ptr<OneStrategy> one_branch_strategy();
std::unique_ptr<TwoStrategy> two_pair_strategy();

bool pairwise_incomparable(const PointSet& s);

struct AntichainResult {
  std::optional<PointSet> antichain;
  /// Which route produced the antichain, or why none was found.
  std::string report;
};

/// Finite-scale antichain extraction: splits off
/// Y = {s in A : s lies below two incompatible points of A} and tries, in
/// order, one maximal point per chain of A \ Y, the maximal points of Y, and
/// the alternation along the longest chain of Y.
AntichainResult extract_antichain(const PointSet& a, std::size_t target);

}  // namespace tgame
