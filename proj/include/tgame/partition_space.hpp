#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tgame/game.hpp"

namespace tgame {

struct PartitionConfig {
  std::uint64_t k = 1;
};

/// The space X_k: omega partitioned into blocks N_s, s a finite sequence,
/// each block carrying a fixed enumeration {K^s_i} of its k-subsets. Basic
/// neighbourhoods of p omit finitely many fat branches.
///
/// Point m of block N_s is stored as the sequence s^(m); its natural-number
/// name is pi(code(s), m) = code(s^(m)) - 1. K^s_i is the k-subset of block
/// positions with colex combinadic rank i.
///
/// Atoms: full, block(s), kset(s, i), cone(s, pins, forbid). A cone is the
/// union of the blocks strictly below s whose step at s uses a K-set that
/// contains every position in pins and none in forbid. The language is
/// closed under removing finite sets and under intersection and difference
/// with the sets Z_D, so clustering stays a syntactic test: a descriptor
/// clusters iff it keeps a full, block or nonempty cone atom.
class PartitionSpace final : public Space {
 public:
  explicit PartitionSpace(PartitionConfig cfg);

  std::string name() const override { return "partition"; }
  json params() const override { return {{"k", cfg_.k}}; }
  std::uint64_t k() const { return cfg_.k; }
  const PartitionConfig& config() const { return cfg_; }

  bool accepts(const Atom& atom) const override;
  bool is_point(const Point& q) const override { return !q.empty(); }
  bool atom_clusters(const Atom& atom) const override;
  bool atom_contains(const Atom& atom, const Point& q) const override;
  std::unique_ptr<Cursor> atom_cursor(const Atom& atom) const override;

  json point_to_json(const Point& q) const override;
  Point point_from_json(const json& j) const override;
  json atom_to_json(const Atom& atom) const override;
  Atom atom_from_json(const json& j) const override;
  std::string format_point(const Point& q) const override;
  std::string format_atom(const Atom& atom) const override;

  /// Point with natural-number name n.
  static Point point(std::uint64_t n);
  /// Natural-number name, if it fits in 64 bits.
  static std::optional<std::uint64_t> number(const Point& q);
  static Seq block_of(const Point& q) { return q.parent().seq(); }

  /// Positions of K^s_i inside its block.
  std::vector<std::uint64_t> kset_positions(std::uint64_t i) const;
  PointSet kset(const Seq& s, std::uint64_t i) const;
  /// Rank of the least K-set containing the given positions (at most k).
  std::uint64_t least_kset_containing(const std::vector<std::uint64_t>& positions) const;

  Descriptor block(const Seq& s) const { return make({BlockAtom{s}}); }

  bool cone_admits(const ConeAtom& c, std::uint64_t child) const;
  bool cone_empty(const ConeAtom& c) const;

 private:
  PartitionConfig cfg_;
};

/// Finite prefix g of a fat branch; covers the union of K^{g|j}_{g(j)}.
struct FatBranchPrefix {
  Seq g;
  PointSet covered(const PartitionSpace& x) const;
};

/// Decides whether one fat branch covers b. Returns a witness prefix.
std::optional<FatBranchPrefix> covered_by_single_fat_branch(const PartitionSpace& x, const PointSet& b);

/// Lexicographically least (k+1)-subset of the pool that no single fat
/// branch covers; nullopt means the sample is too small.
std::optional<PointSet> find_uncoverable_subset(const PartitionSpace& x, const std::vector<Point>& pool);

/// find_uncoverable_subset on a growing prefix of d's enumeration, starting
/// at 3(k+1)^2 points. Throws std::runtime_error past max_pool points.
PointSet uncoverable_subset_of(const PartitionSpace& x, const Descriptor& d, std::size_t max_pool = 1 << 14);

/// Y-down: the K-sets forced along the proper initial segments of each
/// point's block address.
PointSet down_set(const PartitionSpace& x, const PointSet& y);

/// Z_D = {i : some fat branch includes {i} u D}, as a descriptor.
Descriptor z_set(const PartitionSpace& x, const PointSet& dset);
/// described(d) intersected with Z_dset.
Descriptor z_restrict(const PartitionSpace& x, const Descriptor& d, const PointSet& dset);

/// Set algebra inside the partition descriptor language.
Descriptor intersect(const PartitionSpace& x, const Descriptor& a, const Descriptor& b);
Descriptor subtract(const PartitionSpace& x, const Descriptor& a, const Descriptor& b);

/// max over fat branches G of |G n e|, with a prefix attaining it.
std::pair<std::uint64_t, FatBranchPrefix> max_fat_branch_load(const PartitionSpace& x, const PointSet& e);

/// Two's strategy in G_{k+1}: maintains E_n among its picks with
/// |E_n| >= n+k+1 and no fat branch holding more than k points of E_n.
/// E_n is annotated as "E".
class EubStrategy final : public TwoStrategy {
 public:
  std::string name() const override { return "eub"; }
  void reset() override {
    e_.clear();
    z_cache_.clear();
  }
  TwoMove respond(const PlayView& view, const Descriptor& current) override;
  const PointSet& witness() const { return e_; }

 private:
  PointSet e_;
  std::map<std::pair<std::uint64_t, PointSet>, Descriptor> z_cache_;
};

/// One's strategy in G_k: follow a fat branch, extending each pick of Two
/// to a K-set on the branch. The branch prefix is annotated as "prefix".
class FatBranchStrategy final : public OneStrategy {
 public:
  std::string name() const override { return "fatbranch"; }
  OneMove respond(const PlayView& view) override;
};

std::unique_ptr<TwoStrategy> two_eub_strategy();
std::unique_ptr<OneStrategy> one_fatbranch_strategy();

}  // namespace tgame
