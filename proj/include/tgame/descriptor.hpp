#pragma once

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "tgame/point.hpp"

namespace tgame {

class DescriptorError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Atom vocabulary. Each space accepts a subset; see the space headers.

/// The whole ground set (every point except p).
struct FullAtom {
  bool operator==(const FullAtom&) const = default;
};
/// Tree: {node^(k) : k in omega}.
struct ChildrenAtom {
  Seq node;
  bool operator==(const ChildrenAtom&) const = default;
};
/// Fan: C_n.
struct ColumnAtom {
  std::uint64_t n = 0;
  bool operator==(const ColumnAtom&) const = default;
};
/// Fan: {(n,m) : m >= from}.
struct ColumnTailAtom {
  std::uint64_t n = 0;
  std::uint64_t from = 0;
  bool operator==(const ColumnTailAtom&) const = default;
};
/// Partition: the block N_s.
struct BlockAtom {
  Seq s;
  bool operator==(const BlockAtom&) const = default;
};
/// Partition: K^s_i.
struct KSetAtom {
  Seq s;
  std::uint64_t i = 0;
  bool operator==(const KSetAtom&) const = default;
};
/// Partition: union of N_t over t strictly below s whose step at s picks a
/// K-set containing every index in `pins` and none in `forbid` (indices are
/// positions inside N_s).
struct ConeAtom {
  Seq s;
  std::vector<std::uint64_t> pins;
  std::vector<std::uint64_t> forbid;
  bool operator==(const ConeAtom&) const = default;
};
/// Scheepers: the block Y_j.
struct StripAtom {
  std::uint64_t j = 0;
  bool operator==(const StripAtom&) const = default;
};

using Atom = std::variant<FullAtom, ChildrenAtom, ColumnAtom, ColumnTailAtom, BlockAtom,
                          KSetAtom, ConeAtom, StripAtom>;

/// A finitely represented subset of a space's ground set:
/// (union of atoms minus excluded) union extra.
struct Descriptor {
  std::string space;
  std::vector<Atom> atoms;
  PointSet excluded;
  PointSet extra;

  bool finite_only() const { return atoms.empty(); }
  bool operator==(const Descriptor&) const = default;
};

}  // namespace tgame
