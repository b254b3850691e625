#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "tgame/game.hpp"

namespace tgame {

/// A finite sequence of nonempty finite sets of naturals, each inside its
/// own block Y_j = {pi(j, m)}. Entries are kept sorted ascending.
using SetSeq = std::vector<std::vector<std::uint64_t>>;

class NotAnFPlay : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Throws DescriptorError unless t is nonempty, every entry is nonempty,
/// sorted, inside one block, and the blocks are pairwise distinct.
void validate_seq(const SetSeq& t);

/// The injective enumeration {T_n}. Three streams are interleaved by n mod 3:
///   0: all sequences by (size, lex), size = sum over entries of sum (x+1)
///   1: F-conforming sequences by (cost, lex), cost = sum of (m+1) over the
///      in-block positions m
///   2: F-conforming sequences by (cost, lex), each entry costing
///      16 (w-1) + 1 where w is its position weight
/// F-conforming means N_1 in Y_0 and N_{j+1} in Y_{F(N_1..N_j)}. Sequences
/// already listed are skipped. Lex compares entry lists of naturals.
SetSeq seq_enum(std::uint64_t n);
std::uint64_t enum_index(const SetSeq& t);

/// F(T_n) = min(omega minus (K u I_n)), K = {F(T_m) : m < n}, I_n the
/// blocks of T_n.
std::uint64_t strategy_f(const SetSeq& t);
std::uint64_t strategy_f_at(std::uint64_t n);

/// Table size limit; growing past it raises CapacityError.
void set_enumeration_capacity(std::size_t entries);
std::size_t enumeration_size();

/// omega + {p} where p's neighbourhoods omit S(P) for finitely many F-plays.
/// Points are naturals; point (j, m) of block Y_j is pi(j, m).
/// Atoms: full, block(j) = Y_j.
class ScheepersSpace final : public Space {
 public:
  std::string name() const override { return "scheepers"; }

  static Point point(std::uint64_t j, std::uint64_t m) { return Point::natural(pair64(j, m)); }
  static std::uint64_t block_of(std::uint64_t x) { return unpair64(x).first; }

  bool accepts(const Atom& atom) const override;
  bool is_point(const Point& q) const override { return q.size() == 1; }
  bool atom_clusters(const Atom& atom) const override { return accepts(atom); }
  bool atom_contains(const Atom& atom, const Point& q) const override;
  std::unique_ptr<Cursor> atom_cursor(const Atom& atom) const override;

  json point_to_json(const Point& q) const override { return q.value(); }
  Point point_from_json(const json& j) const override;
  json atom_to_json(const Atom& atom) const override;
  Atom atom_from_json(const json& j) const override;
  std::string format_point(const Point& q) const override { return std::to_string(q.value()); }
  std::string format_atom(const Atom& atom) const override;

  Descriptor block(std::uint64_t j) const { return make({StripAtom{j}}); }
};

/// A finite F-play: blocks[0] = 0, picks[j] inside Y_{blocks[j]},
/// blocks[j+1] = F(picks[0..j]). blocks has |picks| or |picks|+1 entries.
struct FPlay {
  std::vector<std::uint64_t> blocks;
  SetSeq picks;

  /// Builds the play determined by the picks; with_next adds the block
  /// One would play after the last pick.
  static FPlay from_picks(const SetSeq& picks, bool with_next = false);
  PointSet s_value() const;
  json to_json() const;
  static FPlay from_json(const json& j);
};

/// Throws NotAnFPlay if p does not follow F.
void check_fplay(const FPlay& p);

struct IntersectionReport {
  PointSet brute;           // S(p1) n S(p2)
  PointSet prefix_union;    // N_1 u ... u N_{k-1}
  PointSet divergent;       // N_k n N'_k
  std::size_t diverge_at = 0;  // k (1-based); 0 if one play extends the other
  bool holds = false;          // brute == prefix_union u divergent
  bool literal_holds = false;  // brute == prefix_union
};

IntersectionReport play_intersection(const FPlay& p1, const FPlay& p2);

/// One's strategy in G_fin: open with Y_0, then play Y_{F(N_1..N_j)} where
/// N_i are Two's nonempty picks so far. The F-play is annotated as "fplay".
class FinStrategy final : public OneStrategy {
 public:
  std::string name() const override { return "fin"; }
  OneMove respond(const PlayView& view) override;
};

std::unique_ptr<OneStrategy> one_fin_strategy();

}  // namespace tgame
