#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <set>
#include <string>

#include "tgame/coding.hpp"

namespace tgame {

/// An element of a space's countable ground set, stored as a finite sequence
/// over omega. Naturals are stored as one-element sequences.
///
/// Ordering: by Cantor sequence code while it fits in 128 bits; points with
/// larger codes follow all representable ones and are ordered by
/// (length + sum, lexicographic). For one-element sequences this is plain
/// numeric order. Every point has finitely many predecessors, and both
/// s^(0) and the next sibling of s compare above s.
class Point {
 public:
  Point() : Point(Seq{}) {}
  explicit Point(Seq seq);
  Point(std::initializer_list<std::uint64_t> seq) : Point(Seq(seq)) {}

  static Point natural(std::uint64_t n) { return Point(Seq{n}); }

  const Seq& seq() const { return seq_; }
  std::size_t size() const { return seq_.size(); }
  bool empty() const { return seq_.empty(); }
  std::uint64_t operator[](std::size_t i) const { return seq_[i]; }
  std::uint64_t back() const { return seq_.back(); }

  /// Value of a one-element point.
  std::uint64_t value() const;

  /// Cantor code, if representable.
  std::optional<u128> code() const;

  Point child(std::uint64_t k) const;
  Point next_sibling() const;
  Point parent() const;
  Point prefix(std::size_t len) const;

  /// s is an initial segment of *this (not necessarily proper).
  bool extends(const Point& s) const { return is_prefix(s.seq_, seq_); }
  bool comparable(const Point& o) const { return extends(o) || o.extends(*this); }

  std::string to_string() const;

  friend bool operator==(const Point& a, const Point& b) { return a.seq_ == b.seq_; }
  friend std::strong_ordering operator<=>(const Point& a, const Point& b);

 private:
  Seq seq_;
  u128 code_ = 0;
  std::uint64_t weight_ = 0;
  bool big_ = false;
};

using PointSet = std::set<Point>;

std::string to_string(const PointSet& s);

}  // namespace tgame
