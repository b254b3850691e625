#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "json.hpp"

#include "tgame/descriptor.hpp"

namespace tgame {

using json = nlohmann::json;

/// Ascending stream over the points of one atom.
class Cursor {
 public:
  virtual ~Cursor() = default;
  /// Current point, or nullopt when exhausted.
  virtual std::optional<Point> peek() const = 0;
  virtual void advance() = 0;
};

/// Stream m -> gen(m) for m in [0, limit); gen must be strictly increasing.
std::unique_ptr<Cursor> index_cursor(std::function<Point(std::uint64_t)> gen,
                                     std::optional<std::uint64_t> limit = std::nullopt);

/// Stream over an explicit sorted set.
std::unique_ptr<Cursor> list_cursor(std::vector<Point> points);

/// Best-first walk of a region of the sequence tree. `expand` must return
/// successors that compare above the node; every node popped is emitted.
std::unique_ptr<Cursor> heap_cursor(std::vector<Point> roots,
                                    std::function<std::vector<Point>(const Point&)> expand);

/// A countable space with a single non-isolated point p and a decidable
/// descriptor language. Implementations are immutable after construction.
class Space {
 public:
  virtual ~Space() = default;

  virtual std::string name() const = 0;
  virtual json params() const { return json::object(); }

  virtual bool accepts(const Atom& atom) const = 0;
  virtual bool is_point(const Point& q) const = 0;

  /// true iff the atom minus any finite set still has p in its closure.
  virtual bool atom_clusters(const Atom& atom) const = 0;
  virtual bool atom_contains(const Atom& atom, const Point& q) const = 0;
  virtual std::unique_ptr<Cursor> atom_cursor(const Atom& atom) const = 0;

  virtual json point_to_json(const Point& q) const = 0;
  virtual Point point_from_json(const json& j) const = 0;
  virtual json atom_to_json(const Atom& atom) const = 0;
  virtual Atom atom_from_json(const json& j) const = 0;
  virtual std::string format_point(const Point& q) const { return q.to_string(); }
  virtual std::string format_atom(const Atom& atom) const;

  /// Throws DescriptorError if d is not a well-formed descriptor of this space.
  void validate(const Descriptor& d) const;

  bool clusters_at_p(const Descriptor& d) const;
  bool contains(const Descriptor& d, const Point& q) const;
  std::vector<Point> enumerate(const Descriptor& d, std::size_t count) const;
  /// Least point of d satisfying pred, scanning at most `limit` points.
  std::optional<Point> find_first(const Descriptor& d, const std::function<bool(const Point&)>& pred,
                                  std::size_t limit = 1'000'000) const;
  Descriptor remove_finite(const Descriptor& d, const PointSet& s) const;

  Descriptor make(std::vector<Atom> atoms = {}, PointSet extra = {}, PointSet excluded = {}) const;
  Descriptor full() const { return make({FullAtom{}}); }

  json to_json(const Descriptor& d) const;
  Descriptor descriptor_from_json(const json& j) const;
  json to_json(const PointSet& s) const;
  PointSet points_from_json(const json& j) const;
  std::string format(const Descriptor& d) const;
  std::string format(const PointSet& s) const;
};

/// Streaming enumeration of a descriptor in canonical order.
class DescriptorStream {
 public:
  DescriptorStream(const Space& space, const Descriptor& d);
  std::optional<Point> next();

 private:
  using Entry = std::pair<Point, std::size_t>;
  struct Later {
    bool operator()(const Entry& a, const Entry& b) const { return a.first > b.first; }
  };
  PointSet excluded_;
  std::vector<std::unique_ptr<Cursor>> cursors_;
  std::priority_queue<Entry, std::vector<Entry>, Later> heap_;
  std::optional<Point> last_;
};

}  // namespace tgame
