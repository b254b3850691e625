#include "tgame/space.hpp"

#include <algorithm>

namespace tgame {

namespace {

class IndexCursor final : public Cursor {
 public:
  IndexCursor(std::function<Point(std::uint64_t)> gen, std::optional<std::uint64_t> limit)
      : gen_(std::move(gen)), limit_(limit) {
    load();
  }
  std::optional<Point> peek() const override { return current_; }
  void advance() override {
    ++m_;
    load();
  }

 private:
  void load() {
    if (limit_ && m_ >= *limit_) current_.reset();
    else current_ = gen_(m_);
  }
  std::function<Point(std::uint64_t)> gen_;
  std::optional<std::uint64_t> limit_;
  std::uint64_t m_ = 0;
  std::optional<Point> current_;
};

class ListCursor final : public Cursor {
 public:
  explicit ListCursor(std::vector<Point> pts) : pts_(std::move(pts)) {
    std::sort(pts_.begin(), pts_.end());
  }
  std::optional<Point> peek() const override {
    if (i_ < pts_.size()) return pts_[i_];
    return std::nullopt;
  }
  void advance() override { ++i_; }

 private:
  std::vector<Point> pts_;
  std::size_t i_ = 0;
};

class HeapCursor final : public Cursor {
 public:
  HeapCursor(std::vector<Point> roots, std::function<std::vector<Point>(const Point&)> expand)
      : expand_(std::move(expand)) {
    for (auto& r : roots) heap_.push(std::move(r));
  }
  std::optional<Point> peek() const override {
    if (heap_.empty()) return std::nullopt;
    return heap_.top();
  }
  void advance() override {
    Point top = heap_.top();
    heap_.pop();
    for (auto& q : expand_(top)) heap_.push(std::move(q));
  }

 private:
  std::function<std::vector<Point>(const Point&)> expand_;
  std::priority_queue<Point, std::vector<Point>, std::greater<>> heap_;
};

}  // namespace

std::unique_ptr<Cursor> index_cursor(std::function<Point(std::uint64_t)> gen,
                                     std::optional<std::uint64_t> limit) {
  return std::make_unique<IndexCursor>(std::move(gen), limit);
}

std::unique_ptr<Cursor> list_cursor(std::vector<Point> points) {
  return std::make_unique<ListCursor>(std::move(points));
}

std::unique_ptr<Cursor> heap_cursor(std::vector<Point> roots,
                                    std::function<std::vector<Point>(const Point&)> expand) {
  return std::make_unique<HeapCursor>(std::move(roots), std::move(expand));
}

std::string Space::format_atom(const Atom& atom) const { return atom_to_json(atom).dump(); }

void Space::validate(const Descriptor& d) const {
  if (d.space != name())
    throw DescriptorError("descriptor for space '" + d.space + "' given to space '" + name() + "'");
  for (const auto& a : d.atoms)
    if (!accepts(a)) throw DescriptorError("atom " + atom_to_json(a).dump() + " not in the language of " + name());
  for (const auto& q : d.excluded)
    if (!is_point(q)) throw DescriptorError("excluded entry " + q.to_string() + " is not a point of " + name());
  for (const auto& q : d.extra) {
    if (!is_point(q)) throw DescriptorError("extra entry " + q.to_string() + " is not a point of " + name());
    if (d.excluded.contains(q)) throw DescriptorError("point " + format_point(q) + " both excluded and extra");
  }
}

bool Space::clusters_at_p(const Descriptor& d) const {
  validate(d);
  return std::any_of(d.atoms.begin(), d.atoms.end(), [&](const Atom& a) { return atom_clusters(a); });
}

bool Space::contains(const Descriptor& d, const Point& q) const {
  if (d.extra.contains(q)) return true;
  if (d.excluded.contains(q)) return false;
  return std::any_of(d.atoms.begin(), d.atoms.end(), [&](const Atom& a) { return atom_contains(a, q); });
}

std::vector<Point> Space::enumerate(const Descriptor& d, std::size_t count) const {
  std::vector<Point> out;
  if (count == 0) return out;
  DescriptorStream stream(*this, d);
  while (out.size() < count) {
    auto q = stream.next();
    if (!q) break;
    out.push_back(std::move(*q));
  }
  return out;
}

std::optional<Point> Space::find_first(const Descriptor& d, const std::function<bool(const Point&)>& pred,
                                       std::size_t limit) const {
  DescriptorStream stream(*this, d);
  for (std::size_t i = 0; i < limit; ++i) {
    auto q = stream.next();
    if (!q) return std::nullopt;
    if (pred(*q)) return q;
  }
  return std::nullopt;
}

Descriptor Space::remove_finite(const Descriptor& d, const PointSet& s) const {
  Descriptor out = d;
  for (const auto& q : s) {
    out.extra.erase(q);
    if (std::any_of(d.atoms.begin(), d.atoms.end(), [&](const Atom& a) { return atom_contains(a, q); }))
      out.excluded.insert(q);
  }
  return out;
}

Descriptor Space::make(std::vector<Atom> atoms, PointSet extra, PointSet excluded) const {
  Descriptor d{name(), std::move(atoms), std::move(excluded), std::move(extra)};
  validate(d);
  return d;
}

json Space::to_json(const PointSet& s) const {
  json arr = json::array();
  for (const auto& q : s) arr.push_back(point_to_json(q));
  return arr;
}

PointSet Space::points_from_json(const json& j) const {
  if (!j.is_array()) throw DescriptorError("expected an array of points");
  PointSet out;
  for (const auto& e : j) {
    Point q = point_from_json(e);
    if (!is_point(q)) throw DescriptorError("not a point of " + name() + ": " + e.dump());
    out.insert(std::move(q));
  }
  return out;
}

json Space::to_json(const Descriptor& d) const {
  json atoms = json::array();
  for (const auto& a : d.atoms) atoms.push_back(atom_to_json(a));
  return {{"space", d.space}, {"atoms", atoms}, {"excluded", to_json(d.excluded)}, {"extra", to_json(d.extra)}};
}

Descriptor Space::descriptor_from_json(const json& j) const {
  try {
    Descriptor d;
    d.space = j.at("space").get<std::string>();
    for (const auto& a : j.at("atoms")) d.atoms.push_back(atom_from_json(a));
    d.excluded = points_from_json(j.value("excluded", json::array()));
    d.extra = points_from_json(j.value("extra", json::array()));
    validate(d);
    return d;
  } catch (const json::exception& e) {
    throw DescriptorError(std::string("malformed descriptor JSON: ") + e.what());
  }
}

std::string Space::format(const Descriptor& d) const {
  std::string out;
  for (std::size_t i = 0; i < d.atoms.size(); ++i) out += (i ? " + " : "") + format_atom(d.atoms[i]);
  if (!d.excluded.empty()) out += " minus " + format(d.excluded);
  if (!d.extra.empty()) out += (out.empty() ? "" : " + ") + format(d.extra);
  return out.empty() ? "empty" : out;
}

std::string Space::format(const PointSet& s) const {
  std::string out = "{";
  bool first = true;
  for (const auto& q : s) {
    out += (first ? "" : ", ") + format_point(q);
    first = false;
  }
  return out + "}";
}

DescriptorStream::DescriptorStream(const Space& space, const Descriptor& d) : excluded_(d.excluded) {
  for (const auto& a : d.atoms) cursors_.push_back(space.atom_cursor(a));
  if (!d.extra.empty()) cursors_.push_back(list_cursor({d.extra.begin(), d.extra.end()}));
  for (std::size_t i = 0; i < cursors_.size(); ++i)
    if (auto q = cursors_[i]->peek()) heap_.emplace(std::move(*q), i);
}

std::optional<Point> DescriptorStream::next() {
  while (!heap_.empty()) {
    auto [q, i] = heap_.top();
    heap_.pop();
    cursors_[i]->advance();
    if (auto nq = cursors_[i]->peek()) heap_.emplace(std::move(*nq), i);
    if (last_ && q == *last_) continue;
    if (excluded_.contains(q)) continue;
    last_ = q;
    return q;
  }
  return std::nullopt;
}

}  // namespace tgame
