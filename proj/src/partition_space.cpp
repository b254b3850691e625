#include "tgame/partition_space.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>

namespace tgame {

namespace {

using Positions = std::vector<std::uint64_t>;

Positions sorted_unique(Positions v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

bool contains_all(const Positions& sorted_set, const Positions& sub) {
  return std::includes(sorted_set.begin(), sorted_set.end(), sub.begin(), sub.end());
}

bool meets(const Positions& a, const Positions& b) {
  for (auto x : b)
    if (std::binary_search(a.begin(), a.end(), x)) return true;
  return false;
}

Seq append(const Seq& s, std::uint64_t c) {
  Seq out = s;
  out.push_back(c);
  return out;
}

}  // namespace

PartitionSpace::PartitionSpace(PartitionConfig cfg) : cfg_(cfg) {
  if (cfg_.k < 1) throw std::invalid_argument("partition space needs k >= 1");
}

std::vector<std::uint64_t> PartitionSpace::kset_positions(std::uint64_t i) const {
  return combinadic_unrank(i, cfg_.k);
}

PointSet PartitionSpace::kset(const Seq& s, std::uint64_t i) const {
  PointSet out;
  Point base(s);
  for (auto m : kset_positions(i)) out.insert(base.child(m));
  return out;
}

std::uint64_t PartitionSpace::least_kset_containing(const std::vector<std::uint64_t>& positions) const {
  Positions p = sorted_unique(positions);
  if (p.size() > cfg_.k) throw std::invalid_argument("more than k positions");
  for (std::uint64_t m = 0; p.size() < cfg_.k; ++m)
    if (!std::binary_search(p.begin(), p.end(), m)) p.insert(std::upper_bound(p.begin(), p.end(), m), m);
  return combinadic_rank(p);
}

bool PartitionSpace::cone_admits(const ConeAtom& c, std::uint64_t child) const {
  Positions ks = kset_positions(child);
  return contains_all(ks, c.pins) && !meets(ks, c.forbid);
}

bool PartitionSpace::cone_empty(const ConeAtom& c) const {
  return c.pins.size() > cfg_.k || meets(c.pins, c.forbid);
}

bool PartitionSpace::accepts(const Atom& atom) const {
  if (std::holds_alternative<FullAtom>(atom) || std::holds_alternative<BlockAtom>(atom) ||
      std::holds_alternative<KSetAtom>(atom))
    return true;
  if (const auto* c = std::get_if<ConeAtom>(&atom))
    return c->pins == sorted_unique(c->pins) && c->forbid == sorted_unique(c->forbid);
  return false;
}

bool PartitionSpace::atom_clusters(const Atom& atom) const {
  if (std::holds_alternative<FullAtom>(atom) || std::holds_alternative<BlockAtom>(atom)) return true;
  if (const auto* c = std::get_if<ConeAtom>(&atom)) return !cone_empty(*c);
  return false;
}

bool PartitionSpace::atom_contains(const Atom& atom, const Point& q) const {
  if (q.empty()) return false;
  if (std::holds_alternative<FullAtom>(atom)) return true;
  if (const auto* b = std::get_if<BlockAtom>(&atom))
    return q.size() == b->s.size() + 1 && is_prefix(b->s, q.seq());
  if (const auto* ks = std::get_if<KSetAtom>(&atom)) {
    if (q.size() != ks->s.size() + 1 || !is_prefix(ks->s, q.seq())) return false;
    auto pos = kset_positions(ks->i);
    return std::binary_search(pos.begin(), pos.end(), q.back());
  }
  const auto& c = std::get<ConeAtom>(atom);
  return q.size() >= c.s.size() + 2 && is_prefix(c.s, q.seq()) && cone_admits(c, q[c.s.size()]);
}

namespace {

std::optional<std::uint64_t> next_admissible(const PartitionSpace& x, const ConeAtom& c, std::uint64_t from) {
  if (x.cone_empty(c)) return std::nullopt;
  if (c.pins.size() == x.k()) {
    auto r = combinadic_rank(c.pins);
    return r >= from ? std::optional(r) : std::nullopt;
  }
  for (std::uint64_t child = from;; ++child)
    if (x.cone_admits(c, child)) return child;
}

}  // namespace

std::unique_ptr<Cursor> PartitionSpace::atom_cursor(const Atom& atom) const {
  if (std::holds_alternative<FullAtom>(atom)) {
    return heap_cursor({Point{0}}, [](const Point& v) { return std::vector<Point>{v.child(0), v.next_sibling()}; });
  }
  if (const auto* b = std::get_if<BlockAtom>(&atom)) {
    Point base(b->s);
    return index_cursor([base](std::uint64_t m) { return base.child(m); });
  }
  if (const auto* ks = std::get_if<KSetAtom>(&atom)) {
    auto pts = kset(ks->s, ks->i);
    return list_cursor({pts.begin(), pts.end()});
  }
  const auto c = std::get<ConeAtom>(atom);
  std::vector<Point> roots;
  if (auto first = next_admissible(*this, c, 0)) roots.push_back(Point(append(append(c.s, *first), 0)));
  const std::size_t root_len = c.s.size() + 2;
  return heap_cursor(std::move(roots), [this, c, root_len](const Point& v) {
    std::vector<Point> next{v.child(0), v.next_sibling()};
    if (v.size() == root_len && v.back() == 0) {
      if (auto nc = next_admissible(*this, c, v[c.s.size()] + 1)) next.push_back(Point(append(append(c.s, *nc), 0)));
    }
    return next;
  });
}

Point PartitionSpace::point(std::uint64_t n) {
  if (n == std::numeric_limits<std::uint64_t>::max()) throw std::overflow_error("point code too large");
  return Point(decode_sequence(n + 1));
}

std::optional<std::uint64_t> PartitionSpace::number(const Point& q) {
  auto c = q.code();
  if (!c || *c == 0 || *c - 1 > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  return static_cast<std::uint64_t>(*c - 1);
}

json PartitionSpace::point_to_json(const Point& q) const {
  if (auto n = number(q)) return *n;
  return {{"s", block_of(q)}, {"m", q.back()}};
}

Point PartitionSpace::point_from_json(const json& j) const {
  try {
    if (j.is_number_unsigned()) return point(j.get<std::uint64_t>());
    if (j.is_object()) return Point(append(j.at("s").get<Seq>(), j.at("m").get<std::uint64_t>()));
  } catch (const json::exception& e) {
    throw DescriptorError(std::string("bad partition point: ") + e.what());
  }
  throw DescriptorError("partition point must be a natural or {s, m}: " + j.dump());
}

json PartitionSpace::atom_to_json(const Atom& atom) const {
  if (std::holds_alternative<FullAtom>(atom)) return {{"kind", "full"}};
  if (const auto* b = std::get_if<BlockAtom>(&atom)) return {{"kind", "block"}, {"s", b->s}};
  if (const auto* ks = std::get_if<KSetAtom>(&atom)) return {{"kind", "kset"}, {"s", ks->s}, {"i", ks->i}};
  if (const auto* c = std::get_if<ConeAtom>(&atom))
    return {{"kind", "cone"}, {"s", c->s}, {"pins", c->pins}, {"forbid", c->forbid}};
  throw DescriptorError("atom not in the partition language");
}

Atom PartitionSpace::atom_from_json(const json& j) const {
  try {
    auto kind = j.at("kind").get<std::string>();
    if (kind == "full") return FullAtom{};
    if (kind == "block") return BlockAtom{j.at("s").get<Seq>()};
    if (kind == "kset") return KSetAtom{j.at("s").get<Seq>(), j.at("i").get<std::uint64_t>()};
    if (kind == "cone")
      return ConeAtom{j.at("s").get<Seq>(), j.value("pins", Positions{}), j.value("forbid", Positions{})};
    throw DescriptorError("unknown partition atom kind '" + kind + "'");
  } catch (const json::exception& e) {
    throw DescriptorError(std::string("malformed partition atom: ") + e.what());
  }
}

std::string PartitionSpace::format_point(const Point& q) const {
  if (auto n = number(q)) return std::to_string(*n);
  return Point(block_of(q)).to_string() + "#" + std::to_string(q.back());
}

std::string PartitionSpace::format_atom(const Atom& atom) const {
  if (std::holds_alternative<FullAtom>(atom)) return "whole space";
  if (const auto* b = std::get_if<BlockAtom>(&atom)) return "N" + Point(b->s).to_string();
  if (const auto* ks = std::get_if<KSetAtom>(&atom))
    return "K" + Point(ks->s).to_string() + "_" + std::to_string(ks->i);
  const auto& c = std::get<ConeAtom>(atom);
  std::string out = "blocks below " + Point(c.s).to_string();
  if (!c.pins.empty()) out += " through K-sets containing " + Point(c.pins).to_string();
  if (!c.forbid.empty()) out += " avoiding " + Point(c.forbid).to_string();
  return out;
}

// ---------------------------------------------------------------------------
// Fat branches

PointSet FatBranchPrefix::covered(const PartitionSpace& x) const {
  PointSet out;
  for (std::size_t j = 0; j < g.size(); ++j) {
    auto ks = x.kset(Seq(g.begin(), g.begin() + static_cast<std::ptrdiff_t>(j)), g[j]);
    out.insert(ks.begin(), ks.end());
  }
  return out;
}

namespace {

/// Block-address chain of a finite set, if its addresses form a chain.
struct Chain {
  std::map<std::size_t, Seq> by_length;             // address per length
  std::map<Seq, Positions> groups;                   // positions per address
  Seq top;                                           // longest address
};

std::optional<Chain> chain_of(const PointSet& b) {
  Chain ch;
  for (const auto& q : b) ch.groups[PartitionSpace::block_of(q)].push_back(q.back());
  for (auto& [s, pos] : ch.groups) pos = sorted_unique(pos);
  for (const auto& [s, pos] : ch.groups)
    if (s.size() >= ch.top.size()) ch.top = s;
  for (const auto& [s, pos] : ch.groups) {
    if (!is_prefix(s, ch.top)) return std::nullopt;
    ch.by_length[s.size()] = s;
  }
  return ch;
}

}  // namespace

std::optional<FatBranchPrefix> covered_by_single_fat_branch(const PartitionSpace& x, const PointSet& b) {
  if (b.empty()) return FatBranchPrefix{};
  auto ch = chain_of(b);
  if (!ch) return std::nullopt;
  const Seq& u = ch->top;
  for (const auto& [s, pos] : ch->groups) {
    if (s.size() == u.size()) continue;
    auto forced = x.kset_positions(u[s.size()]);
    if (!contains_all(forced, pos)) return std::nullopt;
  }
  const auto& top_group = ch->groups.at(u);
  if (top_group.size() > x.k()) return std::nullopt;
  return FatBranchPrefix{append(u, x.least_kset_containing(top_group))};
}

std::optional<PointSet> find_uncoverable_subset(const PartitionSpace& x, const std::vector<Point>& pool_in) {
  std::vector<Point> pool = pool_in;
  std::sort(pool.begin(), pool.end());
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
  const std::size_t r = x.k() + 1;
  if (pool.size() < r) return std::nullopt;
  std::vector<std::size_t> idx(r);
  for (std::size_t i = 0; i < r; ++i) idx[i] = i;
  while (true) {
    PointSet b;
    for (auto i : idx) b.insert(pool[i]);
    if (!covered_by_single_fat_branch(x, b)) return b;
    // next combination in lexicographic order
    std::size_t i = r;
    while (i > 0 && idx[i - 1] == pool.size() - r + i - 1) --i;
    if (i == 0) return std::nullopt;
    ++idx[i - 1];
    for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

namespace {

PointSet uncoverable_from(const PartitionSpace& x, const std::function<std::vector<Point>(std::size_t)>& first,
                          std::size_t max_pool) {
  std::size_t width = 3 * (x.k() + 1) * (x.k() + 1);
  while (true) {
    auto pool = first(width);
    if (auto b = find_uncoverable_subset(x, pool)) return *b;
    if (pool.size() < width || width >= max_pool)
      throw std::runtime_error("no uncoverable subset within the first " + std::to_string(pool.size()) + " points");
    width *= 2;
  }
}

}  // namespace

PointSet uncoverable_subset_of(const PartitionSpace& x, const Descriptor& d, std::size_t max_pool) {
  return uncoverable_from(x, [&](std::size_t n) { return x.enumerate(d, n); }, max_pool);
}

PointSet down_set(const PartitionSpace& x, const PointSet& y) {
  PointSet out;
  for (const auto& q : y) {
    Seq s = PartitionSpace::block_of(q);
    for (std::size_t j = 0; j < s.size(); ++j) {
      auto ks = x.kset(Seq(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(j)), s[j]);
      out.insert(ks.begin(), ks.end());
    }
  }
  return out;
}

std::pair<std::uint64_t, FatBranchPrefix> max_fat_branch_load(const PartitionSpace& x, const PointSet& e) {
  std::map<Seq, Positions> groups;
  for (const auto& q : e) groups[PartitionSpace::block_of(q)].push_back(q.back());
  for (auto& [s, pos] : groups) pos = sorted_unique(pos);

  // best load of a fat branch restricted to the subtree at s
  std::map<Seq, std::pair<std::uint64_t, Seq>> memo;
  auto best = [&](auto&& self, const Seq& s) -> std::pair<std::uint64_t, Seq> {
    if (auto it = memo.find(s); it != memo.end()) return it->second;
    Positions here;
    if (auto it = groups.find(s); it != groups.end()) here = it->second;
    std::set<std::uint64_t> live_children;
    for (const auto& [t, pos] : groups)
      if (t.size() > s.size() && is_prefix(s, t)) live_children.insert(t[s.size()]);
    // any child: the K-set of the k least positions here, nothing below
    Positions top(here.begin(), here.begin() + static_cast<std::ptrdiff_t>(std::min<std::size_t>(here.size(), x.k())));
    std::pair<std::uint64_t, Seq> result{top.size(), Seq{x.least_kset_containing(top)}};
    for (auto c : live_children) {
      auto ks = x.kset_positions(c);
      std::uint64_t hit = 0;
      for (auto m : here) hit += std::binary_search(ks.begin(), ks.end(), m);
      auto [below, tail] = self(self, append(s, c));
      if (hit + below > result.first) {
        Seq g{c};
        g.insert(g.end(), tail.begin(), tail.end());
        result = {hit + below, g};
      }
    }
    memo[s] = result;
    return result;
  };
  auto [load, g] = best(best, Seq{});
  return {load, FatBranchPrefix{g}};
}

// ---------------------------------------------------------------------------
// Descriptor algebra

namespace {

struct Parts {
  std::vector<Atom> inf;  // block and nonempty cone atoms only
  PointSet fin;           // exact finite part
  PointSet excluded;
};

ConeAtom cone(Seq s, Positions pins = {}, Positions forbid = {}) {
  return ConeAtom{std::move(s), sorted_unique(std::move(pins)), sorted_unique(std::move(forbid))};
}

Parts split(const PartitionSpace& x, const Descriptor& d) {
  Parts p;
  p.excluded = d.excluded;
  p.fin = d.extra;
  for (const auto& a : d.atoms) {
    if (std::holds_alternative<FullAtom>(a)) {
      p.inf.push_back(BlockAtom{});
      p.inf.push_back(cone({}));
    } else if (const auto* ks = std::get_if<KSetAtom>(&a)) {
      for (const auto& q : x.kset(ks->s, ks->i))
        if (!d.excluded.contains(q)) p.fin.insert(q);
    } else if (const auto* c = std::get_if<ConeAtom>(&a)) {
      if (!x.cone_empty(*c)) p.inf.push_back(*c);
    } else {
      p.inf.push_back(a);
    }
  }
  return p;
}

class AtomOps {
 public:
  explicit AtomOps(const PartitionSpace& x) : x_(x) {}

  bool in_cone(const ConeAtom& c, const Seq& t) const {
    return t.size() > c.s.size() && is_prefix(c.s, t) && x_.cone_admits(c, t[c.s.size()]);
  }

  void push(std::vector<Atom>& out, ConeAtom c) const {
    if (!x_.cone_empty(c)) out.push_back(std::move(c));
  }

  /// Cone c minus the subtree through child `child` of c.s.
  void other_children(std::vector<Atom>& out, const ConeAtom& c, std::uint64_t child) const {
    for (auto m : x_.kset_positions(child)) {
      if (std::binary_search(c.pins.begin(), c.pins.end(), m)) continue;
      Positions f = c.forbid;
      f.push_back(m);
      push(out, cone(c.s, c.pins, f));
    }
  }

  /// Cone c minus the block N_t, for t inside c.
  void cone_minus_block(std::vector<Atom>& out, const ConeAtom& c, const Seq& t) const {
    std::uint64_t child = t[c.s.size()];
    other_children(out, c, child);
    Seq u = append(c.s, child);
    if (u == t) {
      out.push_back(cone(u));
    } else {
      out.push_back(BlockAtom{u});
      cone_minus_block(out, cone(u), t);
    }
  }

  std::vector<Atom> minus(const Atom& a, const Atom& z) const {
    std::vector<Atom> out;
    if (const auto* ab = std::get_if<BlockAtom>(&a)) {
      bool gone = false;
      if (const auto* zb = std::get_if<BlockAtom>(&z)) gone = zb->s == ab->s;
      else gone = in_cone(std::get<ConeAtom>(z), ab->s);
      if (!gone) out.push_back(a);
      return out;
    }
    const auto& c = std::get<ConeAtom>(a);
    if (const auto* zb = std::get_if<BlockAtom>(&z)) {
      if (in_cone(c, zb->s)) cone_minus_block(out, c, zb->s);
      else out.push_back(a);
      return out;
    }
    cone_minus_cone(out, c, std::get<ConeAtom>(z));
    return out;
  }

  void cone_minus_cone(std::vector<Atom>& out, const ConeAtom& c, const ConeAtom& y) const {
    if (c.s == y.s) {
      Positions pins = c.pins;
      pins.insert(pins.end(), y.pins.begin(), y.pins.end());
      Positions forbid = c.forbid;
      forbid.insert(forbid.end(), y.forbid.begin(), y.forbid.end());
      if (x_.cone_empty(cone(c.s, pins, forbid))) {
        out.push_back(c);
        return;
      }
      for (auto m : y.pins) {
        if (std::binary_search(c.pins.begin(), c.pins.end(), m)) continue;
        Positions f = c.forbid;
        f.push_back(m);
        push(out, cone(c.s, c.pins, f));
      }
      for (auto m : y.forbid) {
        if (std::binary_search(c.forbid.begin(), c.forbid.end(), m)) continue;
        Positions p = c.pins;
        p.push_back(m);
        push(out, cone(c.s, p, c.forbid));
      }
      return;
    }
    if (c.s.size() < y.s.size() && is_prefix(c.s, y.s)) {
      std::uint64_t child = y.s[c.s.size()];
      if (!x_.cone_admits(c, child)) {
        out.push_back(c);
        return;
      }
      other_children(out, c, child);
      Seq u = append(c.s, child);
      out.push_back(BlockAtom{u});
      cone_minus_cone(out, cone(u), y);
      return;
    }
    if (y.s.size() < c.s.size() && is_prefix(y.s, c.s)) {
      if (!x_.cone_admits(y, c.s[y.s.size()])) out.push_back(c);
      return;
    }
    out.push_back(c);
  }

  std::vector<Atom> inter(const Atom& a, const Atom& z) const {
    std::vector<Atom> out;
    const auto* ab = std::get_if<BlockAtom>(&a);
    const auto* zb = std::get_if<BlockAtom>(&z);
    if (ab && zb) {
      if (ab->s == zb->s) out.push_back(a);
      return out;
    }
    if (ab || zb) {
      const auto& blk = ab ? *ab : *zb;
      const auto& c = std::get<ConeAtom>(ab ? z : a);
      if (in_cone(c, blk.s)) out.push_back(blk);
      return out;
    }
    const auto& c = std::get<ConeAtom>(a);
    const auto& y = std::get<ConeAtom>(z);
    if (c.s == y.s) {
      Positions pins = c.pins;
      pins.insert(pins.end(), y.pins.begin(), y.pins.end());
      Positions forbid = c.forbid;
      forbid.insert(forbid.end(), y.forbid.begin(), y.forbid.end());
      push(out, cone(c.s, pins, forbid));
    } else if (c.s.size() < y.s.size() && is_prefix(c.s, y.s)) {
      if (x_.cone_admits(c, y.s[c.s.size()])) out.push_back(y);
    } else if (y.s.size() < c.s.size() && is_prefix(y.s, c.s)) {
      if (x_.cone_admits(y, c.s[y.s.size()])) out.push_back(c);
    }
    return out;
  }

 private:
  const PartitionSpace& x_;
};

bool in_any(const PartitionSpace& x, const std::vector<Atom>& atoms, const Point& q) {
  return std::any_of(atoms.begin(), atoms.end(), [&](const Atom& a) { return x.atom_contains(a, q); });
}

Descriptor assemble(const PartitionSpace& x, std::vector<Atom> atoms, const PointSet& excluded, PointSet extra) {
  // dedupe atoms, drop exclusions that no atom reaches
  std::vector<Atom> uniq;
  for (auto& a : atoms)
    if (std::find(uniq.begin(), uniq.end(), a) == uniq.end()) uniq.push_back(std::move(a));
  PointSet excl;
  for (const auto& q : excluded)
    if (!extra.contains(q) && in_any(x, uniq, q)) excl.insert(q);
  return x.make(std::move(uniq), std::move(extra), std::move(excl));
}

/// Whether the atoms of a and b share infinitely many points.
bool atoms_meet(const PartitionSpace& x, const Descriptor& a, const Descriptor& b) {
  AtomOps ops(x);
  Parts pa = split(x, a);
  Parts pb = split(x, b);
  for (const auto& l : pa.inf)
    for (const auto& r : pb.inf)
      for (const auto& v : ops.inter(l, r))
        if (x.atom_clusters(v)) return true;
  return false;
}

}  // namespace

Descriptor subtract(const PartitionSpace& x, const Descriptor& a, const Descriptor& b) {
  x.validate(a);
  x.validate(b);
  AtomOps ops(x);
  Parts pa = split(x, a);
  Parts pb = split(x, b);
  std::vector<Atom> atoms = pa.inf;
  for (const auto& z : pb.inf) {
    std::vector<Atom> next;
    for (const auto& at : atoms) {
      auto r = ops.minus(at, z);
      next.insert(next.end(), r.begin(), r.end());
    }
    atoms = std::move(next);
  }
  PointSet extra;
  for (const auto& q : pa.fin)
    if (!x.contains(b, q)) extra.insert(q);
  // points of a's atoms that b's atoms reach but b excludes stay in the result
  for (const auto& q : pb.excluded)
    if (!x.contains(b, q) && in_any(x, pa.inf, q) && !pa.excluded.contains(q)) extra.insert(q);
  PointSet excluded = pa.excluded;
  excluded.insert(pb.fin.begin(), pb.fin.end());
  return assemble(x, std::move(atoms), excluded, std::move(extra));
}

Descriptor intersect(const PartitionSpace& x, const Descriptor& a, const Descriptor& b) {
  x.validate(a);
  x.validate(b);
  AtomOps ops(x);
  Parts pa = split(x, a);
  Parts pb = split(x, b);
  std::vector<Atom> atoms;
  for (const auto& l : pa.inf)
    for (const auto& r : pb.inf) {
      auto v = ops.inter(l, r);
      atoms.insert(atoms.end(), v.begin(), v.end());
    }
  PointSet extra;
  for (const auto& q : pa.fin)
    if (x.contains(b, q)) extra.insert(q);
  for (const auto& q : pb.fin)
    if (x.contains(a, q)) extra.insert(q);
  PointSet excluded = pa.excluded;
  excluded.insert(pb.excluded.begin(), pb.excluded.end());
  return assemble(x, std::move(atoms), excluded, std::move(extra));
}

Descriptor z_set(const PartitionSpace& x, const PointSet& dset) {
  if (dset.empty()) return x.full();
  auto ch = chain_of(dset);
  if (!ch || !covered_by_single_fat_branch(x, dset)) return x.make();
  const Seq& u = ch->top;
  const Positions& top = ch->groups.at(u);
  std::vector<Atom> atoms;
  for (std::size_t len = 0; len < u.size(); ++len) atoms.push_back(KSetAtom{Seq(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(len)), u[len]});
  if (top.size() < x.k()) atoms.push_back(BlockAtom{u});
  else atoms.push_back(KSetAtom{u, combinadic_rank(top)});
  atoms.push_back(cone(u, top));
  // finite parts as explicit points keep the result canonical
  Descriptor d = x.make(std::move(atoms));
  return intersect(x, d, x.full());
}

Descriptor z_restrict(const PartitionSpace& x, const Descriptor& d, const PointSet& dset) {
  return intersect(x, d, z_set(x, dset));
}

// ---------------------------------------------------------------------------
// Strategies

namespace {

std::vector<PointSet> subsets_of_size(const PointSet& s, std::size_t r) {
  std::vector<Point> v(s.begin(), s.end());
  std::vector<PointSet> out;
  if (r > v.size()) return out;
  std::vector<std::size_t> idx(r);
  for (std::size_t i = 0; i < r; ++i) idx[i] = i;
  while (true) {
    PointSet c;
    for (auto i : idx) c.insert(v[i]);
    out.push_back(std::move(c));
    std::size_t i = r;
    while (i > 0 && idx[i - 1] == v.size() - r + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

}  // namespace

TwoMove EubStrategy::respond(const PlayView& view, const Descriptor& a_in) {
  const auto* x = dynamic_cast<const PartitionSpace*>(&view.space);
  if (!x) throw StrategyInapplicable("EUB strategy runs on the partition space only");
  const std::uint64_t k = x->k();
  auto budget = view.bound.budget(view.inning);
  if (!budget || *budget < k + 1) throw StrategyInapplicable("EUB strategy needs a budget of k+1");
  try {
    x->validate(a_in);
  } catch (const DescriptorError& e) {
    throw StrategyInapplicable(e.what());
  }

  auto annotate = [&](const char* which, const PointSet& pick) {
    return TwoMove{pick, {{"E", x->to_json(e_)}, {"case", which}}};
  };

  if (e_.empty()) {
    PointSet b = uncoverable_subset_of(*x, a_in);
    e_ = b;
    return annotate("initial", b);
  }

  Descriptor a = x->remove_finite(a_in, down_set(*x, e_));

  auto z_of = [&](const PointSet& c) -> const Descriptor& {
    auto key = std::make_pair(k, c);
    auto it = z_cache_.find(key);
    if (it == z_cache_.end()) it = z_cache_.emplace(std::move(key), z_set(*x, c)).first;
    return it->second;
  };
  // finite parts never decide clustering, so each carve runs on the atoms
  // first and on the full move only when it clusters
  const Descriptor core = x->make(a.atoms);

  auto outside = [&](Descriptor d) {
    for (const auto& e : e_) {
      d = subtract(*x, d, z_of({e}));
      if (!x->clusters_at_p(d)) break;
    }
    return d;
  };
  if (x->clusters_at_p(outside(core))) {
    auto i = x->enumerate(outside(a), 1);
    e_.insert(i.front());
    return annotate("fresh", {i.front()});
  }

  struct Candidate {
    PointSet c;
    Seq top;
    const Descriptor* z;
    Descriptor z_core;
  };
  std::map<std::uint64_t, std::vector<Candidate>> coverable;
  for (std::uint64_t j = 1; j <= k; ++j)
    for (auto& c : subsets_of_size(e_, j)) {
      if (!covered_by_single_fat_branch(*x, c)) continue;
      const Descriptor& z = z_of(c);
      Seq top = chain_of(c)->top;
      coverable[j].push_back({std::move(c), std::move(top), &z, x->make(z.atoms)});
    }
  for (std::uint64_t d = k; d >= 1; --d) {
    for (const auto& cand : coverable[d]) {
      const PointSet& dset = cand.c;
      const Seq& u_d = cand.top;
      // same carve on atoms alone, where incomparable tops change nothing
      auto carve_core = [&] {
        Descriptor star = x->make(intersect(*x, core, cand.z_core).atoms);
        for (std::uint64_t j = d + 1; j <= k && x->clusters_at_p(star); ++j) {
          for (const auto& c : coverable[j]) {
            if (!is_prefix(c.top, u_d) && !is_prefix(u_d, c.top)) continue;
            star = x->make(subtract(*x, star, c.z_core).atoms);
            if (!x->clusters_at_p(star)) break;
          }
        }
        return star;
      };
      if (!atoms_meet(*x, core, cand.z_core) || !x->clusters_at_p(carve_core())) continue;
      // the exact A* read off in order: Z_D n A without the larger Z_C
      const Descriptor base = intersect(*x, a, *cand.z);
      auto outside_larger = [&](const Point& q) {
        const Seq bq = PartitionSpace::block_of(q);
        for (std::uint64_t j = d + 1; j <= k; ++j)
          for (const auto& c : coverable[j])
            if ((is_prefix(c.top, bq) || is_prefix(bq, c.top)) && x->contains(*c.z, q)) return false;
        return true;
      };
      auto first = [&](std::size_t n) {
        std::vector<Point> out;
        for (std::size_t m = n;; m *= 2) {
          auto pts = x->enumerate(base, m);
          out.clear();
          for (const auto& q : pts) {
            if (out.size() == n) break;
            if (outside_larger(q)) out.push_back(q);
          }
          if (out.size() == n || pts.size() < m) return out;
        }
      };
      PointSet b = uncoverable_from(*x, first, 1 << 14);
      for (const auto& q : dset) e_.erase(q);
      e_.insert(b.begin(), b.end());
      auto move = annotate("replace", b);
      move.notes["D"] = x->to_json(dset);
      return move;
    }
  }
  throw StrategyInapplicable("no D with a clustering A*; One's move breaks the language assumptions");
}

OneMove FatBranchStrategy::respond(const PlayView& view) {
  const auto* x = dynamic_cast<const PartitionSpace*>(&view.space);
  if (!x) throw StrategyInapplicable("fat-branch strategy runs on the partition space only");
  Seq g;
  if (!view.history.empty()) {
    const auto& notes = view.history.back().annotations;
    g = notes.at("prefix").get<Seq>();
    const PointSet& pick = view.history.back().two;
    Positions pos;
    for (const auto& q : pick) {
      if (PartitionSpace::block_of(q) != g) throw StrategyInapplicable("Two's pick left the current block");
      pos.push_back(q.back());
    }
    if (pos.size() > x->k()) throw StrategyInapplicable("Two picked more than k points");
    g.push_back(x->least_kset_containing(pos));
  }
  return {x->block(g), {{"prefix", g}}};
}

std::unique_ptr<TwoStrategy> two_eub_strategy() { return std::make_unique<EubStrategy>(); }
std::unique_ptr<OneStrategy> one_fatbranch_strategy() { return std::make_unique<FatBranchStrategy>(); }

}  // namespace tgame
