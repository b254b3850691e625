#include "tgame/scheepers_space.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

namespace tgame {

void validate_seq(const SetSeq& t) {
  if (t.empty()) throw DescriptorError("sequence of sets must be nonempty");
  std::set<std::uint64_t> blocks;
  for (const auto& entry : t) {
    if (entry.empty()) throw DescriptorError("entries must be nonempty");
    if (!std::is_sorted(entry.begin(), entry.end()) ||
        std::adjacent_find(entry.begin(), entry.end()) != entry.end())
      throw DescriptorError("entries must be sorted without repeats");
    std::uint64_t b = ScheepersSpace::block_of(entry.front());
    for (auto x : entry)
      if (ScheepersSpace::block_of(x) != b) throw DescriptorError("entry spans several blocks");
    if (!blocks.insert(b).second) throw DescriptorError("two entries share block " + std::to_string(b));
  }
}

namespace {

constexpr std::uint64_t kLongPlayWeight = 16;

/// Sets of naturals {x} with sum (x+1) = w, as ascending vectors.
const std::vector<std::vector<std::uint64_t>>& distinct_parts(std::uint64_t w) {
  static std::vector<std::vector<std::vector<std::uint64_t>>> cache{{}};
  while (cache.size() <= w) {
    std::uint64_t n = cache.size();
    std::vector<std::vector<std::uint64_t>> out;
    // largest part first, then the rest strictly smaller
    for (std::uint64_t top = 1; top <= n; ++top) {
      std::uint64_t rest = n - top;
      if (rest == 0) {
        out.push_back({top - 1});
        continue;
      }
      for (const auto& r : cache[rest]) {
        if (r.back() + 1 >= top) continue;
        auto v = r;
        v.push_back(top - 1);
        out.push_back(std::move(v));
      }
    }
    cache.push_back(std::move(out));
  }
  return cache[w];
}

enum class StreamKind { by_size, conforming_cost, conforming_long };

class Enumeration {
 public:
  static Enumeration& instance() {
    static Enumeration e;
    return e;
  }

  SetSeq at(std::uint64_t n) {
    std::lock_guard lock(mu_);
    while (items_.size() <= n) extend();
    return *items_[n];
  }

  std::uint64_t index_of(const SetSeq& t) {
    validate_seq(t);
    std::lock_guard lock(mu_);
    while (true) {
      if (auto it = index_.find(t); it != index_.end()) return it->second;
      extend();
    }
  }

  std::uint64_t f_at(std::uint64_t n) {
    std::lock_guard lock(mu_);
    while (items_.size() <= n) extend();
    return f_[n];
  }

  std::uint64_t f_of(const SetSeq& t) {
    auto n = index_of(t);
    std::lock_guard lock(mu_);
    return f_[n];
  }

  void set_capacity(std::size_t c) {
    std::lock_guard lock(mu_);
    capacity_ = c;
  }

  std::size_t size() {
    std::lock_guard lock(mu_);
    return items_.size();
  }

 private:
  struct Stream {
    StreamKind kind;
    std::uint64_t cost = 0;
    std::vector<SetSeq> batch = {};
    std::size_t pos = 0;
  };

  Enumeration()
      : streams_{Stream{StreamKind::by_size}, Stream{StreamKind::conforming_cost},
                 Stream{StreamKind::conforming_long}} {}

  void extend() {
    if (items_.size() >= capacity_)
      throw CapacityError("sequence enumeration would exceed " + std::to_string(capacity_) + " entries");
    Stream& s = streams_[items_.size() % 3];
    while (true) {
      SetSeq t = next(s);
      if (index_.contains(t)) continue;
      append(std::move(t));
      return;
    }
  }

  void append(SetSeq t) {
    std::set<std::uint64_t> touched;
    for (const auto& e : t) touched.insert(ScheepersSpace::block_of(e.front()));
    std::uint64_t v = mex_;
    while ((v < used_.size() && used_[v]) || touched.contains(v)) ++v;
    if (used_.size() <= v) used_.resize(v + 1, false);
    used_[v] = true;
    while (mex_ < used_.size() && used_[mex_]) ++mex_;
    auto [it, fresh] = index_.emplace(std::move(t), items_.size());
    items_.push_back(&it->first);
    f_.push_back(v);
  }

  SetSeq next(Stream& s) {
    while (s.pos == s.batch.size()) {
      ++s.cost;
      s.batch.clear();
      s.pos = 0;
      SetSeq prefix;
      if (s.kind == StreamKind::by_size) {
        std::set<std::uint64_t> used;
        gen_any(s.cost, prefix, used, s.batch);
      } else {
        gen_conforming(s.kind, s.cost, prefix, 0, s.batch);
      }
      std::sort(s.batch.begin(), s.batch.end());
    }
    return s.batch[s.pos++];
  }

  void gen_any(std::uint64_t remaining, SetSeq& prefix, std::set<std::uint64_t>& used, std::vector<SetSeq>& out) {
    for (std::uint64_t w = 1; w <= remaining; ++w) {
      for (const auto& set : distinct_parts(w)) {
        std::uint64_t b = ScheepersSpace::block_of(set.front());
        if (used.contains(b)) continue;
        if (!std::all_of(set.begin(), set.end(), [&](auto x) { return ScheepersSpace::block_of(x) == b; })) continue;
        prefix.push_back(set);
        if (w == remaining) {
          out.push_back(prefix);
        } else {
          used.insert(b);
          gen_any(remaining - w, prefix, used, out);
          used.erase(b);
        }
        prefix.pop_back();
      }
    }
  }

  static std::uint64_t entry_cost(StreamKind kind, std::uint64_t w) {
    return kind == StreamKind::conforming_cost ? w : kLongPlayWeight * (w - 1) + 1;
  }

  void gen_conforming(StreamKind kind, std::uint64_t remaining, SetSeq& prefix, std::uint64_t block,
                      std::vector<SetSeq>& out) {
    for (std::uint64_t w = 1; entry_cost(kind, w) <= remaining; ++w) {
      std::uint64_t c = entry_cost(kind, w);
      for (const auto& positions : distinct_parts(w)) {
        std::vector<std::uint64_t> entry;
        for (auto m : positions) entry.push_back(pair64(block, m));
        prefix.push_back(std::move(entry));
        if (c == remaining) {
          out.push_back(prefix);
        } else {
          auto it = index_.find(prefix);
          if (it == index_.end()) throw std::logic_error("conforming prefix missing from the enumeration");
          gen_conforming(kind, remaining - c, prefix, f_[it->second], out);
        }
        prefix.pop_back();
      }
    }
  }

  std::mutex mu_;
  std::size_t capacity_ = std::size_t{1} << 21;
  std::map<SetSeq, std::uint64_t> index_;
  std::vector<const SetSeq*> items_;
  std::vector<std::uint64_t> f_;
  std::vector<bool> used_;
  std::uint64_t mex_ = 0;
  Stream streams_[3];
};

}  // namespace

SetSeq seq_enum(std::uint64_t n) { return Enumeration::instance().at(n); }
std::uint64_t enum_index(const SetSeq& t) { return Enumeration::instance().index_of(t); }
std::uint64_t strategy_f(const SetSeq& t) { return Enumeration::instance().f_of(t); }
std::uint64_t strategy_f_at(std::uint64_t n) { return Enumeration::instance().f_at(n); }
void set_enumeration_capacity(std::size_t entries) { Enumeration::instance().set_capacity(entries); }
std::size_t enumeration_size() { return Enumeration::instance().size(); }

// ---------------------------------------------------------------------------

bool ScheepersSpace::accepts(const Atom& atom) const {
  return std::holds_alternative<FullAtom>(atom) || std::holds_alternative<StripAtom>(atom);
}

bool ScheepersSpace::atom_contains(const Atom& atom, const Point& q) const {
  if (!is_point(q)) return false;
  if (std::holds_alternative<FullAtom>(atom)) return true;
  return block_of(q.value()) == std::get<StripAtom>(atom).j;
}

std::unique_ptr<Cursor> ScheepersSpace::atom_cursor(const Atom& atom) const {
  if (std::holds_alternative<FullAtom>(atom))
    return index_cursor([](std::uint64_t z) { return Point::natural(z); });
  return index_cursor([j = std::get<StripAtom>(atom).j](std::uint64_t m) { return point(j, m); });
}

Point ScheepersSpace::point_from_json(const json& j) const {
  if (!j.is_number_unsigned()) throw DescriptorError("scheepers point must be a natural: " + j.dump());
  return Point::natural(j.get<std::uint64_t>());
}

json ScheepersSpace::atom_to_json(const Atom& atom) const {
  if (std::holds_alternative<FullAtom>(atom)) return {{"kind", "full"}};
  if (const auto* s = std::get_if<StripAtom>(&atom)) return {{"kind", "block"}, {"j", s->j}};
  throw DescriptorError("atom not in the scheepers language");
}

Atom ScheepersSpace::atom_from_json(const json& j) const {
  try {
    auto kind = j.at("kind").get<std::string>();
    if (kind == "full") return FullAtom{};
    if (kind == "block") return StripAtom{j.at("j").get<std::uint64_t>()};
    throw DescriptorError("unknown scheepers atom kind '" + kind + "'");
  } catch (const json::exception& e) {
    throw DescriptorError(std::string("malformed scheepers atom: ") + e.what());
  }
}

std::string ScheepersSpace::format_atom(const Atom& atom) const {
  if (std::holds_alternative<FullAtom>(atom)) return "whole space";
  return "Y" + std::to_string(std::get<StripAtom>(atom).j);
}

// ---------------------------------------------------------------------------

FPlay FPlay::from_picks(const SetSeq& picks, bool with_next) {
  FPlay p;
  p.blocks.push_back(0);
  p.picks = picks;
  SetSeq prefix;
  for (std::size_t j = 0; j < picks.size(); ++j) {
    prefix.push_back(picks[j]);
    if (j + 1 < picks.size() || with_next) p.blocks.push_back(strategy_f(prefix));
  }
  return p;
}

PointSet FPlay::s_value() const {
  PointSet out;
  for (const auto& n : picks)
    for (auto x : n) out.insert(Point::natural(x));
  return out;
}

json FPlay::to_json() const { return {{"blocks", blocks}, {"picks", picks}}; }

FPlay FPlay::from_json(const json& j) {
  try {
    FPlay p{j.at("blocks").get<std::vector<std::uint64_t>>(), j.at("picks").get<SetSeq>()};
    for (auto& n : p.picks) std::sort(n.begin(), n.end());
    return p;
  } catch (const json::exception& e) {
    throw NotAnFPlay(std::string("malformed F-play: ") + e.what());
  }
}

void check_fplay(const FPlay& p) {
  if (p.blocks.size() != p.picks.size() && p.blocks.size() != p.picks.size() + 1)
    throw NotAnFPlay("an F-play has one block per pick, plus at most one");
  if (p.blocks.empty()) return;
  if (p.blocks[0] != 0) throw NotAnFPlay("an F-play opens in Y_0");
  SetSeq prefix;
  for (std::size_t j = 0; j < p.picks.size(); ++j) {
    const auto& n = p.picks[j];
    if (n.empty()) throw NotAnFPlay("pick " + std::to_string(j + 1) + " is empty");
    for (auto x : n)
      if (ScheepersSpace::block_of(x) != p.blocks[j])
        throw NotAnFPlay("pick " + std::to_string(j + 1) + " leaves Y_" + std::to_string(p.blocks[j]));
    prefix.push_back(n);
    if (j + 1 < p.blocks.size() && strategy_f(prefix) != p.blocks[j + 1])
      throw NotAnFPlay("block " + std::to_string(j + 1) + " is not F of the picks before it");
  }
}

IntersectionReport play_intersection(const FPlay& p1, const FPlay& p2) {
  check_fplay(p1);
  check_fplay(p2);
  IntersectionReport r;
  auto s1 = p1.s_value();
  auto s2 = p2.s_value();
  std::set_intersection(s1.begin(), s1.end(), s2.begin(), s2.end(), std::inserter(r.brute, r.brute.end()));

  std::size_t common = std::min(p1.picks.size(), p2.picks.size());
  std::size_t k = 0;
  while (k < common && p1.picks[k] == p2.picks[k]) ++k;
  for (std::size_t j = 0; j < k; ++j)
    for (auto x : p1.picks[j]) r.prefix_union.insert(Point::natural(x));
  if (k < common) {
    r.diverge_at = k + 1;
    for (auto x : p1.picks[k])
      if (std::binary_search(p2.picks[k].begin(), p2.picks[k].end(), x)) r.divergent.insert(Point::natural(x));
  }
  PointSet formula = r.prefix_union;
  for (const auto& q : r.divergent) formula.insert(q);
  r.holds = formula == r.brute;
  r.literal_holds = r.prefix_union == r.brute;
  return r;
}

OneMove FinStrategy::respond(const PlayView& view) {
  const auto* x = dynamic_cast<const ScheepersSpace*>(&view.space);
  if (!x) throw StrategyInapplicable("fin strategy runs on the scheepers space only");
  SetSeq picks;
  for (const auto& inning : view.history) {
    if (inning.two.empty()) continue;
    std::vector<std::uint64_t> n;
    for (const auto& q : inning.two) n.push_back(q.value());
    picks.push_back(std::move(n));
  }
  FPlay play;
  try {
    play = FPlay::from_picks(picks, true);
  } catch (const DescriptorError& e) {
    throw StrategyInapplicable(std::string("Two's picks are not an F-play: ") + e.what());
  } catch (const CapacityError& e) {
    throw StrategyInapplicable(e.what());
  }
  return {x->block(play.blocks.back()), {{"fplay", play.to_json()}}};
}

std::unique_ptr<OneStrategy> one_fin_strategy() { return std::make_unique<FinStrategy>(); }

}  // namespace tgame
