#include "tgame/minimax.hpp"

#include <algorithm>
#include <bitset>
#include <cstdlib>
#include <map>
#include <set>
#include <unordered_map>

namespace tgame {

std::string to_string(Side s) { return s == Side::one ? "One" : "Two"; }

void FiniteGameSpec::validate() const {
  if (ground.empty()) throw std::invalid_argument("ground must be nonempty");
  if (ground.size() > 256) throw std::invalid_argument("ground has more than 256 points");
  std::set<std::uint64_t> g(ground.begin(), ground.end());
  if (g.size() != ground.size()) throw std::invalid_argument("ground has repeated points");
  if (pool.empty()) throw std::invalid_argument("move pool must be nonempty");
  auto check_subset = [&](const std::vector<std::uint64_t>& s, const char* what) {
    for (auto x : s)
      if (!g.contains(x)) throw std::invalid_argument(std::string(what) + " mentions " + std::to_string(x) + " outside the ground");
  };
  for (const auto& m : pool) {
    if (m.empty()) throw std::invalid_argument("pool moves must be nonempty");
    check_subset(m, "pool");
  }
  for (const auto& t : targets) check_subset(t, "target");
  if (depth < 1) throw std::invalid_argument("depth must be >= 1");
  if (budget.size() < depth) throw std::invalid_argument("one budget per inning is required");
}

json FiniteGameSpec::to_json() const {
  return {{"ground", ground}, {"pool", pool}, {"targets", targets}, {"depth", depth}, {"budget", budget}};
}

FiniteGameSpec FiniteGameSpec::from_json(const json& j) {
  FiniteGameSpec s;
  try {
    s.ground = j.at("ground").get<std::vector<std::uint64_t>>();
    s.pool = j.at("pool").get<std::vector<std::vector<std::uint64_t>>>();
    s.targets = j.at("targets").get<std::vector<std::vector<std::uint64_t>>>();
    s.depth = j.at("depth").get<std::uint64_t>();
    s.budget = j.at("budget").get<std::vector<std::uint64_t>>();
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed game spec: ") + e.what());
  }
  s.validate();
  return s;
}

std::uint64_t default_node_cap() {
  if (const char* env = std::getenv("TGAME_NODE_CAP")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
    }
  }
  return 10'000'000;
}

namespace {

using Bits = std::bitset<256>;

class Game {
 public:
  explicit Game(const FiniteGameSpec& spec) : spec_(spec) {
    spec.validate();
    for (std::size_t i = 0; i < spec.ground.size(); ++i) pos_[spec.ground[i]] = i;
    for (const auto& m : spec.pool) pool_.push_back(bits(m));
    for (const auto& t : spec.targets) targets_.push_back(bits(t));
  }

  Bits bits(const std::vector<std::uint64_t>& s) const {
    Bits b;
    for (auto x : s) {
      auto it = pos_.find(x);
      if (it == pos_.end()) throw ShapeError("point " + std::to_string(x) + " is not in the ground");
      b.set(it->second);
    }
    return b;
  }

  std::vector<std::uint64_t> points(const Bits& b) const {
    std::vector<std::uint64_t> out;
    for (std::size_t i = 0; i < spec_.ground.size(); ++i)
      if (b.test(i)) out.push_back(spec_.ground[i]);
    std::sort(out.begin(), out.end());
    return out;
  }

  bool two_wins_at_end(const Bits& picks) const {
    return std::all_of(targets_.begin(), targets_.end(), [&](const Bits& t) { return (t & picks).any(); });
  }

  /// Every subset of `move` with at most `budget` points.
  std::vector<Bits> replies(const Bits& move, std::uint64_t budget) const {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < spec_.ground.size(); ++i)
      if (move.test(i)) idx.push_back(i);
    std::vector<Bits> out{Bits{}};
    std::size_t cap = std::min<std::size_t>(budget, idx.size());
    for (std::size_t r = 1; r <= cap; ++r) {
      std::vector<std::size_t> c(r);
      for (std::size_t i = 0; i < r; ++i) c[i] = i;
      while (true) {
        Bits b;
        for (auto i : c) b.set(idx[i]);
        out.push_back(b);
        std::size_t i = r;
        while (i > 0 && c[i - 1] == idx.size() - r + i - 1) --i;
        if (i == 0) break;
        ++c[i - 1];
        for (std::size_t j = i; j < r; ++j) c[j] = c[j - 1] + 1;
      }
    }
    return out;
  }

  const FiniteGameSpec& spec() const { return spec_; }
  const std::vector<Bits>& pool() const { return pool_; }

 private:
  const FiniteGameSpec& spec_;
  std::map<std::uint64_t, std::size_t> pos_;
  std::vector<Bits> pool_;
  std::vector<Bits> targets_;
};

class Solver {
 public:
  Solver(const Game& g, std::uint64_t cap) : g_(g), cap_(cap), memo_(g.spec().depth + 1) {}

  /// true iff Two wins from (inning, picks).
  bool two_wins(std::uint64_t n, const Bits& picks) {
    if (n == g_.spec().depth) return g_.two_wins_at_end(picks);
    auto& table = memo_[n];
    if (auto it = table.find(picks); it != table.end()) return it->second;
    if (++nodes_ > cap_)
      throw CapacityError("minimax search exceeded " + std::to_string(cap_) + " positions");
    bool two = true;
    for (const auto& move : g_.pool()) {
      bool answered = false;
      for (const auto& r : g_.replies(move, g_.spec().budget[n])) {
        if (two_wins(n + 1, picks | r)) {
          answered = true;
          break;
        }
      }
      if (!answered) {
        two = false;
        break;
      }
    }
    table.emplace(picks, two);
    return two;
  }

  json one_tree(std::uint64_t n, const Bits& picks) {
    json node = {{"inning", n}, {"picks", g_.points(picks)}};
    if (n == g_.spec().depth) return node;
    for (const auto& move : g_.pool()) {
      auto rs = g_.replies(move, g_.spec().budget[n]);
      if (std::any_of(rs.begin(), rs.end(), [&](const Bits& r) { return two_wins(n + 1, picks | r); })) continue;
      node["move"] = g_.points(move);
      node["replies"] = json::array();
      for (const auto& r : rs) node["replies"].push_back({{"pick", g_.points(r)}, {"next", one_tree(n + 1, picks | r)}});
      return node;
    }
    throw std::logic_error("One has no winning move at a One-won position");
  }

  json two_tree(std::uint64_t n, const Bits& picks) {
    json node = {{"inning", n}, {"picks", g_.points(picks)}};
    if (n == g_.spec().depth) return node;
    node["responses"] = json::array();
    for (const auto& move : g_.pool()) {
      for (const auto& r : g_.replies(move, g_.spec().budget[n])) {
        if (!two_wins(n + 1, picks | r)) continue;
        node["responses"].push_back({{"move", g_.points(move)}, {"pick", g_.points(r)}, {"next", two_tree(n + 1, picks | r)}});
        break;
      }
    }
    return node;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  const Game& g_;
  std::uint64_t cap_;
  std::uint64_t nodes_ = 0;
  std::vector<std::unordered_map<Bits, bool>> memo_;
};

std::vector<std::uint64_t> sorted_points(const json& j, const char* what) {
  try {
    auto v = j.get<std::vector<std::uint64_t>>();
    std::sort(v.begin(), v.end());
    return v;
  } catch (const json::exception&) {
    throw ShapeError(std::string(what) + " must be a list of points");
  }
}

const json& field(const json& node, const char* key) {
  if (!node.is_object() || !node.contains(key)) throw ShapeError(std::string("strategy node lacks '") + key + "'");
  return node.at(key);
}

bool verify_one(const Game& g, const json& node, std::uint64_t n, const Bits& picks) {
  if (n == g.spec().depth) return !g.two_wins_at_end(picks);
  Bits move = g.bits(sorted_points(field(node, "move"), "move"));
  if (std::find(g.pool().begin(), g.pool().end(), move) == g.pool().end()) throw ShapeError("One's move is not in the pool");
  std::map<std::vector<std::uint64_t>, const json*> by_pick;
  for (const auto& r : field(node, "replies")) by_pick[sorted_points(field(r, "pick"), "pick")] = &field(r, "next");
  for (const auto& r : g.replies(move, g.spec().budget[n])) {
    auto it = by_pick.find(g.points(r));
    if (it == by_pick.end()) throw ShapeError("One's tree misses a reply at inning " + std::to_string(n));
    if (!verify_one(g, *it->second, n + 1, picks | r)) return false;
  }
  return true;
}

bool verify_two(const Game& g, const json& node, std::uint64_t n, const Bits& picks) {
  if (n == g.spec().depth) return g.two_wins_at_end(picks);
  std::map<std::vector<std::uint64_t>, const json*> by_move;
  for (const auto& r : field(node, "responses")) by_move[sorted_points(field(r, "move"), "move")] = &r;
  for (const auto& move : g.pool()) {
    auto it = by_move.find(g.points(move));
    if (it == by_move.end()) throw ShapeError("Two's tree misses a One move at inning " + std::to_string(n));
    Bits pick = g.bits(sorted_points(field(*it->second, "pick"), "pick"));
    if ((pick & ~move).any() || pick.count() > g.spec().budget[n]) return false;
    if (!verify_two(g, field(*it->second, "next"), n + 1, picks | pick)) return false;
  }
  return true;
}

}  // namespace

Solution solve(const FiniteGameSpec& spec, std::uint64_t node_cap) {
  Game g(spec);
  Solver s(g, node_cap);
  Solution out;
  bool two = s.two_wins(0, Bits{});
  out.winner = two ? Side::two : Side::one;
  out.strategy = two ? s.two_tree(0, Bits{}) : s.one_tree(0, Bits{});
  out.nodes = s.nodes();
  return out;
}

bool verify(const FiniteGameSpec& spec, const json& strategy, Side side) {
  Game g(spec);
  return side == Side::one ? verify_one(g, strategy, 0, Bits{}) : verify_two(g, strategy, 0, Bits{});
}

json two_strategy_from_policy(
    const FiniteGameSpec& spec,
    const std::function<std::vector<std::uint64_t>(std::uint64_t, const std::vector<std::uint64_t>&,
                                                   const std::vector<std::uint64_t>&)>& policy) {
  Game g(spec);
  std::function<json(std::uint64_t, const Bits&)> build = [&](std::uint64_t n, const Bits& picks) {
    json node = {{"inning", n}, {"picks", g.points(picks)}};
    if (n == spec.depth) return node;
    node["responses"] = json::array();
    for (const auto& move : g.pool()) {
      auto pick = policy(n, g.points(picks), g.points(move));
      Bits pb = g.bits(pick);
      node["responses"].push_back({{"move", g.points(move)}, {"pick", g.points(pb)}, {"next", build(n + 1, picks | pb)}});
    }
    return node;
  };
  return build(0, Bits{});
}

FiniteGameSpec truncate_partition_space(const PartitionConfig& cfg, std::uint64_t block_depth, std::uint64_t width,
                                        std::uint64_t depth, std::uint64_t bound) {
  PartitionSpace x(cfg);
  if (block_depth < 1 || width < 1 || depth < 1) throw std::invalid_argument("truncation parameters must be >= 1");
  if (width < cfg.k) throw std::invalid_argument("width must be at least k");
  // blocks s in width^{<block_depth}
  std::vector<Seq> blocks{Seq{}};
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (blocks[i].size() + 1 >= block_depth) continue;
    for (std::uint64_t c = 0; c < width; ++c) {
      Seq s = blocks[i];
      s.push_back(c);
      blocks.push_back(std::move(s));
    }
    if (blocks.size() > 256) throw CapacityError("truncated partition space has more than 256 blocks");
  }
  auto name = [&](const Seq& s, std::uint64_t m) {
    auto n = PartitionSpace::number(Point(s).child(m));
    if (!n) throw CapacityError("truncated point name exceeds 64 bits");
    return *n;
  };
  FiniteGameSpec spec;
  for (const auto& s : blocks) {
    std::vector<std::uint64_t> move;
    for (std::uint64_t m = 0; m < width; ++m) move.push_back(name(s, m));
    spec.ground.insert(spec.ground.end(), move.begin(), move.end());
    std::sort(move.begin(), move.end());
    spec.pool.push_back(std::move(move));
  }
  if (spec.ground.size() > 256) throw CapacityError("truncated ground exceeds 256 points");
  std::sort(spec.ground.begin(), spec.ground.end());

  std::uint64_t ksets = binomial(width, cfg.k);
  std::set<std::vector<std::uint64_t>> covers;
  std::function<void(const Seq&, std::set<std::uint64_t>&)> walk = [&](const Seq& s, std::set<std::uint64_t>& cover) {
    for (std::uint64_t i = 0; i < ksets; ++i) {
      std::vector<std::uint64_t> added;
      for (auto m : x.kset_positions(i))
        if (cover.insert(name(s, m)).second) added.push_back(name(s, m));
      if (s.size() + 1 < block_depth && i < width) {
        Seq t = s;
        t.push_back(i);
        walk(t, cover);
      } else {
        covers.insert(std::vector<std::uint64_t>(cover.begin(), cover.end()));
        if (covers.size() > 100'000) throw CapacityError("too many truncated fat branches");
      }
      for (auto a : added) cover.erase(a);
    }
  };
  std::set<std::uint64_t> cover;
  walk(Seq{}, cover);
  for (const auto& c : covers) {
    std::vector<std::uint64_t> target;
    std::set_difference(spec.ground.begin(), spec.ground.end(), c.begin(), c.end(), std::back_inserter(target));
    spec.targets.push_back(std::move(target));
  }
  spec.depth = depth;
  spec.budget.assign(depth, bound);
  return spec;
}

}  // namespace tgame
