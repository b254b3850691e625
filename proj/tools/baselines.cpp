#include "baselines.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "tgame/fan_space.hpp"
#include "tgame/partition_space.hpp"
#include "tgame/scheepers_space.hpp"
#include "tgame/tree_space.hpp"

namespace tgame::cli {

namespace {

using Rng = std::mt19937_64;

std::uint64_t uniform(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

Seq random_seq(Rng& rng, std::size_t max_len, std::uint64_t max_entry) {
  Seq s(uniform(rng, 0, max_len));
  for (auto& x : s) x = uniform(rng, 0, max_entry);
  return s;
}

PointSet all_picks(const PlayView& view) {
  PointSet out;
  for (const auto& in : view.history) out.insert(in.two.begin(), in.two.end());
  return out;
}

/// A random clustering atom of the space.
Atom random_atom(const Space& space, Rng& rng) {
  if (coin(rng, 0.15)) return FullAtom{};
  if (dynamic_cast<const TreeSpace*>(&space)) return ChildrenAtom{random_seq(rng, 4, 3)};
  if (dynamic_cast<const FanSpace*>(&space)) {
    if (coin(rng)) return ColumnAtom{uniform(rng, 0, 6)};
    return ColumnTailAtom{uniform(rng, 0, 6), uniform(rng, 0, 6)};
  }
  if (const auto* x = dynamic_cast<const PartitionSpace*>(&space)) {
    Seq s = random_seq(rng, 2, 3);
    if (coin(rng, 0.7)) return BlockAtom{s};
    std::vector<std::uint64_t> pins;
    if (coin(rng)) pins.push_back(uniform(rng, 0, x->k()));
    return ConeAtom{s, pins, {}};
  }
  if (dynamic_cast<const ScheepersSpace*>(&space)) return StripAtom{uniform(rng, 0, 6)};
  throw std::invalid_argument("no baseline atoms for space " + space.name());
}

/// Removes a random handful of the descriptor's least points.
Descriptor nibble(const Space& space, const Descriptor& d, Rng& rng) {
  PointSet drop;
  for (const auto& q : space.enumerate(d, 8))
    if (coin(rng, 0.3)) drop.insert(q);
  return space.remove_finite(d, drop);
}

class BaseOne : public OneStrategy {
 public:
  BaseOne(std::string name, std::uint64_t seed) : name_(std::move(name)), seed_(seed), rng_(seed) {}
  std::string name() const override { return name_; }
  void reset() override { rng_.seed(seed_); }

 protected:
  Descriptor random_move(const Space& space) {
    std::vector<Atom> atoms{random_atom(space, rng_)};
    if (coin(rng_, 0.3)) atoms.push_back(random_atom(space, rng_));
    return nibble(space, space.make(std::move(atoms)), rng_);
  }

  std::string name_;
  std::uint64_t seed_;
  Rng rng_;
};

class RandomOne final : public BaseOne {
 public:
  using BaseOne::BaseOne;
  OneMove respond(const PlayView& view) override { return {random_move(view.space), {}}; }
};

class FullOne final : public BaseOne {
 public:
  using BaseOne::BaseOne;
  OneMove respond(const PlayView& view) override { return {view.space.full(), {}}; }
};

class FlooderOne final : public BaseOne {
 public:
  using BaseOne::BaseOne;
  OneMove respond(const PlayView& view) override {
    const Space& space = view.space;
    std::vector<Atom> atoms;
    if (dynamic_cast<const TreeSpace*>(&space) || dynamic_cast<const PartitionSpace*>(&space)) {
      std::vector<Seq> nodes{Seq{}};
      for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (nodes[i].size() >= 2) continue;
        for (std::uint64_t c = 0; c < 3; ++c) {
          Seq s = nodes[i];
          s.push_back(c);
          nodes.push_back(std::move(s));
        }
      }
      for (const auto& s : nodes) {
        if (dynamic_cast<const TreeSpace*>(&space)) atoms.push_back(ChildrenAtom{s});
        else atoms.push_back(BlockAtom{s});
      }
    } else if (dynamic_cast<const FanSpace*>(&space)) {
      for (std::uint64_t n = 0; n < 10; ++n) atoms.push_back(ColumnAtom{n});
    } else {
      for (std::uint64_t j = 0; j < 10; ++j) atoms.push_back(StripAtom{j});
    }
    return {space.remove_finite(space.make(std::move(atoms)), all_picks(view)), {}};
  }
};

class ReplayFuzzerOne final : public BaseOne {
 public:
  using BaseOne::BaseOne;
  OneMove respond(const PlayView& view) override {
    const Space& space = view.space;
    if (view.history.empty()) return {random_move(space), {}};
    Descriptor d = view.history[uniform(rng_, 0, view.history.size() - 1)].one;
    switch (uniform(rng_, 0, 3)) {
      case 0: d = space.remove_finite(d, all_picks(view)); break;
      case 1: d = nibble(space, d, rng_); break;
      case 2:
        for (const auto& q : space.enumerate(space.full(), 40))
          if (coin(rng_, 0.1) && !d.excluded.contains(q)) d.extra.insert(q);
        break;
      default: d.atoms.push_back(random_atom(space, rng_)); break;
    }
    space.validate(d);
    return {d, {{"replayed", true}}};
  }
};

class AdversarialOne final : public BaseOne {
 public:
  using BaseOne::BaseOne;
  OneMove respond(const PlayView& view) override {
    const Space& space = view.space;
    if (view.history.empty() || coin(rng_, 0.2)) return {random_move(space), {}};
    const json& notes = view.history.back().annotations;
    if (const auto* x = dynamic_cast<const PartitionSpace*>(&space); x && notes.contains("E")) {
      PointSet e = space.points_from_json(notes.at("E"));
      std::vector<Point> ev(e.begin(), e.end());
      std::shuffle(ev.begin(), ev.end(), rng_);
      PointSet dset;
      std::uint64_t want = uniform(rng_, 1, x->k());
      for (const auto& q : ev) {
        PointSet trial = dset;
        trial.insert(q);
        if (covered_by_single_fat_branch(*x, trial)) dset = std::move(trial);
        if (dset.size() == want) break;
      }
      Descriptor z = z_set(*x, dset);
      if (coin(rng_, 0.3)) z = subtract(*x, z, space.make({}, down_set(*x, e)));
      if (space.clusters_at_p(z)) return {z, {{"aimed_at", space.to_json(dset)}}};
    }
    if (dynamic_cast<const TreeSpace*>(&space) && notes.contains("witness")) {
      PointSet w = space.points_from_json(notes.at("witness"));
      std::vector<Point> wv(w.begin(), w.end());
      const Point& target = wv[uniform(rng_, 0, wv.size() - 1)];
      Point node = coin(rng_, 0.7) ? target : target.parent();
      return {space.make({ChildrenAtom{node.seq()}}), {{"aimed_at", node.seq()}}};
    }
    if (dynamic_cast<const FanSpace*>(&space)) {
      std::vector<Atom> atoms;
      std::uint64_t cols = uniform(rng_, 1, 3);
      for (std::uint64_t i = 0; i < cols; ++i) atoms.push_back(ColumnTailAtom{uniform(rng_, 0, 20), uniform(rng_, 0, 50)});
      return {space.remove_finite(space.make(std::move(atoms)), all_picks(view)), {}};
    }
    return {space.remove_finite(random_move(space), all_picks(view)), {}};
  }
};

class BaseTwo : public TwoStrategy {
 public:
  BaseTwo(std::string name, std::uint64_t seed) : name_(std::move(name)), seed_(seed), rng_(seed) {}
  std::string name() const override { return name_; }
  void reset() override { rng_.seed(seed_); }

 protected:
  static std::uint64_t cap(const PlayView& view, std::uint64_t fin_cap) {
    auto b = view.bound.budget(view.inning);
    return std::min<std::uint64_t>(b ? *b : fin_cap, kMaxBaselinePick);
  }

  std::string name_;
  std::uint64_t seed_;
  Rng rng_;
};

class LeastTwo final : public BaseTwo {
 public:
  using BaseTwo::BaseTwo;
  TwoMove respond(const PlayView& view, const Descriptor& a) override {
    auto pts = view.space.enumerate(a, 1);
    return {PointSet(pts.begin(), pts.end()), {}};
  }
};

class GreedyTwo final : public BaseTwo {
 public:
  using BaseTwo::BaseTwo;
  TwoMove respond(const PlayView& view, const Descriptor& a) override {
    auto pts = view.space.enumerate(a, cap(view, 2));
    return {PointSet(pts.begin(), pts.end()), {}};
  }
};

class RandomTwo final : public BaseTwo {
 public:
  using BaseTwo::BaseTwo;
  TwoMove respond(const PlayView& view, const Descriptor& a) override {
    std::uint64_t size = uniform(rng_, 0, cap(view, 2));
    auto pool = view.space.enumerate(a, 3 * size + 3);
    std::shuffle(pool.begin(), pool.end(), rng_);
    if (pool.size() > size) pool.resize(size);
    return {PointSet(pool.begin(), pool.end()), {}};
  }
};

}  // namespace

std::unique_ptr<OneStrategy> make_baseline_one(const std::string& name, std::uint64_t seed) {
  if (name == "random") return std::make_unique<RandomOne>(name, seed);
  if (name == "adversarial") return std::make_unique<AdversarialOne>(name, seed);
  if (name == "block-flooder") return std::make_unique<FlooderOne>(name, seed);
  if (name == "replay-fuzzer") return std::make_unique<ReplayFuzzerOne>(name, seed);
  if (name == "full") return std::make_unique<FullOne>(name, seed);
  return nullptr;
}

std::unique_ptr<TwoStrategy> make_baseline_two(const std::string& name, std::uint64_t seed) {
  if (name == "random") return std::make_unique<RandomTwo>(name, seed);
  if (name == "least") return std::make_unique<LeastTwo>(name, seed);
  if (name == "greedy") return std::make_unique<GreedyTwo>(name, seed);
  return nullptr;
}

std::vector<std::string> baseline_one_names() { return {"random", "adversarial", "block-flooder", "replay-fuzzer", "full"}; }
std::vector<std::string> baseline_two_names() { return {"random", "least", "greedy"}; }

}  // namespace tgame::cli
