#pragma once

#include <vector>

#include "tgame/game.hpp"

namespace tgame::test {

/// One plays a fixed list of moves, repeating the last.
class ScriptedOne final : public OneStrategy {
 public:
  explicit ScriptedOne(std::vector<Descriptor> moves) : moves_(std::move(moves)) {}
  std::string name() const override { return "scripted"; }
  OneMove respond(const PlayView& view) override {
    return {moves_[std::min<std::size_t>(view.inning, moves_.size() - 1)]};
  }

 private:
  std::vector<Descriptor> moves_;
};

/// Two plays a fixed list of picks, then the empty set.
class ScriptedTwo final : public TwoStrategy {
 public:
  explicit ScriptedTwo(std::vector<PointSet> picks) : picks_(std::move(picks)) {}
  std::string name() const override { return "scripted"; }
  TwoMove respond(const PlayView& view, const Descriptor&) override {
    return {view.inning < picks_.size() ? picks_[view.inning] : PointSet{}};
  }

 private:
  std::vector<PointSet> picks_;
};

}  // namespace tgame::test
