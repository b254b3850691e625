#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tgame/game.hpp"
#include "tgame/partition_space.hpp"

namespace tgame {

class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A finite surrogate game. One moves from `pool`, Two answers with at most
/// budget[n] points of One's move; Two wins iff its picks meet every target
/// after `depth` innings.
struct FiniteGameSpec {
  std::vector<std::uint64_t> ground;
  std::vector<std::vector<std::uint64_t>> pool;
  std::vector<std::vector<std::uint64_t>> targets;
  std::uint64_t depth = 1;
  std::vector<std::uint64_t> budget;

  /// Throws std::invalid_argument on a malformed spec.
  void validate() const;
  json to_json() const;
  static FiniteGameSpec from_json(const json& j);
};

/// Default node cap, overridden by TGAME_NODE_CAP.
std::uint64_t default_node_cap();

struct Solution {
  Side winner = Side::one;
  /// Full optimal strategy for the winner.
  ///   One: {"inning", "picks", "move": [..], "replies": [{"pick", "next"}]}
  ///   Two: {"inning", "picks", "responses": [{"move", "pick", "next"}]}
  /// Leaves carry only "inning" and "picks".
  json strategy;
  std::uint64_t nodes = 0;
};

/// Exact alternating minimax, memoized by (inning, picks so far).
/// Throws CapacityError past node_cap positions.
Solution solve(const FiniteGameSpec& spec, std::uint64_t node_cap = default_node_cap());

/// Plays the strategy tree against every opponent behaviour. Throws
/// ShapeError if the tree is malformed or misses a reachable position.
bool verify(const FiniteGameSpec& spec, const json& strategy, Side side);

/// Two strategy tree from a policy (inning, picks so far, One's move) -> pick.
json two_strategy_from_policy(
    const FiniteGameSpec& spec,
    const std::function<std::vector<std::uint64_t>(std::uint64_t, const std::vector<std::uint64_t>&,
                                                   const std::vector<std::uint64_t>&)>& policy);

/// Finite surrogate of the partition game: the first `width` points of each
/// block N_s with s in width^{<block_depth}; One plays truncated blocks; the
/// targets are the ground minus each maximal truncated fat-branch cover.
FiniteGameSpec truncate_partition_space(const PartitionConfig& cfg, std::uint64_t block_depth, std::uint64_t width,
                                        std::uint64_t depth, std::uint64_t bound);

std::string to_string(Side s);

}  // namespace tgame
