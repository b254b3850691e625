#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "tgame/game.hpp"

namespace tgame::cli {

/// Seeded opponents. Every one re-seeds on reset, so a play is a function
/// of the seed.
///   One: random, adversarial, block-flooder, replay-fuzzer, full
///   Two: random, least, greedy
std::unique_ptr<OneStrategy> make_baseline_one(const std::string& name, std::uint64_t seed);
std::unique_ptr<TwoStrategy> make_baseline_two(const std::string& name, std::uint64_t seed);
std::vector<std::string> baseline_one_names();
std::vector<std::string> baseline_two_names();

/// Largest pick a baseline Two makes in one inning.
inline constexpr std::uint64_t kMaxBaselinePick = 16;

}  // namespace tgame::cli
