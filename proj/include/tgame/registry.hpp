#pragma once

#include <memory>
#include <string>
#include <vector>

#include "tgame/game.hpp"

namespace tgame {

/// Resolves "tree", "fan", "partition:k=K" or "scheepers".
/// Throws std::invalid_argument on an unknown selector.
std::unique_ptr<Space> make_space(const std::string& selector);
/// Selector that make_space maps back to this space.
std::string space_selector(const Space& space);

/// Paper strategies by name; nullptr if unknown.
///   One: branch (tree), fatbranch (partition), fin (scheepers)
///   Two: pair (tree), markov (fan), eub (partition)
std::unique_ptr<OneStrategy> make_core_one(const std::string& name);
std::unique_ptr<TwoStrategy> make_core_two(const std::string& name);
std::vector<std::string> core_one_names();
std::vector<std::string> core_two_names();

}  // namespace tgame
