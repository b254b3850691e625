#pragma once

#include <iosfwd>
#include <memory>
#include <string>

#include "tgame/game.hpp"

namespace tgame::cli {

/// Parses "(a,b,..)" as a sequence or a natural as a point code of the space.
/// Throws DescriptorError on text that names no point of the space.
Point parse_point(const Space& space, const std::string& text);

/// Human players reading commands from `in` and prompting on `out`. Both
/// re-prompt until the entry is legal; "quit" ends the play.
std::unique_ptr<OneStrategy> human_one(std::istream& in, std::ostream& out);
std::unique_ptr<TwoStrategy> human_two(std::istream& in, std::ostream& out, bool strict_g1);

}  // namespace tgame::cli
