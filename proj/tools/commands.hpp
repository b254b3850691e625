#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tgame::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;  // illegal move, failed invariant or suite
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCapacity = 3;

/// Entry point of the tgame command line; args exclude the program name.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace tgame::cli
