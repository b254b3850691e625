#pragma once

#include <map>
#include <string>
#include <vector>

#include "tgame/game.hpp"

namespace tgame {

/// Binary sequences as strings of '0'/'1', ordered by length then value.
std::vector<std::string> binary_sequences(std::size_t max_length);

struct AdFamily {
  std::size_t depth = 0;
  std::map<std::string, PointSet> a;  // A_s for every s with |s| <= depth
  std::map<std::string, Descriptor> q;
  std::vector<std::string> warnings;

  /// B restricted to g: the union of A_{g|j} for j <= |g|.
  PointSet branch_union(const std::string& g) const;
  json to_json(const Space& space) const;
};

/// Walks 2^{<omega} in length-then-value order. Q_s is the ground set minus
/// every earlier A, and A_s is Two's reply to the chain history
/// (Q_{s|0}, A_{s|0}, ..., Q_s). `bound` is the game Two's strategy sees.
AdFamily build_ad_family(const Space& space, TwoStrategy& two, std::size_t depth,
                         const BoundSpec& bound = BoundSpec::fin());

/// Checks B_g n B_h = union_{j <= k0} A_{g|j} for all distinct g, h of the
/// given length, k0 the length of their common prefix.
Verdict check_prefix_law(const AdFamily& family, std::size_t length);

}  // namespace tgame
