#pragma once

#include <string>
#include <vector>

#include "tgame/game.hpp"

namespace tgame {

/// One plays children(node_n), node_{n+1} the least pick of inning n (or
/// node_n after an empty pick), and every pick lies below that branch.
Invariant branch_confinement();
/// The annotated witness W_n: |W_n| >= n+1, pairwise incomparable, picked.
Invariant pair_witness();
/// Inning j's pick lies in one column with exactly budget(j) points, and
/// the largest column count so far is >= max_{i<=j} budget(i).
Invariant markov_progress();
/// The annotated E_n: |E_n| >= n+k+1, picked, no fat branch holds > k.
Invariant eub_invariant();
/// Picks of innings < n lie in covered(g_n); the last pick fits one K-set.
Invariant fatbranch_confinement();
/// The annotated F-play follows F, never repeats a block, and lists Two's
/// nonempty picks.
Invariant fplay_freshness();

/// Invariants that apply to a play between the named strategies.
std::vector<Invariant> invariants_for(const std::string& space, const std::string& one, const std::string& two);

}  // namespace tgame
