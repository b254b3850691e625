#include "tgame/invariants.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "tgame/fan_space.hpp"
#include "tgame/partition_space.hpp"
#include "tgame/scheepers_space.hpp"
#include "tgame/tree_space.hpp"

namespace tgame {

namespace {

std::string at(std::uint64_t n) { return "inning " + std::to_string(n) + ": "; }

}  // namespace

Invariant branch_confinement() {
  return {"branch-confinement", [](const Space& space, const PlayTranscript& t) {
            Seq node;
            for (const auto& in : t.innings) {
              Descriptor expected = space.make({ChildrenAtom{node}});
              if (!(in.one == expected)) return Verdict::fail(at(in.n) + "One left the branch");
              for (const auto& q : in.two)
                if (q.size() != node.size() + 1 || !is_prefix(node, q.seq()))
                  return Verdict::fail(at(in.n) + "pick " + space.format_point(q) + " is off the branch");
              if (!in.two.empty()) node = in.two.begin()->seq();
            }
            if (t.innings.empty()) return Verdict::vacuous("no innings");
            return Verdict::pass("confined=true, branch depth " + std::to_string(node.size()));
          }};
}

Invariant pair_witness() {
  return {"pair-witness", [](const Space& space, const PlayTranscript& t) {
            PointSet picked;
            for (const auto& in : t.innings) {
              picked.insert(in.two.begin(), in.two.end());
              if (!in.annotations.contains("witness")) return Verdict::fail(at(in.n) + "no witness annotated");
              PointSet w = space.points_from_json(in.annotations.at("witness"));
              if (w.size() < in.n + 1) return Verdict::fail(at(in.n) + "witness has " + std::to_string(w.size()) + " points");
              if (!pairwise_incomparable(w)) return Verdict::fail(at(in.n) + "witness is not an antichain");
              if (!std::includes(picked.begin(), picked.end(), w.begin(), w.end()))
                return Verdict::fail(at(in.n) + "witness contains an unpicked point");
            }
            if (t.innings.empty()) return Verdict::vacuous("no innings");
            return Verdict::pass("|W| reached " + std::to_string(t.innings.size() + 1));
          }};
}

Invariant markov_progress() {
  return {"markov-progress", [](const Space&, const PlayTranscript& t) {
            std::map<std::uint64_t, PointSet> columns;
            std::uint64_t best_budget = 0;
            for (const auto& in : t.innings) {
              auto budget = t.bound.budget(in.n);
              if (!budget) return Verdict::vacuous("bound has no per-inning budget");
              best_budget = std::max(best_budget, *budget);
              if (in.two.size() != *budget)
                return Verdict::fail(at(in.n) + "picked " + std::to_string(in.two.size()) + " points, budget " + std::to_string(*budget));
              std::set<std::uint64_t> cols;
              for (const auto& q : in.two) {
                auto c = FanSpace::coords(q).first;
                cols.insert(c);
                columns[c].insert(q);
              }
              if (cols.size() > 1) return Verdict::fail(at(in.n) + "pick spans several columns");
              std::uint64_t best = 0;
              for (const auto& [c, s] : columns) best = std::max<std::uint64_t>(best, s.size());
              if (best < best_budget) return Verdict::fail(at(in.n) + "largest column holds " + std::to_string(best));
            }
            if (t.innings.empty()) return Verdict::vacuous("no innings");
            return Verdict::pass("max budget " + std::to_string(best_budget));
          }};
}

Invariant eub_invariant() {
  return {"eub-invariant", [](const Space& space, const PlayTranscript& t) {
            const auto* x = dynamic_cast<const PartitionSpace*>(&space);
            if (!x) return Verdict::vacuous("not the partition space");
            PointSet picked;
            std::uint64_t worst = 0;
            for (const auto& in : t.innings) {
              picked.insert(in.two.begin(), in.two.end());
              if (!in.annotations.contains("E")) return Verdict::fail(at(in.n) + "no E annotated");
              PointSet e = space.points_from_json(in.annotations.at("E"));
              if (e.size() < in.n + x->k() + 1) return Verdict::fail(at(in.n) + "|E| = " + std::to_string(e.size()));
              if (!std::includes(picked.begin(), picked.end(), e.begin(), e.end()))
                return Verdict::fail(at(in.n) + "E contains an unpicked point");
              auto [load, g] = max_fat_branch_load(*x, e);
              worst = std::max(worst, load);
              if (load > x->k())
                return Verdict::fail(at(in.n) + "fat branch " + Point(g.g).to_string() + " holds " + std::to_string(load) + " points of E");
            }
            if (t.innings.empty()) return Verdict::vacuous("no innings");
            return Verdict::pass("max fat-branch load " + std::to_string(worst));
          }};
}

Invariant fatbranch_confinement() {
  return {"fatbranch-confinement", [](const Space& space, const PlayTranscript& t) {
            const auto* x = dynamic_cast<const PartitionSpace*>(&space);
            if (!x) return Verdict::vacuous("not the partition space");
            PointSet earlier;
            Seq g;
            for (const auto& in : t.innings) {
              if (!in.annotations.contains("prefix")) return Verdict::fail(at(in.n) + "no prefix annotated");
              g = in.annotations.at("prefix").get<Seq>();
              if (g.size() != in.n) return Verdict::fail(at(in.n) + "prefix has the wrong length");
              PointSet cover = FatBranchPrefix{g}.covered(*x);
              if (!std::includes(cover.begin(), cover.end(), earlier.begin(), earlier.end()))
                return Verdict::fail(at(in.n) + "an earlier pick is off the fat branch " + Point(g).to_string());
              earlier.insert(in.two.begin(), in.two.end());
            }
            if (t.innings.empty()) return Verdict::vacuous("no innings");
            const auto& last = t.innings.back();
            if (!covered_by_single_fat_branch(*x, earlier))
              return Verdict::fail("the final picks leave every single fat branch");
            return Verdict::pass("confined along " + std::to_string(g.size()) + " blocks, last pick " + space.format(last.two));
          }};
}

Invariant fplay_freshness() {
  return {"fplay-freshness", [](const Space&, const PlayTranscript& t) {
            SetSeq picks;
            for (const auto& in : t.innings) {
              if (!in.annotations.contains("fplay")) return Verdict::fail(at(in.n) + "no F-play annotated");
              FPlay p = FPlay::from_json(in.annotations.at("fplay"));
              try {
                check_fplay(p);
              } catch (const NotAnFPlay& e) {
                return Verdict::fail(at(in.n) + e.what());
              }
              std::set<std::uint64_t> distinct(p.blocks.begin(), p.blocks.end());
              if (distinct.size() != p.blocks.size()) return Verdict::fail(at(in.n) + "a block repeats");
              if (p.picks != picks) return Verdict::fail(at(in.n) + "F-play picks differ from Two's picks");
              if (!in.two.empty()) {
                std::vector<std::uint64_t> n;
                for (const auto& q : in.two) n.push_back(q.value());
                picks.push_back(std::move(n));
              }
            }
            if (t.innings.empty()) return Verdict::vacuous("no innings");
            if (picks.empty()) return Verdict::vacuous("Two never picked");
            return Verdict::pass(std::to_string(picks.size()) + " blocks, all distinct");
          }};
}

std::vector<Invariant> invariants_for(const std::string& space, const std::string& one, const std::string& two) {
  std::vector<Invariant> out;
  if (space == "tree" && one == "branch") out.push_back(branch_confinement());
  if (space == "tree" && two == "pair") out.push_back(pair_witness());
  if (space == "fan" && two == "markov") out.push_back(markov_progress());
  if (space == "partition" && two == "eub") out.push_back(eub_invariant());
  if (space == "partition" && one == "fatbranch") out.push_back(fatbranch_confinement());
  if (space == "scheepers" && one == "fin") out.push_back(fplay_freshness());
  return out;
}

}  // namespace tgame
