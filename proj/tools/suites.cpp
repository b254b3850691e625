#include "suites.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <set>
#include <stdexcept>

#include "baselines.hpp"
#include "tgame/ad_family.hpp"
#include "tgame/fan_space.hpp"
#include "tgame/invariants.hpp"
#include "tgame/minimax.hpp"
#include "tgame/partition_space.hpp"
#include "tgame/registry.hpp"
#include "tgame/scheepers_space.hpp"
#include "tgame/translate.hpp"
#include "tgame/tree_space.hpp"

namespace tgame::cli {

bool SuiteReport::ok() const {
  return std::all_of(lines.begin(), lines.end(), [](const CheckLine& l) { return l.ok; });
}

namespace {

using Clock = std::chrono::steady_clock;

struct Tally {
  std::size_t runs = 0;
  std::size_t failed = 0;
  std::string first;

  void record(const std::string& label, bool ok, const std::string& why) {
    ++runs;
    if (ok) return;
    if (failed++ == 0) first = label + ": " + why;
  }

  CheckLine line(const std::string& name, const std::string& unit = "plays") const {
    CheckLine l{name, failed == 0, std::to_string(runs) + " " + unit + ", " + std::to_string(failed) + " violations"};
    if (!first.empty()) l.detail += "; first: " + first;
    return l;
  }
};

std::string first_failure(const PlayTranscript& t) {
  for (auto it = t.diagnostics.begin(); it != t.diagnostics.end(); ++it)
    if (it.value().value("status", "") == "fail") return it.key() + ": " + it.value().value("detail", "");
  return "";
}

void play_and_check(Tally& tally, const std::string& label, const Space& space, const BoundSpec& bound,
                    OneStrategy& one, TwoStrategy& two, std::uint64_t horizon, const std::vector<Invariant>& inv) {
  PlayTranscript t = run_play(space, bound, one, two, horizon);
  bool ok = evaluate(space, t, inv);
  if (ok && t.innings.size() != horizon) {
    tally.record(label, false, "play stopped early");
    return;
  }
  tally.record(label, ok, first_failure(t));
}

/// 20 seeded One opponents.
std::vector<std::pair<std::string, std::unique_ptr<OneStrategy>>> one_opponents() {
  std::vector<std::pair<std::string, std::unique_ptr<OneStrategy>>> out;
  auto add = [&](const std::string& name, std::uint64_t seed) {
    out.emplace_back(name + "#" + std::to_string(seed), make_baseline_one(name, seed));
  };
  for (std::uint64_t s = 1; s <= 8; ++s) add("random", s);
  for (std::uint64_t s = 1; s <= 6; ++s) add("adversarial", s);
  add("block-flooder", 0);
  for (std::uint64_t s = 1; s <= 4; ++s) add("replay-fuzzer", s);
  add("full", 0);
  return out;
}

/// 20 seeded Two opponents.
std::vector<std::pair<std::string, std::unique_ptr<TwoStrategy>>> two_opponents() {
  std::vector<std::pair<std::string, std::unique_ptr<TwoStrategy>>> out;
  out.emplace_back("least", make_baseline_two("least", 0));
  out.emplace_back("greedy", make_baseline_two("greedy", 0));
  for (std::uint64_t s = 1; s <= 18; ++s) out.emplace_back("random#" + std::to_string(s), make_baseline_two("random", s));
  return out;
}

template <class F>
SuiteReport timed(const std::string& name, F&& body) {
  auto t0 = Clock::now();
  SuiteReport r{name, {}, 0};
  try {
    body(r);
  } catch (const std::exception& e) {
    r.lines.push_back({"exception", false, e.what()});
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return r;
}

std::string names(const std::vector<Side>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v[i]);
  return s + ")";
}

}  // namespace

SuiteReport eub_suite() {
  return timed("eub", [](SuiteReport& r) {
    for (std::uint64_t k : {1, 2}) {
      PartitionSpace x({k});
      auto bound = BoundSpec::constant(k + 1);
      auto two = two_eub_strategy();
      std::vector<std::pair<std::string, std::unique_ptr<OneStrategy>>> ones;
      ones.emplace_back("adversarial#1", make_baseline_one("adversarial", 1));
      ones.emplace_back("block-flooder", make_baseline_one("block-flooder", 0));
      for (std::uint64_t s = 1; s <= 20; ++s)
        ones.emplace_back("replay-fuzzer#" + std::to_string(s), make_baseline_one("replay-fuzzer", s));
      Tally tally;
      for (auto& [label, one] : ones) play_and_check(tally, label, x, bound, *one, *two, 100, {eub_invariant()});
      r.lines.push_back(tally.line("EUB invariant, k=" + std::to_string(k) + ", 100 innings of G_" + std::to_string(k + 1)));
    }
  });
}

SuiteReport fatbranch_suite() {
  return timed("fatbranch", [](SuiteReport& r) {
    for (std::uint64_t k : {1, 2, 3}) {
      PartitionSpace x({k});
      auto bound = BoundSpec::constant(k);
      auto one = one_fatbranch_strategy();
      Tally tally;
      for (auto& [label, two] : two_opponents())
        play_and_check(tally, label, x, bound, *one, *two, 200, {fatbranch_confinement()});
      r.lines.push_back(tally.line("fat-branch confinement, k=" + std::to_string(k) + ", 200 innings of G_" + std::to_string(k)));
    }
  });
}

SuiteReport tree_suite() {
  return timed("tree", [](SuiteReport& r) {
    TreeSpace tree;
    {
      auto one = one_branch_strategy();
      Tally tally;
      for (auto& [label, two] : two_opponents())
        play_and_check(tally, label, tree, BoundSpec::constant(1), *one, *two, 200, {branch_confinement()});
      r.lines.push_back(tally.line("branch confinement, 200 innings of G_1"));
    }
    {
      auto two = two_pair_strategy();
      Tally tally;
      for (auto& [label, one] : one_opponents())
        play_and_check(tally, label, tree, BoundSpec::constant(2), *one, *two, 100, {pair_witness()});
      r.lines.push_back(tally.line("pair witness antichain, 100 innings of G_2"));
    }
  });
}

SuiteReport fan_suite() {
  return timed("fan", [](SuiteReport& r) {
    FanSpace fan;
    auto two = markov_two_strategy();
    Tally tally;
    for (auto& [label, one] : one_opponents())
      play_and_check(tally, label, fan, BoundSpec::tabulated("succ"), *one, *two, 100, {markov_progress()});
    r.lines.push_back(tally.line("Markov column progress, f(n)=n+1, 100 innings"));
  });
}

SuiteReport scheepers_suite() {
  return timed("scheepers", [](SuiteReport& r) {
    {
      Tally tally;
      std::set<std::uint64_t> values;
      for (std::uint64_t n = 0; n < 500; ++n) {
        SetSeq t = seq_enum(n);
        std::uint64_t f = strategy_f_at(n);
        std::set<std::uint64_t> blocks;
        for (const auto& e : t) blocks.insert(ScheepersSpace::block_of(e.front()));
        tally.record("T_" + std::to_string(n), !blocks.contains(f), "F(T) lies in a block of T");
        tally.record("T_" + std::to_string(n), values.insert(f).second, "F repeats a value");
        tally.record("T_" + std::to_string(n), enum_index(t) == n, "enumeration does not round-trip");
      }
      r.lines.push_back(tally.line("F properties (1) and (2) on enum indices < 500", "checks"));
    }
    {
      std::mt19937_64 rng(2024);
      auto extend = [&](SetSeq picks, std::size_t len) {
        while (picks.size() < len) {
          std::uint64_t b = FPlay::from_picks(picks, true).blocks.back();
          switch (rng() % 3) {
            case 0: picks.push_back({pair64(b, 0)}); break;
            case 1: picks.push_back({pair64(b, 1)}); break;
            default: picks.push_back({pair64(b, 0), pair64(b, 1)}); break;
          }
        }
        return picks;
      };
      Tally corrected;
      std::size_t literal = 0;
      std::size_t disjoint = 0;
      std::size_t literal_on_disjoint = 0;
      for (int i = 0; i < 50; ++i) {
        SetSeq a = extend({}, 6);
        std::size_t cut = rng() % 6;
        SetSeq b = extend(SetSeq(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(cut)), 6);
        auto rep = play_intersection(FPlay::from_picks(a), FPlay::from_picks(b));
        corrected.record("pair " + std::to_string(i), rep.holds, "S(P) n S(P') differs from the prefix identity");
        literal += rep.literal_holds;
        if (rep.divergent.empty()) {
          ++disjoint;
          literal_on_disjoint += rep.literal_holds;
        }
      }
      CheckLine l = corrected.line("intersection law on 50 random F-play pairs of length 6", "pairs");
      l.detail += "; literal N_1..N_{k-1} form holds on " + std::to_string(literal) + "/50, on " +
                  std::to_string(literal_on_disjoint) + "/" + std::to_string(disjoint) +
                  " pairs with disjoint divergent picks";
      l.ok = l.ok && literal_on_disjoint == disjoint;
      r.lines.push_back(l);
    }
    {
      ScheepersSpace x;
      auto one = one_fin_strategy();
      Tally tally;
      auto least = make_baseline_two("least", 0);
      play_and_check(tally, "least", x, BoundSpec::fin(), *one, *least, 50, {fplay_freshness()});
      r.lines.push_back(tally.line("One's G_fin strategy against least picks, 50 innings"));
    }
  });
}

namespace {

struct TranslatorCase {
  std::string label;
  std::string space;
  BoundSpec from;
  BoundSpec to;
  Side side;
  std::function<std::unique_ptr<TwoStrategy>(std::uint64_t)> two;
  std::function<std::unique_ptr<OneStrategy>(std::uint64_t)> one;
};

std::vector<TranslatorCase> translator_cases() {
  auto k2 = BoundSpec::constant(2);
  auto cyc = BoundSpec::tabulated("cycle:1,2");
  auto succ = BoundSpec::tabulated("succ");
  auto pow2 = BoundSpec::tabulated("pow2");
  auto core_two = [](std::string n) { return [n](std::uint64_t) { return make_core_two(n); }; };
  auto core_one = [](std::string n) { return [n](std::uint64_t) { return make_core_one(n); }; };
  auto rnd_two = [](std::uint64_t s) { return make_baseline_two("random", s); };
  auto rnd_one = [](std::uint64_t s) { return make_baseline_one("random", s); };
  return {
      {"Two markov k:2 -> cycle", "fan", k2, cyc, Side::two, core_two("markov"), {}},
      {"Two eub k:2 -> cycle", "partition:k=1", k2, cyc, Side::two, core_two("eub"), {}},
      {"Two markov cycle -> k:2", "fan", cyc, k2, Side::two, core_two("markov"), {}},
      {"Two random k:2 -> cycle", "fan", k2, cyc, Side::two, rnd_two, {}},
      {"Two markov succ -> pow2", "fan", succ, pow2, Side::two, core_two("markov"), {}},
      {"Two random succ -> pow2", "tree", succ, pow2, Side::two, rnd_two, {}},
      {"One fatbranch k:2 -> cycle", "partition:k=2", k2, cyc, Side::one, {}, core_one("fatbranch")},
      {"One branch k:2 -> cycle", "tree", k2, cyc, Side::one, {}, core_one("branch")},
      {"One fatbranch cycle -> k:2", "partition:k=2", cyc, k2, Side::one, {}, core_one("fatbranch")},
      {"One branch succ -> pow2", "tree", succ, pow2, Side::one, {}, core_one("branch")},
      {"One random succ -> pow2", "fan", succ, pow2, Side::one, {}, rnd_one},
      {"One random cycle -> k:2", "tree", cyc, k2, Side::one, {}, rnd_one},
  };
}

}  // namespace

SuiteReport translator_suite() {
  return timed("translators", [](SuiteReport& r) {
    {
      Tally tally;
      auto two_map = InningMap::for_two(BoundSpec::constant(2), BoundSpec::tabulated("cycle:1,2"));
      tally.record("k:2 -> cycle", two_map.at(0) == 1 && two_map.at(1) == 3 && two_map.at(2) == 5, "schedule is not 1,3,5");
      auto grow = InningMap::for_two(BoundSpec::tabulated("succ"), BoundSpec::tabulated("pow2"));
      tally.record("succ -> pow2", grow.at(0) == 0 && grow.at(1) == 1 && grow.at(2) == 2 && grow.at(3) == 3,
                   "schedule is not 0,1,2,3");
      auto pad = InningMap::for_one(BoundSpec::tabulated("succ"), BoundSpec::tabulated("pow2"));
      tally.record("pow2 into succ", pad.at(0) == 0 && pad.at(1) == 1 && pad.at(2) == 3 && pad.at(3) == 7,
                   "schedule is not 2^i - 1");
      r.lines.push_back(tally.line("least schedules", "schedules"));
    }
    auto cases = translator_cases();
    std::vector<Tally> tallies(cases.size());
    const std::uint64_t horizon = 10;
    for (std::uint64_t i = 0; i < 1000; ++i) {
      const auto& c = cases[i % cases.size()];
      Tally& tally = tallies[i % cases.size()];
      std::uint64_t seed = i + 1;
      auto space = make_space(c.space);
      std::string label = "play " + std::to_string(i);
      if (c.side == Side::two) {
        auto translated = translate_two(c.two(seed), c.from, c.to);
        auto opponents = one_opponents();
        auto& one = *opponents[i % opponents.size()].second;
        PlayTranscript t = run_play(*space, c.to, one, *translated, horizon);
        bool ok = evaluate(*space, t, {});
        std::string why = first_failure(t);
        std::uint64_t expected = 0;
        for (std::uint64_t n = 0; n < t.innings.size(); ++n)
          expected += translated->map().mode() == TranslationMode::mask || translated->map().inner_inning_at(n).has_value();
        if (ok && translated->invocations() != expected) {
          ok = false;
          why = "inner consulted " + std::to_string(translated->invocations()) + " times, expected " + std::to_string(expected);
        }
        if (ok) {
          auto fresh = c.two(seed);
          Verdict v = replay_two(*space, t, *fresh, c.from);
          ok = v.ok();
          why = v.detail;
        }
        tally.record(label, ok, why);
      } else {
        auto translated = translate_one(c.one(seed), c.from, c.to);
        auto opponents = two_opponents();
        auto& two = *opponents[i % opponents.size()].second;
        PlayTranscript t = run_play(*space, c.to, *translated, two, horizon);
        bool ok = evaluate(*space, t, {});
        std::string why = first_failure(t);
        if (ok) {
          auto fresh = c.one(seed);
          Verdict v = replay_one(*space, t, *fresh, c.from);
          ok = v.ok();
          why = v.detail;
        }
        tally.record(label, ok, why);
      }
    }
    for (std::size_t i = 0; i < cases.size(); ++i) r.lines.push_back(tallies[i].line(cases[i].label));
  });
}

SuiteReport adfamily_suite() {
  return timed("adfamily", [](SuiteReport& r) {
    FanSpace fan;
    auto two = markov_two_strategy();
    AdFamily fam = build_ad_family(fan, *two, 8, BoundSpec::tabulated("succ"));
    CheckLine root{"root set A_() = {(0,0)}", fam.a.at("") == PointSet{FanSpace::point(0, 0)}, fan.format(fam.a.at(""))};
    r.lines.push_back(root);
    Tally tally;
    for (std::size_t len = 1; len <= 8; ++len) {
      Verdict v = check_prefix_law(fam, len);
      tally.record("length " + std::to_string(len), v.ok(), v.detail);
    }
    CheckLine law = tally.line("prefix law B_g n B_h, depth 8 (" + std::to_string(fam.a.size() - 1) + " nodes)", "lengths");
    if (!fam.warnings.empty()) {
      law.ok = false;
      law.detail += "; " + fam.warnings.front();
    }
    r.lines.push_back(law);
  });
}

namespace {

FiniteGameSpec example_spec(std::uint64_t depth, std::vector<std::uint64_t> budget) {
  return FiniteGameSpec{{0, 1, 2, 3}, {{0, 1}, {2, 3}, {0, 2}}, {{0, 2}, {1, 3}}, depth, std::move(budget)};
}

}  // namespace

SuiteReport minimax_suite() {
  return timed("minimax", [](SuiteReport& r) {
    {
      std::vector<FiniteGameSpec> specs{example_spec(2, {1, 1}), example_spec(1, {1}), example_spec(1, {2})};
      std::vector<Side> expected{Side::two, Side::one, Side::two};
      std::vector<Side> got;
      bool verified = true;
      for (const auto& s : specs) {
        Solution sol = solve(s);
        got.push_back(sol.winner);
        verified = verified && verify(s, sol.strategy, sol.winner);
      }
      r.lines.push_back({"example specs", got == expected && verified,
                         "expected " + names(expected) + ", solver " + names(got) + ", verify " + (verified ? "ok" : "failed")});
    }
    {
      std::vector<Side> got;
      bool verified = true;
      for (std::uint64_t b : {1, 2}) {
        FiniteGameSpec s = truncate_partition_space({1}, 3, 3, 3, b);
        Solution sol = solve(s);
        got.push_back(sol.winner);
        verified = verified && verify(s, sol.strategy, sol.winner);
      }
      std::vector<Side> expected{Side::one, Side::two};
      r.lines.push_back({"truncated X_1, budget 1 vs 2", got == expected && verified,
                         "winners " + names(got) + ", verify " + (verified ? "ok" : "failed")});
    }
  });
}

namespace {

struct SamplePlay {
  std::string space;
  std::string bound;
  std::function<std::unique_ptr<OneStrategy>()> one;
  std::function<std::unique_ptr<TwoStrategy>()> two;
  std::uint64_t horizon;
};

std::vector<SamplePlay> sample_plays() {
  return {
      {"tree", "1", [] { return make_core_one("branch"); }, [] { return make_baseline_two("random", 3); }, 20},
      {"tree", "k:2", [] { return make_baseline_one("adversarial", 4); }, [] { return make_core_two("pair"); }, 20},
      {"fan", "f:succ", [] { return make_baseline_one("random", 5); }, [] { return make_core_two("markov"); }, 20},
      {"partition:k=1", "k:2", [] { return make_baseline_one("replay-fuzzer", 6); }, [] { return make_core_two("eub"); }, 20},
      {"partition:k=2", "k:2", [] { return make_core_one("fatbranch"); }, [] { return make_baseline_two("random", 7); }, 20},
      {"scheepers", "fin", [] { return make_core_one("fin"); }, [] { return make_baseline_two("least", 0); }, 20},
  };
}

std::string run_sample(const SamplePlay& p) {
  auto space = make_space(p.space);
  auto one = p.one();
  auto two = p.two();
  PlayTranscript t = run_play(*space, BoundSpec::parse(p.bound), *one, *two, p.horizon);
  evaluate(*space, t, invariants_for(space->name(), one->name(), two->name()));
  return to_json(*space, t).dump();
}

}  // namespace

SuiteReport infrastructure_suite() {
  return timed("infrastructure", [](SuiteReport& r) {
    Tally round;
    Tally same;
    for (const auto& p : sample_plays()) {
      std::string first = run_sample(p);
      auto space = make_space(p.space);
      PlayTranscript back = transcript_from_json(*space, json::parse(first));
      round.record(p.space, to_json(*space, back).dump() == first, "re-serialized transcript differs");
      same.record(p.space, run_sample(p) == first, "second run differs");
    }
    r.lines.push_back(round.line("transcript JSON round trip is bit-identical", "transcripts"));
    r.lines.push_back(same.line("seeded plays are deterministic", "plays"));
  });
}

std::vector<std::string> suite_names() {
  return {"partition", "tree", "fan", "scheepers", "translators", "adfamily", "minimax", "infrastructure", "all"};
}

std::vector<SuiteReport> run_suites(const std::string& name) {
  std::vector<SuiteReport> out;
  bool all = name == "all";
  if (all || name == "partition") {
    out.push_back(eub_suite());
    out.push_back(fatbranch_suite());
  }
  if (all || name == "tree") out.push_back(tree_suite());
  if (all || name == "fan") out.push_back(fan_suite());
  if (all || name == "scheepers") out.push_back(scheepers_suite());
  if (all || name == "translators") out.push_back(translator_suite());
  if (all || name == "adfamily") out.push_back(adfamily_suite());
  if (all || name == "minimax") out.push_back(minimax_suite());
  if (all || name == "infrastructure") out.push_back(infrastructure_suite());
  if (out.empty()) throw std::invalid_argument("unknown suite '" + name + "'");
  return out;
}

}  // namespace tgame::cli
