#include "commands.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <memory>
#include <ostream>

#include "CLI11.hpp"
#include "baselines.hpp"
#include "repl.hpp"
#include "suites.hpp"
#include "tgame/invariants.hpp"
#include "tgame/minimax.hpp"
#include "tgame/partition_space.hpp"
#include "tgame/registry.hpp"

namespace tgame::cli {

namespace {

/// Bad selectors, flags or input files.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string space;
  std::string bound;
  std::string one;
  std::string two;
  std::uint64_t innings = 10;
  std::uint64_t seed = 1;
  std::uint64_t plays = 10;
  bool strict_g1 = false;
  std::string out = "transcript.json";
};

void add_run_options(CLI::App& cmd, RunConfig& cfg, bool with_plays) {
  cmd.add_option("--space", cfg.space, "tree | fan | partition:k=K | scheepers")->required();
  cmd.add_option("--bound", cfg.bound, "1 | k:K | f:NAME | fin")->required();
  cmd.add_option("--one", cfg.one, "builtin:NAME or repl:human")->required();
  cmd.add_option("--two", cfg.two, "builtin:NAME or repl:human")->required();
  cmd.add_option("--innings", cfg.innings, "horizon")->capture_default_str()->check(CLI::PositiveNumber);
  cmd.add_option("--seed", cfg.seed, "seed of the baseline strategies")->capture_default_str();
  cmd.add_flag("--strict-g1", cfg.strict_g1, "Two must pick a point every inning of G_1");
  if (with_plays) cmd.add_option("--plays", cfg.plays, "number of seeded plays")->capture_default_str()->check(CLI::PositiveNumber);
  else cmd.add_option("--out", cfg.out, "transcript path")->capture_default_str();
}

std::string builtin_name(const std::string& selector) {
  const std::string prefix = "builtin:";
  if (selector.rfind(prefix, 0) != 0) throw UsageError("strategy selector must be builtin:NAME, got '" + selector + "'");
  return selector.substr(prefix.size());
}

std::unique_ptr<OneStrategy> resolve_one(const std::string& selector, std::uint64_t seed) {
  std::string name = builtin_name(selector);
  if (auto s = make_core_one(name)) return s;
  if (auto s = make_baseline_one(name, seed)) return s;
  throw UsageError("no One strategy '" + name + "'");
}

std::unique_ptr<TwoStrategy> resolve_two(const std::string& selector, std::uint64_t seed) {
  std::string name = builtin_name(selector);
  if (auto s = make_core_two(name)) return s;
  if (auto s = make_baseline_two(name, seed)) return s;
  throw UsageError("no Two strategy '" + name + "'");
}

std::unique_ptr<Space> resolve_space(const std::string& selector) {
  try {
    return make_space(selector);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

BoundSpec resolve_bound(const std::string& selector) {
  try {
    return BoundSpec::parse(selector);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

void record_meta(PlayTranscript& t, const RunConfig& cfg, std::uint64_t seed) {
  t.meta["space_selector"] = cfg.space;
  t.meta["one_selector"] = cfg.one;
  t.meta["two_selector"] = cfg.two;
  t.meta["seed"] = seed;
}

std::string verdict_line(const PlayTranscript& t, bool ok) {
  std::string line = std::string(ok ? "pass" : "FAIL") + ": " + std::to_string(t.innings.size()) + " innings";
  for (auto it = t.diagnostics.begin(); it != t.diagnostics.end(); ++it)
    line += "; " + it.key() + " " + it.value().value("status", "") + " (" + it.value().value("detail", "") + ")";
  return line;
}

void write_json(const std::string& path, const json& j) {
  std::ofstream f(path);
  if (!f) throw UsageError("cannot write '" + path + "'");
  f << j.dump(2) << "\n";
}

int finish_play(const Space& space, PlayTranscript& t, const std::vector<Invariant>& inv, const RunConfig& cfg,
                std::ostream& out) {
  bool ok = evaluate(space, t, inv);
  write_json(cfg.out, to_json(space, t));
  out << verdict_line(t, ok) << "\n";
  return ok ? kExitOk : kExitFailed;
}

int cmd_play(const RunConfig& cfg, std::ostream& out) {
  auto space = resolve_space(cfg.space);
  BoundSpec bound = resolve_bound(cfg.bound);
  auto one = resolve_one(cfg.one, cfg.seed);
  auto two = resolve_two(cfg.two, cfg.seed);
  PlayTranscript t = run_play(*space, bound, *one, *two, cfg.innings, {cfg.strict_g1});
  record_meta(t, cfg, cfg.seed);
  return finish_play(*space, t, invariants_for(space->name(), one->name(), two->name()), cfg, out);
}

int cmd_duel(const RunConfig& cfg, std::ostream& out) {
  auto space = resolve_space(cfg.space);
  BoundSpec bound = resolve_bound(cfg.bound);
  std::uint64_t passed = 0;
  for (std::uint64_t i = 0; i < cfg.plays; ++i) {
    std::uint64_t seed = cfg.seed + i;
    auto one = resolve_one(cfg.one, seed);
    auto two = resolve_two(cfg.two, seed);
    PlayTranscript t = run_play(*space, bound, *one, *two, cfg.innings, {cfg.strict_g1});
    record_meta(t, cfg, seed);
    bool ok = evaluate(*space, t, invariants_for(space->name(), one->name(), two->name()));
    passed += ok;
    out << "seed " << seed << ": " << verdict_line(t, ok) << "\n";
  }
  out << passed << "/" << cfg.plays << " plays passed\n";
  return passed == cfg.plays ? kExitOk : kExitFailed;
}

int cmd_repl(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  const std::string human = "repl:human";
  if ((cfg.one == human) == (cfg.two == human)) throw UsageError("exactly one side must be repl:human");
  auto space = resolve_space(cfg.space);
  BoundSpec bound = resolve_bound(cfg.bound);
  std::unique_ptr<OneStrategy> one = cfg.one == human ? human_one(in, out) : resolve_one(cfg.one, cfg.seed);
  std::unique_ptr<TwoStrategy> two = cfg.two == human ? human_two(in, out, cfg.strict_g1) : resolve_two(cfg.two, cfg.seed);
  PlayTranscript t = run_play(*space, bound, *one, *two, cfg.innings, {cfg.strict_g1});
  record_meta(t, cfg, cfg.seed);
  std::string core_one = cfg.one == human ? "human" : one->name();
  std::string core_two = cfg.two == human ? "human" : two->name();
  return finish_play(*space, t, invariants_for(space->name(), core_one, core_two), cfg, out);
}

int cmd_check(const std::string& suite, std::ostream& out) {
  auto known = suite_names();
  if (std::find(known.begin(), known.end(), suite) == known.end()) throw UsageError("unknown suite '" + suite + "'");
  bool all_ok = true;
  for (const auto& r : run_suites(suite)) {
    all_ok = all_ok && r.ok();
    out << "[" << (r.ok() ? "pass" : "FAIL") << "] " << r.name << " (" << r.seconds << " s)\n";
    for (const auto& l : r.lines) out << "    [" << (l.ok ? "pass" : "FAIL") << "] " << l.name << ": " << l.detail << "\n";
  }
  return all_ok ? kExitOk : kExitFailed;
}

struct SolveConfig {
  std::string spec_path;
  std::string surrogate;
  std::uint64_t budget = 1;
  std::uint64_t block_depth = 3;
  std::uint64_t width = 0;
  std::uint64_t depth = 3;
  std::string out = "solution.json";
};

FiniteGameSpec load_spec(const SolveConfig& cfg) {
  if (!cfg.surrogate.empty()) {
    auto space = resolve_space(cfg.surrogate);
    const auto* x = dynamic_cast<const PartitionSpace*>(space.get());
    if (!x) throw UsageError("--surrogate takes partition:k=K");
    std::uint64_t width = cfg.width ? cfg.width : x->k() + 2;
    try {
      return truncate_partition_space({x->k()}, cfg.block_depth, width, cfg.depth, cfg.budget);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  if (cfg.spec_path.empty()) throw UsageError("solve needs a spec path or --surrogate");
  std::ifstream f(cfg.spec_path);
  if (!f) throw UsageError("cannot read '" + cfg.spec_path + "'");
  try {
    FiniteGameSpec spec = FiniteGameSpec::from_json(json::parse(f));
    spec.validate();
    return spec;
  } catch (const json::exception& e) {
    throw UsageError(std::string("malformed spec: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("invalid spec: ") + e.what());
  }
}

int cmd_solve(const SolveConfig& cfg, std::ostream& out) {
  FiniteGameSpec spec = load_spec(cfg);
  Solution sol = solve(spec);
  bool verified = verify(spec, sol.strategy, sol.winner);
  write_json(cfg.out, {{"spec", spec.to_json()},
                       {"winner", to_string(sol.winner)},
                       {"nodes", sol.nodes},
                       {"verified", verified},
                       {"strategy", sol.strategy}});
  out << to_string(sol.winner) << (verified ? ", verified" : ", verification FAILED") << " (" << sol.nodes
      << " positions)\n";
  return verified ? kExitOk : kExitFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Selection games on countable spaces"};
  app.require_subcommand(1);
  RunConfig play_cfg, duel_cfg, repl_cfg;
  auto* play = app.add_subcommand("play", "run one play and check the invariants");
  add_run_options(*play, play_cfg, false);
  auto* duel = app.add_subcommand("duel", "run seeded plays of two builtins");
  add_run_options(*duel, duel_cfg, true);
  auto* repl = app.add_subcommand("repl", "play one side interactively");
  add_run_options(*repl, repl_cfg, false);
  std::string suite;
  auto* check = app.add_subcommand("check", "run an invariant suite");
  check->add_option("suite", suite, "partition | tree | fan | scheepers | translators | adfamily | minimax | infrastructure | all")
      ->required();
  SolveConfig solve_cfg;
  auto* solve_cmd = app.add_subcommand("solve", "solve a finite game by exhaustive minimax");
  solve_cmd->add_option("spec", solve_cfg.spec_path, "FiniteGameSpec JSON");
  solve_cmd->add_option("--surrogate", solve_cfg.surrogate, "truncated partition space, partition:k=K");
  solve_cmd->add_option("--budget", solve_cfg.budget, "surrogate budget per inning")->capture_default_str();
  solve_cmd->add_option("--block-depth", solve_cfg.block_depth, "surrogate block depth")->capture_default_str();
  solve_cmd->add_option("--width", solve_cfg.width, "surrogate block width (default k+2)");
  solve_cmd->add_option("--depth", solve_cfg.depth, "surrogate innings")->capture_default_str();
  solve_cmd->add_option("--out", solve_cfg.out, "solution path")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*play) return cmd_play(play_cfg, out);
    if (*duel) return cmd_duel(duel_cfg, out);
    if (*repl) return cmd_repl(repl_cfg, in, out);
    if (*check) return cmd_check(suite, out);
    if (*solve_cmd) return cmd_solve(solve_cfg, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CapacityError& e) {
    err << "capacity error: " << e.what() << "\n";
    return kExitCapacity;
  }
  return kExitUsage;
}

}  // namespace tgame::cli
