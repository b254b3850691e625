#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "json.hpp"

using namespace tgame::cli;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  Run r;
  r.code = run_cli(args, in, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

fs::path scratch(const std::string& name) {
  auto dir = fs::temp_directory_path() / "tgame_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

nlohmann::json read_json(const fs::path& p) {
  std::ifstream in(p);
  return nlohmann::json::parse(in);
}

}  // namespace

TEST_CASE("play writes a transcript") {
  auto path = scratch("tree.json");
  auto r = run({"play", "--space", "tree", "--bound", "1", "--one", "builtin:branch", "--two", "builtin:least",
                "--innings", "5", "--out", path.string()});
  CHECK(r.code == kExitOk);
  auto j = read_json(path);
  CHECK(j["innings"].size() == 5);
  CHECK(j["meta"]["seed"] == 1);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"play", "--space", "partition:k=0", "--bound", "k:1", "--one", "builtin:fatbranch", "--two",
             "builtin:least", "--out", scratch("x.json").string()})
            .code == kExitUsage);
  CHECK(run({"play", "--space", "tree", "--bound", "k:0", "--one", "builtin:branch", "--two", "builtin:least",
             "--out", scratch("x.json").string()})
            .code == kExitUsage);
  CHECK(run({"play", "--space", "tree", "--bound", "1", "--one", "builtin:nobody", "--two", "builtin:least",
             "--out", scratch("x.json").string()})
            .code == kExitUsage);
  CHECK(run({"check", "bogus"}).code == kExitUsage);
}

TEST_CASE("an aborted play fails") {
  auto r = run({"play", "--space", "fan", "--bound", "k:2", "--one", "builtin:full", "--two", "builtin:pair",
                "--innings", "3", "--out", scratch("abort.json").string()});
  CHECK(r.code == kExitFailed);
}

TEST_CASE("duel runs seeded plays") {
  auto r = run({"duel", "--space", "partition:k=1", "--bound", "k:2", "--one", "builtin:random", "--two",
                "builtin:eub", "--innings", "5", "--plays", "3", "--seed", "4"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("seed 6") != std::string::npos);
}

TEST_CASE("repl as Two") {
  auto path = scratch("repl.json");
  std::vector<std::string> args = {"repl", "--space", "tree", "--bound", "1", "--one", "builtin:branch",
                                   "--two", "repl:human", "--out", path.string()};
  auto r = run(args, "(3)\n(3,0) (3,1)\nquit\n");
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("inning 0") != std::string::npos);
  CHECK(r.out.find("budget") != std::string::npos);
  auto j = read_json(path);
  REQUIRE(j["innings"].size() == 1);
  CHECK(j["innings"][0]["two"] == nlohmann::json::parse("[[3]]"));
  CHECK(run(args, "").code == kExitOk);
}

TEST_CASE("solve") {
  std::string data = TGAME_TEST_DATA;
  auto out = scratch("solution.json");
  auto r = run({"solve", data + "/depth1_budget1.json", "--out", out.string()});
  CHECK(r.code == kExitOk);
  auto j = read_json(out);
  CHECK(j["verified"] == true);
  CHECK(j.contains("strategy"));
  CHECK(run({"solve", data + "/malformed.json", "--out", out.string()}).code == kExitUsage);
  CHECK(run({"solve", data + "/missing.json", "--out", out.string()}).code == kExitUsage);
  auto s = run({"solve", "--surrogate", "partition:k=1", "--budget", "2", "--out", out.string()});
  CHECK(s.code == kExitOk);
  CHECK(read_json(out)["winner"] == "Two");
  setenv("TGAME_NODE_CAP", "10", 1);
  auto capped = run({"solve", "--surrogate", "partition:k=1", "--budget", "1", "--out", out.string()});
  unsetenv("TGAME_NODE_CAP");
  CHECK(capped.code == kExitCapacity);
}

TEST_CASE("check runs a suite") {
  auto r = run({"check", "adfamily"});
  CHECK(r.code == kExitOk);
  CHECK_FALSE(r.out.empty());
}
