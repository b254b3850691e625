#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tgame/bound.hpp"
#include "tgame/space.hpp"

namespace tgame {

enum class Side { one, two };

/// Raised by a strategy whose preconditions do not hold for the move it was
/// asked to answer.
class StrategyInapplicable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by a strategy to end the play early; the transcript keeps the
/// innings completed so far.
class PlayStopped : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a bounded search or table would exceed its configured size.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Inning {
  std::uint64_t n = 0;
  Descriptor one;
  PointSet two;
  json annotations = json::object();
};

/// What a strategy sees when asked to move.
struct PlayView {
  const Space& space;
  const BoundSpec& bound;
  std::uint64_t inning;
  std::span<const Inning> history;
};

struct OneMove {
  Descriptor move;
  json notes = json::object();
};

struct TwoMove {
  PointSet pick;
  json notes = json::object();
};

class OneStrategy {
 public:
  virtual ~OneStrategy() = default;
  virtual std::string name() const = 0;
  /// Clears per-play state; called by the engine before inning 0.
  virtual void reset() {}
  virtual OneMove respond(const PlayView& view) = 0;
};

class TwoStrategy {
 public:
  virtual ~TwoStrategy() = default;
  virtual std::string name() const = 0;
  virtual void reset() {}
  virtual TwoMove respond(const PlayView& view, const Descriptor& current) = 0;
};

struct PlayAbort {
  std::string kind;  // illegal-one-move | illegal-two-move | strategy-inapplicable
  std::uint64_t inning = 0;
  std::string message;
};

struct PlayTranscript {
  std::string space;
  json space_params = json::object();
  BoundSpec bound;
  bool strict_g1 = false;
  std::vector<Inning> innings;
  std::optional<PlayAbort> abort;
  json diagnostics = json::object();
  json meta = json::object();
};

struct PlayOptions {
  /// Rejects empty Two moves when the bound is the constant 1.
  bool strict_g1 = false;
};

/// Checks one inning against the game rules; returns the violated rule.
std::optional<PlayAbort> check_inning(const Space& space, const BoundSpec& bound, const Inning& inning,
                                      bool strict_g1);

/// Plays `horizon` innings, One then Two, validating every move.
/// Throws std::invalid_argument if horizon is 0.
PlayTranscript run_play(const Space& space, const BoundSpec& bound, OneStrategy& one, TwoStrategy& two,
                        std::uint64_t horizon, PlayOptions options = {});

struct Verdict {
  enum class Status { pass, fail, vacuous };
  Status status = Status::pass;
  std::string detail;

  bool ok() const { return status != Status::fail; }
  static Verdict pass(std::string d = {}) { return {Status::pass, std::move(d)}; }
  static Verdict fail(std::string d) { return {Status::fail, std::move(d)}; }
  static Verdict vacuous(std::string d = {}) { return {Status::vacuous, std::move(d)}; }
};

std::string to_string(Verdict::Status s);

struct Invariant {
  std::string name;
  std::function<Verdict(const Space&, const PlayTranscript&)> check;
};

/// Legality of every recorded inning plus the absence of an abort.
Verdict legality(const Space& space, const PlayTranscript& t);

/// Runs the invariants and stores their verdicts in t.diagnostics.
/// Returns true iff none failed.
bool evaluate(const Space& space, PlayTranscript& t, const std::vector<Invariant>& invariants);

json to_json(const Space& space, const PlayTranscript& t);
PlayTranscript transcript_from_json(const Space& space, const json& j);

}  // namespace tgame
