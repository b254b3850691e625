#include "tgame/game.hpp"

#include <stdexcept>

namespace tgame {

std::optional<PlayAbort> check_inning(const Space& space, const BoundSpec& bound, const Inning& inning,
                                      bool strict_g1) {
  try {
    if (!space.clusters_at_p(inning.one))
      return PlayAbort{"illegal-one-move", inning.n, "One's move " + space.format(inning.one) + " does not cluster at p"};
  } catch (const DescriptorError& e) {
    return PlayAbort{"illegal-one-move", inning.n, e.what()};
  }
  if (auto b = bound.budget(inning.n); b && inning.two.size() > *b)
    return PlayAbort{"illegal-two-move", inning.n,
                     "Two picked " + std::to_string(inning.two.size()) + " points, budget is " + std::to_string(*b)};
  if (strict_g1 && bound.kind() == BoundSpec::Kind::constant && bound.budget(0) == 1u && inning.two.empty())
    return PlayAbort{"illegal-two-move", inning.n, "strict G_1: Two must pick a point"};
  for (const auto& q : inning.two) {
    if (!space.is_point(q) || !space.contains(inning.one, q))
      return PlayAbort{"illegal-two-move", inning.n, "Two's point " + space.format_point(q) + " is outside One's set"};
  }
  return std::nullopt;
}

namespace {

void merge_notes(json& into, const json& notes) {
  if (!notes.is_object()) return;
  for (auto it = notes.begin(); it != notes.end(); ++it) into[it.key()] = it.value();
}

}  // namespace

PlayTranscript run_play(const Space& space, const BoundSpec& bound, OneStrategy& one, TwoStrategy& two,
                        std::uint64_t horizon, PlayOptions options) {
  if (horizon == 0) throw std::invalid_argument("run_play: horizon must be >= 1");
  PlayTranscript t;
  t.space = space.name();
  t.space_params = space.params();
  t.bound = bound;
  t.strict_g1 = options.strict_g1;
  t.meta["one"] = one.name();
  t.meta["two"] = two.name();
  one.reset();
  two.reset();
  for (std::uint64_t n = 0; n < horizon; ++n) {
    PlayView view{space, bound, n, t.innings};
    Inning inning;
    inning.n = n;
    try {
      OneMove om = one.respond(view);
      inning.one = std::move(om.move);
      merge_notes(inning.annotations, om.notes);
      if (auto bad = check_inning(space, bound, Inning{n, inning.one, {}, {}}, false)) {
        t.abort = bad;
        break;
      }
      TwoMove tm = two.respond(view, inning.one);
      inning.two = std::move(tm.pick);
      merge_notes(inning.annotations, tm.notes);
    } catch (const StrategyInapplicable& e) {
      t.abort = PlayAbort{"strategy-inapplicable", n, e.what()};
      break;
    } catch (const PlayStopped&) {
      break;
    }
    if (auto bad = check_inning(space, bound, inning, options.strict_g1)) {
      t.abort = bad;
      t.innings.push_back(std::move(inning));
      break;
    }
    t.innings.push_back(std::move(inning));
  }
  return t;
}

std::string to_string(Verdict::Status s) {
  switch (s) {
    case Verdict::Status::pass: return "pass";
    case Verdict::Status::fail: return "fail";
    case Verdict::Status::vacuous: return "vacuous-pass";
  }
  return "?";
}

Verdict legality(const Space& space, const PlayTranscript& t) {
  if (t.abort) return Verdict::fail(t.abort->kind + " at inning " + std::to_string(t.abort->inning) + ": " + t.abort->message);
  for (std::size_t i = 0; i < t.innings.size(); ++i) {
    if (t.innings[i].n != i) return Verdict::fail("inning indices are not contiguous");
    if (auto bad = check_inning(space, t.bound, t.innings[i], t.strict_g1))
      return Verdict::fail(bad->kind + " at inning " + std::to_string(bad->inning) + ": " + bad->message);
  }
  return Verdict::pass(std::to_string(t.innings.size()) + " innings");
}

bool evaluate(const Space& space, PlayTranscript& t, const std::vector<Invariant>& invariants) {
  bool ok = true;
  auto record = [&](const std::string& name, const Verdict& v) {
    t.diagnostics[name] = {{"status", to_string(v.status)}, {"detail", v.detail}};
    ok = ok && v.ok();
  };
  record("legality", legality(space, t));
  for (const auto& inv : invariants) record(inv.name, inv.check(space, t));
  return ok;
}

json to_json(const Space& space, const PlayTranscript& t) {
  json innings = json::array();
  for (const auto& in : t.innings)
    innings.push_back({{"n", in.n}, {"one", space.to_json(in.one)}, {"two", space.to_json(in.two)},
                       {"annotations", in.annotations}});
  json j = {{"space", {{"name", t.space}, {"params", t.space_params}}},
            {"bound", t.bound.to_json()},
            {"strict_g1", t.strict_g1},
            {"innings", innings},
            {"diagnostics", t.diagnostics},
            {"meta", t.meta}};
  if (t.abort) j["abort"] = {{"kind", t.abort->kind}, {"inning", t.abort->inning}, {"message", t.abort->message}};
  return j;
}

PlayTranscript transcript_from_json(const Space& space, const json& j) {
  PlayTranscript t;
  try {
    t.space = j.at("space").at("name").get<std::string>();
    if (t.space != space.name()) throw DescriptorError("transcript is for space '" + t.space + "'");
    t.space_params = j.at("space").value("params", json::object());
    t.bound = BoundSpec::from_json(j.at("bound"));
    t.strict_g1 = j.value("strict_g1", false);
    for (const auto& in : j.at("innings")) {
      Inning inning;
      inning.n = in.at("n").get<std::uint64_t>();
      inning.one = space.descriptor_from_json(in.at("one"));
      inning.two = space.points_from_json(in.at("two"));
      inning.annotations = in.value("annotations", json::object());
      t.innings.push_back(std::move(inning));
    }
    t.diagnostics = j.value("diagnostics", json::object());
    t.meta = j.value("meta", json::object());
    if (j.contains("abort")) {
      const auto& a = j.at("abort");
      t.abort = PlayAbort{a.at("kind").get<std::string>(), a.at("inning").get<std::uint64_t>(),
                          a.at("message").get<std::string>()};
    }
  } catch (const json::exception& e) {
    throw DescriptorError(std::string("malformed transcript: ") + e.what());
  }
  return t;
}

}  // namespace tgame
