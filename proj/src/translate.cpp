#include "tgame/translate.hpp"

#include <algorithm>

namespace tgame {

std::string to_string(TranslationMode m) {
  switch (m) {
    case TranslationMode::schedule: return "schedule";
    case TranslationMode::mask: return "mask";
    case TranslationMode::compress: return "compress";
  }
  return "?";
}

namespace {

bool is_unbounded_table(const BoundSpec& b) { return b.kind() == BoundSpec::Kind::tabulated && !b.bounded(); }
bool is_bounded_table(const BoundSpec& b) { return b.kind() == BoundSpec::Kind::tabulated && b.bounded(); }
bool is_constant(const BoundSpec& b) { return b.kind() == BoundSpec::Kind::constant; }

[[noreturn]] void unsupported(const char* side, const BoundSpec& from, const BoundSpec& to) {
  throw TranslationError(std::string("no translation of ") + side + "'s strategies from " + from.name() + " to " +
                         to.name());
}

constexpr std::uint64_t kScheduleSearch = 10'000'000;

}  // namespace

InningMap InningMap::for_two(const BoundSpec& inner, const BoundSpec& outer) {
  if (is_constant(inner) && is_bounded_table(outer) && outer.limsup() == inner.limsup()) {
    InningMap m(TranslationMode::schedule, inner, outer);
    return m;
  }
  if (is_bounded_table(inner) && is_constant(outer) && outer.limsup() == inner.limsup()) {
    InningMap m(TranslationMode::mask, inner, outer);
    m.k_ = *outer.limsup();
    return m;
  }
  if (is_unbounded_table(inner) && is_unbounded_table(outer)) return InningMap(TranslationMode::schedule, inner, outer);
  unsupported("Two", inner, outer);
}

InningMap InningMap::for_one(const BoundSpec& inner, const BoundSpec& outer) {
  InningMap m = [&] {
    if (is_constant(inner) && is_bounded_table(outer) && outer.limsup() == inner.limsup()) {
      InningMap c(TranslationMode::compress, inner, outer);
      c.k_ = *inner.limsup();
      return c;
    }
    if (is_bounded_table(inner) && is_constant(outer) && outer.limsup() == inner.limsup())
      return InningMap(TranslationMode::schedule, inner, outer);
    if (is_unbounded_table(inner) && (is_unbounded_table(outer) || is_constant(outer)))
      return InningMap(TranslationMode::schedule, inner, outer);
    unsupported("One", inner, outer);
  }();
  m.for_two_ = false;
  return m;
}

void InningMap::extend_to(std::uint64_t i) const {
  while (schedule_.size() <= i) {
    std::uint64_t idx = schedule_.size();
    std::uint64_t start = schedule_.empty() ? 0 : schedule_.back() + 1;
    // Two: outer inning hosting inner inning idx; One: inner inning hosting outer inning idx
    const BoundSpec& host = for_two_ ? outer_ : inner_;
    const BoundSpec& guest = for_two_ ? inner_ : outer_;
    std::uint64_t need = *guest.budget(idx);
    std::uint64_t n = start;
    while (*host.budget(n) < need) {
      if (++n - start > kScheduleSearch) throw TranslationError("schedule search exhausted");
    }
    schedule_.push_back(n);
  }
}

std::uint64_t InningMap::at(std::uint64_t i) const {
  extend_to(i);
  return schedule_[i];
}

std::optional<std::uint64_t> InningMap::inner_inning_at(std::uint64_t outer_n) const {
  std::uint64_t i = 0;
  while (at(i) < outer_n) ++i;
  if (at(i) == outer_n) return i;
  return std::nullopt;
}

bool InningMap::active(std::uint64_t outer_n) const {
  if (mode_ == TranslationMode::mask) return *inner_.budget(outer_n) <= k_;
  if (mode_ == TranslationMode::compress) return *outer_.budget(outer_n) <= k_;
  return true;
}

std::uint64_t InningMap::active_before(std::uint64_t outer_n) const {
  std::uint64_t c = 0;
  for (std::uint64_t n = 0; n < outer_n; ++n) c += active(n);
  return c;
}

// ---------------------------------------------------------------------------

namespace {

json with_translation(json notes, json info) {
  if (!notes.is_object()) notes = json::object();
  notes["translation"] = std::move(info);
  return notes;
}

}  // namespace

TranslatedTwo::TranslatedTwo(std::unique_ptr<TwoStrategy> inner, const BoundSpec& from, const BoundSpec& to)
    : inner_(std::move(inner)), map_(InningMap::for_two(from, to)) {}

void TranslatedTwo::reset() {
  inner_->reset();
  history_.clear();
  invocations_ = 0;
}

TwoMove TranslatedTwo::respond(const PlayView& view, const Descriptor& a) {
  std::uint64_t inner_n = 0;
  if (map_.mode() == TranslationMode::schedule) {
    auto i = map_.inner_inning_at(view.inning);
    if (!i) return {{}, {{"translation", {{"skipped", true}}}}};
    inner_n = *i;
  } else {
    inner_n = view.inning;
  }
  if (inner_n != history_.size()) throw StrategyInapplicable("translated strategy called out of order");
  PlayView iv{view.space, map_.inner(), inner_n, history_};
  TwoMove m = inner_->respond(iv, a);
  ++invocations_;
  history_.push_back(Inning{inner_n, a, m.pick, m.notes});
  json info = {{"inner_inning", inner_n}};
  if (!map_.active(view.inning)) {
    info["suppressed"] = true;
    return {{}, with_translation(m.notes, info)};
  }
  return {m.pick, with_translation(m.notes, info)};
}

TranslatedOne::TranslatedOne(std::unique_ptr<OneStrategy> inner, const BoundSpec& from, const BoundSpec& to)
    : inner_(std::move(inner)), map_(InningMap::for_one(from, to)) {}

void TranslatedOne::reset() {
  inner_->reset();
  history_.clear();
  pending_.reset();
  invocations_ = 0;
}

OneMove TranslatedOne::respond(const PlayView& view) {
  const std::uint64_t n = view.inning;
  if (n != view.history.size()) throw StrategyInapplicable("translated strategy called out of order");
  auto invoke = [&] {
    PlayView iv{view.space, map_.inner(), history_.size(), history_};
    OneMove m = inner_->respond(iv);
    ++invocations_;
    return m;
  };
  if (n > 0 && pending_) {
    bool counts = map_.mode() == TranslationMode::schedule || map_.active(n - 1);
    if (counts) {
      history_.push_back(Inning{history_.size(), pending_->move, view.history.back().two, pending_->notes});
      pending_.reset();
    }
  }
  if (map_.mode() == TranslationMode::schedule) {
    std::uint64_t target = map_.at(n);
    while (history_.size() < target) {
      OneMove pad = invoke();
      history_.push_back(Inning{history_.size(), pad.move, {}, pad.notes});
    }
  }
  if (!pending_) pending_ = invoke();
  json info = {{"inner_inning", history_.size()}};
  if (map_.mode() == TranslationMode::compress) info["active"] = map_.active(n);
  return {pending_->move, with_translation(pending_->notes, info)};
}

std::unique_ptr<TranslatedTwo> translate_two(std::unique_ptr<TwoStrategy> inner, const BoundSpec& from,
                                             const BoundSpec& to) {
  return std::make_unique<TranslatedTwo>(std::move(inner), from, to);
}

std::unique_ptr<TranslatedOne> translate_one(std::unique_ptr<OneStrategy> inner, const BoundSpec& from,
                                             const BoundSpec& to) {
  return std::make_unique<TranslatedOne>(std::move(inner), from, to);
}

// ---------------------------------------------------------------------------

Verdict replay_two(const Space& space, const PlayTranscript& outer, TwoStrategy& fresh, const BoundSpec& from) {
  InningMap map = InningMap::for_two(from, outer.bound);
  fresh.reset();
  std::vector<Inning> history;
  std::uint64_t replayed = 0;
  try {
    for (const auto& in : outer.innings) {
      std::optional<std::uint64_t> i;
      if (map.mode() == TranslationMode::schedule) i = map.inner_inning_at(in.n);
      else i = in.n;
      if (!i) {
        if (!in.two.empty()) return Verdict::fail("inning " + std::to_string(in.n) + " should be skipped");
        continue;
      }
      PlayView iv{space, from, *i, history};
      TwoMove m = fresh.respond(iv, in.one);
      ++replayed;
      PointSet expected = map.active(in.n) ? m.pick : PointSet{};
      if (expected != in.two)
        return Verdict::fail("inning " + std::to_string(in.n) + ": inner move " + space.format(m.pick) +
                             " does not match " + space.format(in.two));
      history.push_back(Inning{*i, in.one, m.pick, m.notes});
    }
  } catch (const StrategyInapplicable& e) {
    return Verdict::fail(std::string("replay: ") + e.what());
  }
  if (replayed == 0) return Verdict::vacuous("no inner inning played");
  return Verdict::pass(std::to_string(replayed) + " inner innings replayed");
}

Verdict replay_one(const Space& space, const PlayTranscript& outer, OneStrategy& fresh, const BoundSpec& from) {
  InningMap map = InningMap::for_one(from, outer.bound);
  fresh.reset();
  std::vector<Inning> g;
  PointSet outer_union;
  std::optional<OneMove> cached;
  try {
    auto inner_move = [&] {
      PlayView iv{space, from, g.size(), g};
      return fresh.respond(iv);
    };
    for (const auto& in : outer.innings) {
      if (map.mode() == TranslationMode::schedule) {
        std::uint64_t target = map.at(in.n);
        while (g.size() < target) {
          OneMove pad = inner_move();
          g.push_back(Inning{g.size(), pad.move, {}, pad.notes});
        }
        OneMove a = inner_move();
        if (!(a.move == in.one)) return Verdict::fail("outer inning " + std::to_string(in.n) + ": move differs from inner inning " + std::to_string(target));
        g.push_back(Inning{g.size(), a.move, in.two, a.notes});
        outer_union.insert(in.two.begin(), in.two.end());
      } else {
        if (!cached) cached = inner_move();
        if (!(cached->move == in.one)) return Verdict::fail("outer inning " + std::to_string(in.n) + ": move differs from inner inning " + std::to_string(g.size()));
        if (map.active(in.n)) {
          g.push_back(Inning{g.size(), cached->move, in.two, cached->notes});
          outer_union.insert(in.two.begin(), in.two.end());
          cached.reset();
        }
      }
    }
  } catch (const StrategyInapplicable& e) {
    return Verdict::fail(std::string("replay: ") + e.what());
  }
  PointSet inner_union;
  for (const auto& in : g) inner_union.insert(in.two.begin(), in.two.end());
  if (inner_union != outer_union) return Verdict::fail("union of outer picks differs from the inner history's");
  return Verdict::pass(std::to_string(g.size()) + " inner innings replayed");
}

}  // namespace tgame
