#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "tgame/game.hpp"

namespace tgame {

class TranslationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// How innings of the inner game sit inside the outer game.
///   schedule: inner inning i is played at outer inning s_i (increasing);
///             Two skips other outer innings, One pads the inner history
///             with empty picks.
///   mask:     Two consults the inner strategy every inning and plays the
///             empty set where the outer budget is too small.
///   compress: One treats only the outer innings with budget <= k as
///             innings of the inner game and discards picks made elsewhere.
enum class TranslationMode { schedule, mask, compress };

std::string to_string(TranslationMode m);

/// Inning correspondence between a game on `inner` bounds and one on
/// `outer` bounds.
class InningMap {
 public:
  static InningMap for_two(const BoundSpec& inner, const BoundSpec& outer);
  static InningMap for_one(const BoundSpec& inner, const BoundSpec& outer);

  TranslationMode mode() const { return mode_; }
  const BoundSpec& inner() const { return inner_; }
  const BoundSpec& outer() const { return outer_; }

  /// schedule mode: the i-th scheduled index. Two: least outer n > s_{i-1}
  /// with outer(n) >= inner(i). One: least inner m > s_{i-1} with
  /// inner(m) >= outer(i).
  std::uint64_t at(std::uint64_t i) const;
  /// schedule mode for Two: the inner inning played at outer inning n.
  std::optional<std::uint64_t> inner_inning_at(std::uint64_t outer_n) const;
  /// mask and compress modes: whether outer inning n counts.
  bool active(std::uint64_t outer_n) const;
  /// compress mode: number of active outer innings before n.
  std::uint64_t active_before(std::uint64_t outer_n) const;

 private:
  InningMap(TranslationMode mode, BoundSpec inner, BoundSpec outer) : mode_(mode), inner_(inner), outer_(outer) {}
  void extend_to(std::uint64_t i) const;

  TranslationMode mode_;
  BoundSpec inner_;
  BoundSpec outer_;
  std::uint64_t k_ = 0;
  bool for_two_ = true;
  mutable std::vector<std::uint64_t> schedule_;
};

/// Two's strategy for G_to built from a Two strategy for G_from.
/// Supported: constant k -> bounded f with limsup k (schedule), bounded f ->
/// constant limsup f (mask), unbounded f -> unbounded g (schedule).
class TranslatedTwo final : public TwoStrategy {
 public:
  TranslatedTwo(std::unique_ptr<TwoStrategy> inner, const BoundSpec& from, const BoundSpec& to);
  std::string name() const override { return "translated(" + inner_->name() + ")"; }
  void reset() override;
  TwoMove respond(const PlayView& view, const Descriptor& current) override;

  std::uint64_t invocations() const { return invocations_; }
  const InningMap& map() const { return map_; }

 private:
  std::unique_ptr<TwoStrategy> inner_;
  InningMap map_;
  std::vector<Inning> history_;
  std::uint64_t invocations_ = 0;
};

/// One's strategy for G_to built from a One strategy for G_from.
/// Supported: constant k -> bounded f with limsup k (compress), bounded f ->
/// constant limsup f (schedule), unbounded f -> unbounded g or constant
/// (schedule).
class TranslatedOne final : public OneStrategy {
 public:
  TranslatedOne(std::unique_ptr<OneStrategy> inner, const BoundSpec& from, const BoundSpec& to);
  std::string name() const override { return "translated(" + inner_->name() + ")"; }
  void reset() override;
  OneMove respond(const PlayView& view) override;

  std::uint64_t invocations() const { return invocations_; }
  const InningMap& map() const { return map_; }
  /// Inner innings played so far (the padded or compressed history).
  const std::vector<Inning>& inner_history() const { return history_; }

 private:
  std::unique_ptr<OneStrategy> inner_;
  InningMap map_;
  std::vector<Inning> history_;
  std::optional<OneMove> pending_;
  std::uint64_t invocations_ = 0;
};

std::unique_ptr<TranslatedTwo> translate_two(std::unique_ptr<TwoStrategy> inner, const BoundSpec& from,
                                             const BoundSpec& to);
std::unique_ptr<TranslatedOne> translate_one(std::unique_ptr<OneStrategy> inner, const BoundSpec& from,
                                             const BoundSpec& to);

/// Replays a fresh inner Two strategy on the compressed history of a play
/// won by a translated Two and compares every move.
Verdict replay_two(const Space& space, const PlayTranscript& outer, TwoStrategy& fresh_inner, const BoundSpec& from);

/// Rebuilds the padded or compressed inner history of a play of a
/// translated One, replays a fresh inner One on it and compares every move
/// and the union of Two's picks.
Verdict replay_one(const Space& space, const PlayTranscript& outer, OneStrategy& fresh_inner, const BoundSpec& from);

}  // namespace tgame
