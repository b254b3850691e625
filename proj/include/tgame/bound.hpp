#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace tgame {

class BoundError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Per-inning selection budget of the games G_k, G_f and G_fin.
///
/// Tabulated bounds come from a fixed library of templates, each of which
/// declares whether it is bounded and, if so, its limsup:
///   succ         n -> n+1
///   pow2         n -> 2^n (saturates at 2^63)
///   cycle:a,b,.. periodic, limsup = max entry
class BoundSpec {
 public:
  enum class Kind { constant, tabulated, fin };

  static BoundSpec constant(std::uint64_t k);
  static BoundSpec tabulated(const std::string& name);
  static BoundSpec fin();
  /// Parses the CLI selector syntax: "1", "k:K", "f:NAME", "fin".
  static BoundSpec parse(const std::string& selector);

  Kind kind() const { return kind_; }
  /// Budget of inning n; nullopt means any finite number of points.
  std::optional<std::uint64_t> budget(std::uint64_t n) const;
  bool bounded() const;
  /// Declared limsup for constant and bounded tabulated bounds.
  std::optional<std::uint64_t> limsup() const;
  std::string name() const;

  nlohmann::json to_json() const;
  static BoundSpec from_json(const nlohmann::json& j);

  bool operator==(const BoundSpec& o) const { return name() == o.name(); }

 private:
  Kind kind_ = Kind::fin;
  std::uint64_t k_ = 0;
  std::string table_;
  std::vector<std::uint64_t> cycle_;
};

}  // namespace tgame
