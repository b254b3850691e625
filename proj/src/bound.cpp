#include "tgame/bound.hpp"

#include <algorithm>
#include <sstream>

namespace tgame {

BoundSpec BoundSpec::constant(std::uint64_t k) {
  if (k < 1) throw BoundError("constant bound must be >= 1");
  BoundSpec b;
  b.kind_ = Kind::constant;
  b.k_ = k;
  return b;
}

BoundSpec BoundSpec::tabulated(const std::string& name) {
  BoundSpec b;
  b.kind_ = Kind::tabulated;
  b.table_ = name;
  if (name == "succ" || name == "pow2") return b;
  if (name.rfind("cycle:", 0) == 0) {
    std::stringstream ss(name.substr(6));
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        std::size_t used = 0;
        auto v = std::stoull(item, &used);
        if (used != item.size() || v < 1) throw BoundError("");
        b.cycle_.push_back(v);
      } catch (const std::exception&) {
        throw BoundError("cycle entries must be positive integers: '" + name + "'");
      }
    }
    if (b.cycle_.empty()) throw BoundError("empty cycle: '" + name + "'");
    return b;
  }
  throw BoundError("unknown bound template '" + name + "'");
}

BoundSpec BoundSpec::fin() { return BoundSpec{}; }

BoundSpec BoundSpec::parse(const std::string& sel) {
  if (sel == "fin") return fin();
  if (sel == "1") return constant(1);
  auto number = [&](const std::string& s) -> std::uint64_t {
    try {
      std::size_t used = 0;
      auto v = std::stoull(s, &used);
      if (used == s.size() && s.find('-') == std::string::npos) return v;
    } catch (const std::exception&) {
    }
    throw BoundError("bad bound selector '" + sel + "'");
  };
  if (sel.rfind("k:", 0) == 0) return constant(number(sel.substr(2)));
  if (sel.rfind("f:", 0) == 0) return tabulated(sel.substr(2));
  throw BoundError("bad bound selector '" + sel + "'");
}

std::optional<std::uint64_t> BoundSpec::budget(std::uint64_t n) const {
  switch (kind_) {
    case Kind::constant: return k_;
    case Kind::fin: return std::nullopt;
    case Kind::tabulated:
      if (table_ == "succ") return n + 1;
      if (table_ == "pow2") return std::uint64_t{1} << std::min<std::uint64_t>(n, 63);
      return cycle_[n % cycle_.size()];
  }
  return std::nullopt;
}

bool BoundSpec::bounded() const {
  if (kind_ == Kind::constant) return true;
  if (kind_ == Kind::fin) return false;
  return !cycle_.empty();
}

std::optional<std::uint64_t> BoundSpec::limsup() const {
  if (kind_ == Kind::constant) return k_;
  if (kind_ == Kind::tabulated && !cycle_.empty()) return *std::max_element(cycle_.begin(), cycle_.end());
  return std::nullopt;
}

std::string BoundSpec::name() const {
  switch (kind_) {
    case Kind::constant: return k_ == 1 ? "1" : "k:" + std::to_string(k_);
    case Kind::fin: return "fin";
    case Kind::tabulated: return "f:" + table_;
  }
  return "?";
}

nlohmann::json BoundSpec::to_json() const {
  switch (kind_) {
    case Kind::constant: return {{"kind", "constant"}, {"k", k_}};
    case Kind::fin: return {{"kind", "fin"}};
    case Kind::tabulated: return {{"kind", "tabulated"}, {"table", table_}};
  }
  return {};
}

BoundSpec BoundSpec::from_json(const nlohmann::json& j) {
  auto kind = j.at("kind").get<std::string>();
  if (kind == "constant") return constant(j.at("k").get<std::uint64_t>());
  if (kind == "fin") return fin();
  if (kind == "tabulated") return tabulated(j.at("table").get<std::string>());
  throw BoundError("unknown bound kind '" + kind + "'");
}

}  // namespace tgame
