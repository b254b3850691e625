#include "tgame/point.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

namespace tgame {

Point::Point(Seq seq) : seq_(std::move(seq)) {
  auto c = sequence_code(seq_);
  big_ = !c.has_value();
  code_ = c.value_or(0);
  weight_ = seq_.size();
  for (auto x : seq_) {
    if (weight_ > std::numeric_limits<std::uint64_t>::max() - x) {
      weight_ = std::numeric_limits<std::uint64_t>::max();
      break;
    }
    weight_ += x;
  }
}

std::uint64_t Point::value() const {
  if (seq_.size() != 1) throw std::logic_error("Point::value on a non-natural point");
  return seq_[0];
}

std::optional<u128> Point::code() const {
  if (big_) return std::nullopt;
  return code_;
}

Point Point::child(std::uint64_t k) const {
  Seq s = seq_;
  s.push_back(k);
  return Point(std::move(s));
}

Point Point::next_sibling() const {
  Seq s = seq_;
  ++s.back();
  return Point(std::move(s));
}

Point Point::parent() const {
  return prefix(seq_.size() - 1);
}

Point Point::prefix(std::size_t len) const {
  return Point(Seq(seq_.begin(), seq_.begin() + static_cast<std::ptrdiff_t>(len)));
}

std::string Point::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < seq_.size(); ++i) os << (i ? "," : "") << seq_[i];
  os << ')';
  return os.str();
}

std::strong_ordering operator<=>(const Point& a, const Point& b) {
  if (!a.big_ && !b.big_) return a.code_ <=> b.code_;
  if (a.big_ != b.big_) return a.big_ ? std::strong_ordering::greater : std::strong_ordering::less;
  if (auto c = a.weight_ <=> b.weight_; c != 0) return c;
  return a.seq_ <=> b.seq_;
}

std::string to_string(const PointSet& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& p : s) {
    if (!first) out += ",";
    out += p.to_string();
    first = false;
  }
  return out + "}";
}

}  // namespace tgame
