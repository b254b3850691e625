#include "tgame/coding.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace tgame {

namespace {
constexpr u128 kHalfRange = u128{1} << 63;
}

std::optional<u128> cantor_pair(u128 a, u128 b) {
  if (a >= kHalfRange || b >= kHalfRange) return std::nullopt;
  u128 s = a + b;
  if (s >= kHalfRange) return std::nullopt;
  return s * (s + 1) / 2 + b;
}

std::uint64_t pair64(std::uint64_t a, std::uint64_t b) {
  auto z = cantor_pair(a, b);
  if (!z || *z > std::numeric_limits<std::uint64_t>::max())
    throw std::overflow_error("cantor pair exceeds 64 bits");
  return static_cast<std::uint64_t>(*z);
}

std::pair<std::uint64_t, std::uint64_t> unpair64(std::uint64_t z) {
  // w = largest integer with w(w+1)/2 <= z
  auto w = static_cast<std::uint64_t>((std::sqrt(8.0L * z + 1) - 1) / 2);
  auto tri = [](u128 x) { return x * (x + 1) / 2; };
  while (tri(w) > z) --w;
  while (tri(w + 1) <= z) ++w;
  auto b = static_cast<std::uint64_t>(z - tri(w));
  return {w - b, b};
}

std::optional<u128> sequence_code(std::span<const std::uint64_t> s) {
  u128 c = 0;
  for (auto k : s) {
    auto z = cantor_pair(c, k);
    if (!z || *z == ~u128{0}) return std::nullopt;
    c = *z + 1;
  }
  return c;
}

Seq decode_sequence(std::uint64_t code) {
  Seq out;
  while (code != 0) {
    auto [a, b] = unpair64(code - 1);
    out.push_back(b);
    code = a;
  }
  return {out.rbegin(), out.rend()};
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t r) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  u128 acc = 1;
  for (std::uint64_t i = 1; i <= r; ++i) {
    acc = acc * (n - r + i) / i;
    if (acc > std::numeric_limits<std::uint64_t>::max())
      return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(acc);
}

std::uint64_t combinadic_rank(std::span<const std::uint64_t> sorted) {
  std::uint64_t r = 0;
  for (std::size_t j = 0; j < sorted.size(); ++j) {
    if (j > 0 && sorted[j] <= sorted[j - 1])
      throw std::invalid_argument("combinadic_rank: indices not strictly increasing");
    r += binomial(sorted[j], j + 1);
  }
  return r;
}

std::vector<std::uint64_t> combinadic_unrank(std::uint64_t rank, std::uint64_t k) {
  std::vector<std::uint64_t> out(k);
  for (std::uint64_t j = k; j >= 1; --j) {
    // largest c with C(c, j) <= rank
    std::uint64_t lo = j - 1, hi = j - 1;
    while (binomial(hi, j) <= rank) hi = hi == 0 ? 1 : hi * 2;
    while (hi - lo > 1) {
      std::uint64_t mid = lo + (hi - lo) / 2;
      if (binomial(mid, j) <= rank) lo = mid; else hi = mid;
    }
    out[j - 1] = lo;
    rank -= binomial(lo, j);
  }
  return out;
}

bool is_prefix(std::span<const std::uint64_t> prefix, std::span<const std::uint64_t> s) {
  if (prefix.size() > s.size()) return false;
  for (std::size_t i = 0; i < prefix.size(); ++i)
    if (prefix[i] != s[i]) return false;
  return true;
}

}  // namespace tgame
