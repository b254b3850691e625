#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace tgame {

using u128 = unsigned __int128;
using Seq = std::vector<std::uint64_t>;

/// Cantor pairing pi(a,b) = (a+b)(a+b+1)/2 + b. Returns nullopt on overflow.
std::optional<u128> cantor_pair(u128 a, u128 b);

/// 64-bit convenience form; throws std::overflow_error if the result does
/// not fit.
std::uint64_t pair64(std::uint64_t a, std::uint64_t b);

/// Inverse of the pairing on 64-bit codes.
std::pair<std::uint64_t, std::uint64_t> unpair64(std::uint64_t z);

/// Sequence code: code(()) = 0, code(s^k) = pi(code(s), k) + 1.
/// nullopt once the code leaves 128 bits.
std::optional<u128> sequence_code(std::span<const std::uint64_t> s);

/// Inverse of sequence_code for codes that fit in 64 bits.
Seq decode_sequence(std::uint64_t code);

/// Binomial coefficient with saturation at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t r);

/// Colex combinadic rank of a strictly increasing index set:
/// rank({c_1 < ... < c_k}) = sum_j C(c_j, j).
std::uint64_t combinadic_rank(std::span<const std::uint64_t> sorted);

/// Inverse of combinadic_rank for sets of size k.
std::vector<std::uint64_t> combinadic_unrank(std::uint64_t rank, std::uint64_t k);

/// true iff prefix is an initial segment of s (not necessarily proper).
bool is_prefix(std::span<const std::uint64_t> prefix, std::span<const std::uint64_t> s);

}  // namespace tgame
