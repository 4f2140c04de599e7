#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace positroid {

// Subsets of a ground set with at most 64 elements, one bit per element in
// ascending label order.
using Mask = std::uint64_t;

[[nodiscard]] constexpr Mask full_mask(std::size_t n) {
  return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

[[nodiscard]] constexpr int popcount(Mask m) { return std::popcount(m); }

[[nodiscard]] constexpr bool has_bit(Mask m, std::size_t i) {
  return (m >> i) & 1u;
}

[[nodiscard]] constexpr bool subset_of(Mask a, Mask b) { return (a & ~b) == 0; }

// Indices of set bits, ascending.
[[nodiscard]] std::vector<std::size_t> bits_of(Mask m);

// First k-subset mask in Gosper order, i.e. the k lowest bits.
[[nodiscard]] constexpr Mask first_subset(int k) { return full_mask(static_cast<std::size_t>(k)); }

// Next k-subset of [0, n) after m, or 0 when exhausted (Gosper's hack).
// The empty subset is its own fixed point; callers handle k = 0 themselves.
[[nodiscard]] Mask next_subset(Mask m, std::size_t n);

// Applies a position map to every set bit: bit i of m becomes bit to[i].
[[nodiscard]] Mask remap_bits(Mask m, const std::vector<std::size_t>& to);

}  // namespace positroid
