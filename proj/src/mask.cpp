#include "positroid/mask.hpp"

namespace positroid {

std::vector<std::size_t> bits_of(Mask m) {
  std::vector<std::size_t> out;
  out.reserve(static_cast<std::size_t>(popcount(m)));
  while (m) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
    m &= m - 1;
  }
  return out;
}

Mask next_subset(Mask m, std::size_t n) {
  if (m == 0) return 0;
  Mask lo = m & -m;
  Mask ripple = m + lo;
  if (ripple < m) return 0;
  Mask ones = ((m ^ ripple) >> 2) / lo;
  Mask next = ripple | ones;
  if (next & ~full_mask(n)) return 0;
  return next;
}

Mask remap_bits(Mask m, const std::vector<std::size_t>& to) {
  Mask out = 0;
  while (m) {
    auto i = static_cast<std::size_t>(std::countr_zero(m));
    out |= Mask{1} << to[i];
    m &= m - 1;
  }
  return out;
}

}  // namespace positroid
