#pragma once

#include <compare>
#include <vector>

#include "positroid/matroid.hpp"

namespace positroid {

// The linear order <_a on a ground set obtained by cutting its cyclic order
// just before a: a < next(a) < ... < prev(a).
class CyclicOrder {
 public:
  CyclicOrder(GroundSet ground, std::size_t start_index);
  [[nodiscard]] static CyclicOrder starting_at(const GroundSet& ground, const Label& a);

  [[nodiscard]] const GroundSet& ground() const { return ground_; }
  [[nodiscard]] std::size_t start() const { return start_; }

  // Rank of ground index i in this order, 0 = first.
  [[nodiscard]] std::size_t position(std::size_t i) const;
  // Ground index at position p.
  [[nodiscard]] std::size_t index_at(std::size_t p) const;
  [[nodiscard]] bool less(std::size_t i, std::size_t j) const {
    return position(i) < position(j);
  }

 private:
  GroundSet ground_;
  std::size_t start_;
};

[[nodiscard]] std::strong_ordering shifted_compare(const CyclicOrder& o, const Label& a,
                                                   const Label& b);

// Elements from a to b inclusive, walking forward cyclically.
[[nodiscard]] Mask cyclic_interval(const GroundSet& ground, const Label& a, const Label& b);

// True iff, after discarding shared elements, x and y interleave around the
// circle (some cyclic pattern x..y..x..y).
[[nodiscard]] bool are_crossing(const GroundSet& ground, Mask x, Mask y);

// Parts must be nonempty, disjoint and cover the ground (NotAPartition).
[[nodiscard]] bool is_noncrossing_partition(const GroundSet& ground,
                                            const std::vector<Mask>& parts);

// Cyclic Gale order: the i-th smallest element of s is <= the i-th smallest
// element of t under o, for all i.  Sizes must agree (UnequalCardinality).
[[nodiscard]] bool gale_leq(const CyclicOrder& o, Mask s, Mask t);

// Greedy basis in the shifted order; equals the Gale-minimal basis.
[[nodiscard]] Mask lex_min_basis(const Matroid& m, const CyclicOrder& o);

}  // namespace positroid
