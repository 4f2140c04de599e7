#pragma once

#include <cstdint>
#include <vector>

#include "positroid/cyclic.hpp"
#include "positroid/matroid.hpp"

namespace positroid {

// A permutation of the ground set in which every fixed point carries a color:
// +1 for a loop, -1 for a coloop.
class DecoratedPermutation {
 public:
  // image[i] = ground index of the image of element i; color[i] is 0 for
  // non-fixed elements and +1/-1 on fixed points.
  DecoratedPermutation(GroundSet ground, std::vector<std::size_t> image,
                       std::vector<int> color);

  [[nodiscard]] const GroundSet& ground() const { return ground_; }
  [[nodiscard]] std::size_t size() const { return ground_.size(); }
  [[nodiscard]] const std::vector<std::size_t>& image() const { return image_; }
  [[nodiscard]] std::size_t image_of(std::size_t i) const { return image_[i]; }
  [[nodiscard]] Label apply(const Label& x) const;
  [[nodiscard]] bool is_fixed(std::size_t i) const { return image_[i] == i; }
  [[nodiscard]] int color(std::size_t i) const { return color_[i]; }

  bool operator==(const DecoratedPermutation& other) const;
  bool operator!=(const DecoratedPermutation& other) const { return !(*this == other); }

 private:
  GroundSet ground_;
  std::vector<std::size_t> image_;
  std::vector<int> color_;
};

// One lex-minimal basis per cyclic starting point; entry j starts at the
// ground element with index j.  The constructor checks the successor axiom
// (InconsistentNecklace).
class GrassmannNecklace {
 public:
  GrassmannNecklace(GroundSet ground, std::vector<Mask> entries);

  [[nodiscard]] const GroundSet& ground() const { return ground_; }
  [[nodiscard]] std::size_t size() const { return ground_.size(); }
  [[nodiscard]] const std::vector<Mask>& entries() const { return entries_; }
  [[nodiscard]] Mask entry(std::size_t j) const { return entries_[j]; }
  [[nodiscard]] int cardinality() const;

  bool operator==(const GrassmannNecklace& other) const;
  bool operator!=(const GrassmannNecklace& other) const { return !(*this == other); }

 private:
  GroundSet ground_;
  std::vector<Mask> entries_;
};

struct EnvelopeClass {
  Matroid envelope;
  // All matroids with the envelope's necklace, ascending by basis count and
  // then lexicographically by basis list; contains the envelope itself.
  std::vector<Matroid> members;
};

[[nodiscard]] DecoratedPermutation decorated_permutation_of(const Matroid& m);
// Inverse with the fixed-point colors flipped, matching dualization.
[[nodiscard]] DecoratedPermutation inverse_of(const DecoratedPermutation& p);

[[nodiscard]] GrassmannNecklace grassmann_necklace_of(const Matroid& m);

[[nodiscard]] DecoratedPermutation necklace_to_permutation(const GrassmannNecklace& nk);
// Throws NotARealizablePermutationRank when the entries induced by p do not
// have exactly rank elements.
[[nodiscard]] GrassmannNecklace permutation_to_necklace(const DecoratedPermutation& p, int rank);

[[nodiscard]] DecoratedPermutation disjoint_union_perm(const DecoratedPermutation& a,
                                                       const DecoratedPermutation& b);

// Permutation of a 2-sum along connector e; grounds must meet exactly in e
// (SharedElementNotUnique), be non-crossing in the merged order, and e must
// be non-fixed on both sides (FixedConnector).
[[nodiscard]] DecoratedPermutation two_sum_perm(const DecoratedPermutation& pm,
                                                const DecoratedPermutation& pn, const Label& e);

// The unique positroid with the given necklace: all rank-subsets that are
// Gale-above every entry.
[[nodiscard]] Matroid positroid_from_necklace(const GrassmannNecklace& nk);

// Tightest positroid weakly above m (same necklace).
[[nodiscard]] Matroid envelope_positroid(const Matroid& m);

// Evaluates both the crossing criterion (no disjoint circuit/cocircuit pair
// crosses) and the envelope fixed-point criterion; they must agree.
[[nodiscard]] bool is_positroid(const Matroid& m);

// True iff bases(n) is contained in bases(m); grounds and ranks must agree
// (GroundMismatch / RankMismatch).
[[nodiscard]] bool weak_map_leq(const Matroid& m, const Matroid& n);

inline constexpr std::uint64_t kDefaultEnvelopeBudget = std::uint64_t{1} << 20;

// Enumerates every matroid whose envelope is p (NotAPositroid when p is not
// a positroid).  The DFS over optional bases counts its visited nodes
// against the budget and throws BudgetExceeded beyond it.
[[nodiscard]] EnvelopeClass envelope_class_of(const Matroid& p,
                                              std::uint64_t budget = kDefaultEnvelopeBudget);

// True iff candidate has the same Grassmann necklace as p (same ground
// required: GroundMismatch).
[[nodiscard]] bool envelope_membership_check(const Matroid& p, const Matroid& candidate);

}  // namespace positroid
