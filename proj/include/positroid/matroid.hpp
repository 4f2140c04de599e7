#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "positroid/ground.hpp"

namespace positroid {

class Matroid;

namespace detail {
// Internal factory for results that are valid by construction; skips the
// exchange check in release builds.
Matroid make_unchecked(GroundSet ground, std::vector<Mask> bases);
}  // namespace detail

struct SubsetFamily {
  GroundSet ground;
  std::vector<Mask> members;  // sorted ascending as integers
};

// A matroid given by its ground set and the full list of bases.  Instances
// are immutable; copies share the representation, and the lazily computed
// circuit/cocircuit caches are internally synchronized so concurrent reads
// from several threads are safe.
class Matroid {
 public:
  // Validates the basis axioms: nonempty (EmptyBases), equicardinal
  // (UnequalCardinality), exchange (ExchangeViolation).  Bases are deduped
  // and stored sorted, so equal matroids compare equal bytewise.
  Matroid(GroundSet ground, std::vector<Mask> bases);

  [[nodiscard]] const GroundSet& ground() const;
  [[nodiscard]] std::size_t size() const { return ground().size(); }
  [[nodiscard]] int rank() const;
  [[nodiscard]] const std::vector<Mask>& bases() const;

  [[nodiscard]] bool is_basis(Mask x) const;
  [[nodiscard]] bool is_independent(Mask x) const;
  [[nodiscard]] int rank_of(Mask x) const;
  [[nodiscard]] Mask closure_of(Mask x) const;
  [[nodiscard]] bool is_flat(Mask x) const;

  [[nodiscard]] Mask loops() const;
  [[nodiscard]] Mask coloops() const;

  // Minimal dependent sets, sorted ascending as integers, memoized.
  [[nodiscard]] const std::vector<Mask>& circuits() const;
  // Circuits of the dual, memoized.
  [[nodiscard]] const std::vector<Mask>& cocircuits() const;

  // Circuits that are also hyperplanes (rank r-1 flats).
  [[nodiscard]] std::vector<Mask> circuit_hyperplanes() const;

  bool operator==(const Matroid& other) const;
  bool operator!=(const Matroid& other) const { return !(*this == other); }

 private:
  Matroid() = default;
  friend Matroid detail::make_unchecked(GroundSet ground, std::vector<Mask> bases);

  struct Core;
  std::shared_ptr<const Core> core_;
};

[[nodiscard]] Matroid matroid_from_bases(GroundSet ground, std::vector<Mask> bases);

[[nodiscard]] Matroid dual_of(const Matroid& m);

// Single-element minors; label must be a ground element.
[[nodiscard]] Matroid delete_element(const Matroid& m, const Label& e);
// Contracting a loop deletes it.
[[nodiscard]] Matroid contract_element(const Matroid& m, const Label& e);

// Deletes every element of del and contracts every element of con, one
// element at a time in ascending label order; the masks must be disjoint.
[[nodiscard]] Matroid minor(const Matroid& m, Mask del, Mask con);

// Adds x (a circuit-hyperplane, else NotACircuitHyperplane) to the bases.
[[nodiscard]] Matroid relax_circuit_hyperplane(const Matroid& m, Mask x);

// Witness maps element i of a onto element witness[i] of b.
[[nodiscard]] std::optional<std::vector<std::size_t>> isomorphism_witness(const Matroid& a,
                                                                          const Matroid& b);
[[nodiscard]] bool is_isomorphic(const Matroid& a, const Matroid& b);

// Scans contractions of independent sets, then deletions, for a minor
// isomorphic to target.
[[nodiscard]] bool has_minor_isomorphic(const Matroid& m, const Matroid& target);

// Same bases on a new ground of equal size (order-preserving transport).
[[nodiscard]] Matroid transport(const Matroid& m, GroundSet new_ground);

// Ground-preserving relabelling: element at index i takes the ground slot
// perm[i]; perm must be a permutation of 0..n-1.
[[nodiscard]] Matroid permute_elements(const Matroid& m, const std::vector<std::size_t>& perm);

}  // namespace positroid
