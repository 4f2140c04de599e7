#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "positroid/connectivity.hpp"
#include "positroid/matroid.hpp"

namespace positroid {

// No minor isomorphic to U^2_4.
[[nodiscard]] bool is_binary(const Matroid& m);

// Positroid with no U^2_5 or U^3_5 minor (NotAPositroid otherwise).
[[nodiscard]] bool is_ternary_positroid(const Matroid& p);

struct StructureNode {
  Matroid matroid;
  NodeKind kind;
  bool binary;     // envelope class has one member
  int whirl_rank;  // r when the node is whirl-isomorphic, 0 for binary nodes
};

struct StructureComponent {
  Matroid component;
  TreeDecomposition tree;
  std::vector<StructureNode> nodes;  // aligned with tree.nodes
};

struct TernaryStructure {
  std::vector<StructureComponent> components;
  int whirl_count;  // w
};

// 2-connected components with canonical trees; every node is tagged binary
// or whirl-isomorphic with its rank.  Each whirl node's four-member class is
// verified: enumerated at r <= 3, candidate membership at r >= 4.  Throws
// NotAPositroid / NotTernary.
[[nodiscard]] TernaryStructure ternary_structure(const Matroid& p);

// 4^w (NotAPositroid / NotTernary).
[[nodiscard]] unsigned long long envelope_count(const Matroid& p);

// Exhaustive projective-point search after dualizing to rank <= corank.
// Scale bound: rank <= 3 and n <= 8, additionally rank <= 4 and n <= 7 over
// F2 (OracleScaleExceeded beyond).
[[nodiscard]] bool f2_realizable(const Matroid& m);
[[nodiscard]] bool f3_realizable(const Matroid& m);

struct Classification {
  bool is_positroid;
  bool is_binary;
  bool is_ternary;  // ternary positroid
  int non_binary_3conn_count;
  std::optional<unsigned long long> envelope_size;  // absent beyond budget
};

[[nodiscard]] Classification classify(const Matroid& m,
                                      std::uint64_t budget = kDefaultEnvelopeBudget);

}  // namespace positroid
