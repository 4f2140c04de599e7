#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "positroid/maps.hpp"
#include "positroid/matroid.hpp"

namespace positroid {

// lambda(X) = r(X) + r(E \ X) - r(M).
[[nodiscard]] int connectivity_lambda(const Matroid& m, Mask x);

// Least witness (by the label sequence of X) of a k-separation: both sides
// have at least k elements and lambda(X) < k.  Returns (X, complement).
[[nodiscard]] std::optional<std::pair<Mask, Mask>> find_k_separation(const Matroid& m, int k);

[[nodiscard]] bool is_n_connected(const Matroid& m, int n);

// Grounds must be disjoint (OverlappingGrounds).
[[nodiscard]] Matroid direct_sum(const Matroid& a, const Matroid& b);

// Restrictions to the 2-connected components, ordered by smallest label.
[[nodiscard]] std::vector<Matroid> connected_components(const Matroid& m);

struct TwoSumResult {
  Matroid matroid;
  bool nontrivial;  // both sides had more than two elements
};

// 2-sum along e.  Preconditions: both sides have >= 2 elements, grounds meet
// exactly in e (SharedElementNotUnique), and e is neither a loop nor a
// coloop on either side (PreconditionViolation).
[[nodiscard]] TwoSumResult two_sum(const Matroid& m, const Matroid& n, const Label& e);

enum class NodeKind { circuit, cocircuit, three_connected, whole };

struct TreeNode {
  Matroid matroid;
  NodeKind kind;
};

struct TreeEdge {
  std::size_t a;
  std::size_t b;
  Label connector;
};

struct TreeDecomposition {
  std::vector<TreeNode> nodes;
  std::vector<TreeEdge> edges;
};

enum class SplitRule { lex_least, noncrossing_first, lex_greatest };

// Splits at 2-separations until every node is 3-connected, a circuit or a
// cocircuit, then merges adjacent circuit pairs and cocircuit pairs.  The
// node multiset is independent of the split rule; connector labels are fresh
// rationals placed in the cyclic gap at the end of the chosen side.
// Requires a 2-connected input (NotTwoConnected).
[[nodiscard]] TreeDecomposition canonical_tree_decomposition(
    const Matroid& m, SplitRule rule = SplitRule::lex_least);

// 2-sums all nodes back together along the tree edges.
[[nodiscard]] Matroid glue_tree(const TreeDecomposition& td);

// Glues each side of edge e separately; both results keep the connector.
[[nodiscard]] std::pair<Matroid, Matroid> cut_along(const TreeDecomposition& td,
                                                    std::size_t edge_index);

// True iff some canonical tree witnesses positroidness: every node is a
// positroid and every edge cut yields two 2-connected positroids on
// non-crossing grounds.  Agrees with is_positroid on 2-connected inputs.
[[nodiscard]] bool positroid_tree_check(const Matroid& m);

// The first witnessing tree among the split rules (NotTwoConnected,
// NotAPositroid when no rule witnesses).
[[nodiscard]] TreeDecomposition positroid_tree(const Matroid& p);

struct EnvelopeTree {
  TreeDecomposition tree;
  std::vector<EnvelopeClass> classes;  // aligned with tree.nodes
};

// Canonical tree of a 2-connected positroid with each node annotated by its
// envelope class (NotTwoConnected, NotAPositroid, BudgetExceeded).
[[nodiscard]] EnvelopeTree envelope_tree(const Matroid& p,
                                         std::uint64_t budget = kDefaultEnvelopeBudget);

}  // namespace positroid
