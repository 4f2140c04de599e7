#pragma once

#include <vector>

#include "positroid/matroid.hpp"

namespace positroid {

struct GraphEdge {
  int u;
  int v;  // u == v encodes a loop
  Label label;
};

struct Graph {
  int vertex_count;
  std::vector<GraphEdge> edges;
};

// All rank-subsets of 1..n (BadRank outside 0 <= rank <= n).
[[nodiscard]] Matroid uniform(int rank, int n);
[[nodiscard]] Matroid uniform_on(int rank, GroundSet ground);

// Cycle matroid: bases are the maximal forests; edge labels must be distinct.
[[nodiscard]] Matroid graphic_matroid(const Graph& g);

struct LabeledGraph {
  Graph graph;
  Matroid matroid;
};

// Wheel with r spokes.  Spokes get odd labels 1,3,...,2r-1 and rim edges the
// even labels so that spoke k meets rim edges k-1 and k+1 (mod 2r); the rim
// is {2,4,...,2r}.  Throws RankTooSmall for r < 2.
[[nodiscard]] LabeledGraph wheel(int r);

// Whirl: the wheel with its rim relaxed.
[[nodiscard]] Matroid whirl(int r);

// An r-cycle on the even labels sharing one vertex with an r-fold parallel
// bundle on the odd labels; the shared vertex is the one incident to rim
// edges 2r and 2 of the wheel.
[[nodiscard]] LabeledGraph n_graph(int r);

// n_graph with its cycle relaxed.
[[nodiscard]] Matroid n_relaxed(int r);

// U^{n-1}_n and U^1_n on the given ground (at least one element).
[[nodiscard]] Matroid circuit_matroid(GroundSet ground);
[[nodiscard]] Matroid cocircuit_matroid(GroundSet ground);

}  // namespace positroid
