#include "positroid/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "positroid/errors.hpp"
#include "positroid/mask.hpp"

namespace positroid {

namespace {

struct UnionFind {
  std::vector<int> parent;

  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }

  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  // Returns false if x and y were already connected.
  bool unite(int x, int y) {
    int rx = find(x);
    int ry = find(y);
    if (rx == ry) return false;
    parent[rx] = ry;
    return true;
  }
};

}  // namespace

Matroid uniform_on(int rank, GroundSet ground) {
  const int n = ground.size();
  if (rank < 0 || rank > n) {
    throw Error("BadRank", "uniform rank " + std::to_string(rank) +
                               " out of range for " + std::to_string(n) +
                               " elements");
  }
  std::vector<Mask> bases;
  if (rank == 0) {
    bases.push_back(0);
  } else {
    for (Mask s = first_subset(rank); s != 0; s = next_subset(s, n)) {
      bases.push_back(s);
    }
  }
  return detail::make_unchecked(std::move(ground), std::move(bases));
}

Matroid uniform(int rank, int n) { return uniform_on(rank, GroundSet::range(n)); }

Matroid graphic_matroid(const Graph& g) {
  std::vector<Label> labels;
  labels.reserve(g.edges.size());
  for (const auto& e : g.edges) {
    if (e.u < 0 || e.u >= g.vertex_count || e.v < 0 || e.v >= g.vertex_count) {
      throw Error("PreconditionViolation", "edge endpoint out of range");
    }
    labels.push_back(e.label);
  }
  {
    auto sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw Error("PreconditionViolation", "duplicate edge label");
    }
  }
  GroundSet ground(labels);

  // edge index -> bit position in the ground set
  const int m = static_cast<int>(g.edges.size());
  std::vector<int> bit_of(m);
  for (int i = 0; i < m; ++i) bit_of[i] = ground.index_of(g.edges[i].label);

  UnionFind components(g.vertex_count);
  int ncomp = g.vertex_count;
  for (const auto& e : g.edges) {
    if (components.unite(e.u, e.v)) --ncomp;
  }
  const int rank = g.vertex_count - ncomp;

  auto is_forest = [&](Mask edge_set) {
    UnionFind uf(g.vertex_count);
    for (int i = 0; i < m; ++i) {
      if (!has_bit(edge_set, i)) continue;
      const auto& e = g.edges[i];
      if (e.u == e.v || !uf.unite(e.u, e.v)) return false;
    }
    return true;
  };

  std::vector<Mask> bases;
  if (rank == 0) {
    bases.push_back(0);
  } else {
    for (Mask s = first_subset(rank); s != 0; s = next_subset(s, m)) {
      if (!is_forest(s)) continue;
      Mask b = 0;
      for (int i : bits_of(s)) b |= Mask{1} << bit_of[i];
      bases.push_back(b);
    }
  }
  return detail::make_unchecked(std::move(ground), std::move(bases));
}

LabeledGraph wheel(int r) {
  if (r < 2) throw Error("RankTooSmall", "wheel needs r >= 2");
  Graph g;
  g.vertex_count = r + 1;  // 0 is the hub, 1..r the rim vertices
  for (int j = 1; j <= r; ++j) {
    g.edges.push_back({0, j, Label(2 * j - 1)});              // spoke
    g.edges.push_back({j, j % r + 1, Label(2 * j)});          // rim
  }
  Matroid m = graphic_matroid(g);
  return {std::move(g), std::move(m)};
}

Matroid whirl(int r) {
  auto w = wheel(r);
  Mask rim = 0;
  for (int j = 1; j <= r; ++j) rim |= w.matroid.ground().mask_of({Label(2 * j)});
  return relax_circuit_hyperplane(w.matroid, rim);
}

LabeledGraph n_graph(int r) {
  if (r < 2) throw Error("RankTooSmall", "n_graph needs r >= 2");
  Graph g;
  g.vertex_count = r + 1;  // 1..r the cycle, 0 the extra bundle vertex
  for (int j = 1; j <= r; ++j) {
    g.edges.push_back({1, 0, Label(2 * j - 1)});              // bundle at v1
    g.edges.push_back({j, j % r + 1, Label(2 * j)});          // cycle
  }
  Matroid m = graphic_matroid(g);
  return {std::move(g), std::move(m)};
}

Matroid n_relaxed(int r) {
  auto n = n_graph(r);
  Mask cyc = 0;
  for (int j = 1; j <= r; ++j) cyc |= n.matroid.ground().mask_of({Label(2 * j)});
  return relax_circuit_hyperplane(n.matroid, cyc);
}

Matroid circuit_matroid(GroundSet ground) {
  if (ground.size() < 1) {
    throw Error("PreconditionViolation", "circuit needs a nonempty ground set");
  }
  const int n = static_cast<int>(ground.size());
  return uniform_on(n - 1, std::move(ground));
}

Matroid cocircuit_matroid(GroundSet ground) {
  if (ground.size() < 1) {
    throw Error("PreconditionViolation", "cocircuit needs a nonempty ground set");
  }
  return uniform_on(1, std::move(ground));
}

}  // namespace positroid
