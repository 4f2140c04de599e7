#include "positroid/connectivity.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "positroid/errors.hpp"

namespace positroid {

int connectivity_lambda(const Matroid& m, Mask x) {
  return m.rank_of(x) + m.rank_of(m.ground().all() & ~x) - m.rank();
}

namespace {

// Lexicographic order on subsets read as ascending index sequences.
bool lex_less(Mask a, Mask b) {
  if (a == b) return false;
  auto va = bits_of(a), vb = bits_of(b);
  return std::lexicographical_compare(va.begin(), va.end(), vb.begin(), vb.end());
}

template <typename Keep>
std::optional<Mask> least_separation_side(const Matroid& m, int k, Keep&& keep) {
  std::size_t n = m.size();
  if (n < 2 * static_cast<std::size_t>(k)) return std::nullopt;
  std::optional<Mask> best;
  // One side of any separation contains the first element, and any set
  // containing it lexicographically precedes every set without it.
  Mask limit = Mask{1} << (n - 1);
  for (Mask rest = 0; rest < limit; ++rest) {
    Mask x = (rest << 1) | 1;
    int sx = popcount(x);
    if (sx < k || static_cast<int>(n) - sx < k) continue;
    if (connectivity_lambda(m, x) >= k) continue;
    if (!keep(x)) continue;
    if (!best || lex_less(x, *best)) best = x;
  }
  return best;
}

}  // namespace

std::optional<std::pair<Mask, Mask>> find_k_separation(const Matroid& m, int k) {
  auto side = least_separation_side(m, k, [](Mask) { return true; });
  if (!side) return std::nullopt;
  return std::make_pair(*side, m.ground().all() & ~*side);
}

bool is_n_connected(const Matroid& m, int n) {
  for (int k = 1; k < n; ++k)
    if (find_k_separation(m, k)) return false;
  return true;
}

Matroid direct_sum(const Matroid& a, const Matroid& b) {
  GroundSet merged = merge_grounds(a.ground(), b.ground(), /*require_disjoint=*/true);
  std::vector<std::size_t> map_a(a.size()), map_b(b.size());
  for (std::size_t i = 0; i < a.size(); ++i) map_a[i] = merged.index_of(a.ground().label(i));
  for (std::size_t i = 0; i < b.size(); ++i) map_b[i] = merged.index_of(b.ground().label(i));
  std::vector<Mask> bases;
  bases.reserve(a.bases().size() * b.bases().size());
  for (Mask ba : a.bases())
    for (Mask bb : b.bases()) bases.push_back(remap_bits(ba, map_a) | remap_bits(bb, map_b));
  return detail::make_unchecked(std::move(merged), std::move(bases));
}

std::vector<Matroid> connected_components(const Matroid& m) {
  std::size_t n = m.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (Mask c : m.circuits()) {
    auto idx = bits_of(c);
    for (std::size_t i = 1; i < idx.size(); ++i) parent[find(idx[0])] = find(idx[i]);
  }
  std::vector<Mask> groups;
  std::vector<long> group_of(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t root = find(i);
    if (group_of[root] < 0) {
      group_of[root] = static_cast<long>(groups.size());
      groups.push_back(0);
    }
    groups[static_cast<std::size_t>(group_of[root])] |= Mask{1} << i;
  }
  std::vector<Matroid> out;
  out.reserve(groups.size());
  for (Mask g : groups) out.push_back(minor(m, m.ground().all() & ~g, 0));
  return out;
}

namespace {

std::vector<Mask> circuit_free_bases(const GroundSet& g, const std::vector<Mask>& circuits,
                                     int rank) {
  std::vector<Mask> bases;
  std::size_t n = g.size();
  if (rank == 0) {
    bases.push_back(0);
    return bases;
  }
  for (Mask b = first_subset(rank); b != 0; b = next_subset(b, n)) {
    bool free = true;
    for (Mask c : circuits) {
      if (subset_of(c, b)) {
        free = false;
        break;
      }
    }
    if (free) bases.push_back(b);
  }
  return bases;
}

}  // namespace

TwoSumResult two_sum(const Matroid& m, const Matroid& n, const Label& e) {
  if (m.size() < 2 || n.size() < 2)
    throw Error("PreconditionViolation", "2-sum sides need at least two elements");
  GroundSet ambient = merge_grounds(m.ground(), n.ground(), /*require_disjoint=*/false);
  if (ambient.size() != m.size() + n.size() - 1 || !m.ground().contains(e) ||
      !n.ground().contains(e))
    throw Error("SharedElementNotUnique", "grounds must meet exactly in the connector");
  std::size_t em = m.ground().index_of(e), en = n.ground().index_of(e);
  if (has_bit(m.loops(), em) || has_bit(m.coloops(), em) || has_bit(n.loops(), en) ||
      has_bit(n.coloops(), en))
    throw Error("PreconditionViolation", "connector must not be a loop or coloop");

  std::vector<Label> labels;
  for (const Label& x : ambient.labels())
    if (x != e) labels.push_back(x);
  GroundSet merged(std::move(labels));

  auto remap = [&](const Matroid& side, Mask s) {
    Mask out = 0;
    for (auto i : bits_of(s)) out |= Mask{1} << merged.index_of(side.ground().label(i));
    return out;
  };

  std::vector<Mask> circuits;
  Mask bit_m = Mask{1} << em, bit_n = Mask{1} << en;
  for (Mask c : m.circuits())
    if (!(c & bit_m)) circuits.push_back(remap(m, c));
  for (Mask c : n.circuits())
    if (!(c & bit_n)) circuits.push_back(remap(n, c));
  for (Mask cm : m.circuits()) {
    if (!(cm & bit_m)) continue;
    for (Mask cn : n.circuits()) {
      if (!(cn & bit_n)) continue;
      circuits.push_back(remap(m, cm & ~bit_m) | remap(n, cn & ~bit_n));
    }
  }
  std::sort(circuits.begin(), circuits.end());
  circuits.erase(std::unique(circuits.begin(), circuits.end()), circuits.end());

  int rank = m.rank() + n.rank() - 1;
  Matroid sum = matroid_from_bases(merged, circuit_free_bases(merged, circuits, rank));
  return TwoSumResult{std::move(sum), m.size() > 2 && n.size() > 2};
}

namespace {

NodeKind classify_node(const Matroid& m) {
  std::size_t n = m.size();
  if (n < 3) return NodeKind::whole;
  if (m.rank() == static_cast<int>(n) - 1 && m.bases().size() == n) return NodeKind::circuit;
  if (m.rank() == 1 && m.bases().size() == n) return NodeKind::cocircuit;
  return NodeKind::three_connected;
}

// Fresh connector in the cyclic gap just past the side's arc (or past its
// maximum when the side is not an interval).
Label connector_label(const GroundSet& g, Mask side) {
  std::size_t n = g.size();
  Mask comp = g.all() & ~side;
  std::size_t after;  // index whose following gap receives the connector
  if (!are_crossing(g, side, comp)) {
    // side is a cyclic interval; find its last index walking forward.
    after = 0;
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t next = (i + 1) % n;
      if (has_bit(side, i) && !has_bit(side, next)) {
        after = i;
        break;
      }
    }
  } else {
    after = bits_of(side).back();
  }
  if (after == n - 1) return g.label(after) + 1;
  return label_between(g.label(after), g.label(after + 1));
}

struct SplitParts {
  Matroid first;
  Matroid second;
  Label connector;
};

SplitParts split_at(const Matroid& m, Mask side, const Label& conn) {
  Mask comp = m.ground().all() & ~side;
  auto part = [&](Mask inside, Mask outside) {
    std::vector<Label> labels;
    for (auto i : bits_of(inside)) labels.push_back(m.ground().label(i));
    labels.push_back(conn);
    std::sort(labels.begin(), labels.end());
    GroundSet g(std::move(labels));
    Mask conn_bit = Mask{1} << g.index_of(conn);
    auto remap = [&](Mask s) {
      Mask out = 0;
      for (auto i : bits_of(s)) out |= Mask{1} << g.index_of(m.ground().label(i));
      return out;
    };
    std::vector<Mask> circuits;
    for (Mask c : m.circuits()) {
      if ((c & outside) == 0)
        circuits.push_back(remap(c));
      else if (c & inside)
        circuits.push_back(remap(c & inside) | conn_bit);
    }
    std::sort(circuits.begin(), circuits.end());
    circuits.erase(std::unique(circuits.begin(), circuits.end()), circuits.end());
    int rank = m.rank_of(inside);
    return matroid_from_bases(g, circuit_free_bases(g, circuits, rank));
  };
  return SplitParts{part(side, comp), part(comp, side), conn};
}

std::optional<Mask> pick_split_side(const Matroid& m, SplitRule rule) {
  switch (rule) {
    case SplitRule::lex_least:
      return least_separation_side(m, 2, [](Mask) { return true; });
    case SplitRule::noncrossing_first: {
      auto nc = least_separation_side(m, 2, [&](Mask x) {
        return !are_crossing(m.ground(), x, m.ground().all() & ~x);
      });
      if (nc) return nc;
      return least_separation_side(m, 2, [](Mask) { return true; });
    }
    case SplitRule::lex_greatest: {
      // Deterministic alternative order for canonicality tests.
      std::optional<Mask> best;
      Mask limit = Mask{1} << (m.size() - 1);
      for (Mask rest = 0; rest < limit; ++rest) {
        Mask x = (rest << 1) | 1;
        int sx = popcount(x);
        if (sx < 2 || static_cast<int>(m.size()) - sx < 2) continue;
        if (connectivity_lambda(m, x) >= 2) continue;
        if (!best || lex_less(*best, x)) best = x;
      }
      return best;
    }
  }
  return std::nullopt;
}

TreeDecomposition decompose(const Matroid& m, SplitRule rule) {
  auto side = pick_split_side(m, rule);
  if (!side) return TreeDecomposition{{TreeNode{m, classify_node(m)}}, {}};
  Label conn = connector_label(m.ground(), *side);
  SplitParts parts = split_at(m, *side, conn);
  TreeDecomposition left = decompose(parts.first, rule);
  TreeDecomposition right = decompose(parts.second, rule);

  TreeDecomposition out = std::move(left);
  std::size_t offset = out.nodes.size();
  for (auto& node : right.nodes) out.nodes.push_back(std::move(node));
  for (auto& edge : right.edges)
    out.edges.push_back(TreeEdge{edge.a + offset, edge.b + offset, edge.connector});

  auto node_with = [&](std::size_t from, std::size_t to, const Label& label) {
    for (std::size_t i = from; i < to; ++i)
      if (out.nodes[i].matroid.ground().contains(label)) return i;
    throw std::logic_error("connector misplaced in tree decomposition");
  };
  out.edges.push_back(
      TreeEdge{node_with(0, offset, conn), node_with(offset, out.nodes.size(), conn), conn});
  return out;
}

void merge_like_neighbors(TreeDecomposition& td) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t ei = 0; ei < td.edges.size(); ++ei) {
      auto [a, b, conn] = td.edges[ei];
      NodeKind ka = td.nodes[a].kind, kb = td.nodes[b].kind;
      bool both_circ = ka == NodeKind::circuit && kb == NodeKind::circuit;
      bool both_cocirc = ka == NodeKind::cocircuit && kb == NodeKind::cocircuit;
      if (!both_circ && !both_cocirc) continue;
      Matroid merged = two_sum(td.nodes[a].matroid, td.nodes[b].matroid, conn).matroid;
      td.nodes[a] = TreeNode{std::move(merged), ka};
      td.edges.erase(td.edges.begin() + static_cast<long>(ei));
      for (auto& edge : td.edges) {
        if (edge.a == b) edge.a = a;
        if (edge.b == b) edge.b = a;
        if (edge.a > b) --edge.a;
        if (edge.b > b) --edge.b;
      }
      td.nodes.erase(td.nodes.begin() + static_cast<long>(b));
      changed = true;
      break;
    }
  }
}

}  // namespace

TreeDecomposition canonical_tree_decomposition(const Matroid& m, SplitRule rule) {
  if (!is_n_connected(m, 2))
    throw Error("NotTwoConnected", "tree decompositions require a 2-connected matroid");
  TreeDecomposition td = decompose(m, rule);
  merge_like_neighbors(td);
  return td;
}

namespace {

Matroid glue_nodes(const TreeDecomposition& td, const std::vector<bool>& take) {
  std::optional<Matroid> acc;
  std::vector<bool> glued(td.nodes.size(), false);
  std::size_t remaining = 0;
  for (std::size_t i = 0; i < td.nodes.size(); ++i)
    if (take[i]) ++remaining;
  for (std::size_t i = 0; i < td.nodes.size(); ++i) {
    if (take[i]) {
      acc = td.nodes[i].matroid;
      glued[i] = true;
      --remaining;
      break;
    }
  }
  while (remaining > 0) {
    bool progressed = false;
    for (const auto& edge : td.edges) {
      if (!take[edge.a] || !take[edge.b]) continue;
      if (glued[edge.a] == glued[edge.b]) continue;
      std::size_t next = glued[edge.a] ? edge.b : edge.a;
      acc = two_sum(*acc, td.nodes[next].matroid, edge.connector).matroid;
      glued[next] = true;
      --remaining;
      progressed = true;
    }
    if (!progressed) throw std::logic_error("tree decomposition is not connected");
  }
  return *acc;
}

}  // namespace

Matroid glue_tree(const TreeDecomposition& td) {
  return glue_nodes(td, std::vector<bool>(td.nodes.size(), true));
}

std::pair<Matroid, Matroid> cut_along(const TreeDecomposition& td, std::size_t edge_index) {
  const TreeEdge& cut = td.edges[edge_index];
  std::vector<bool> side_a(td.nodes.size(), false);
  // Flood from cut.a without using the cut edge.
  std::vector<std::size_t> stack{cut.a};
  side_a[cut.a] = true;
  while (!stack.empty()) {
    std::size_t at = stack.back();
    stack.pop_back();
    for (std::size_t ei = 0; ei < td.edges.size(); ++ei) {
      if (ei == edge_index) continue;
      const auto& edge = td.edges[ei];
      std::size_t to = td.nodes.size();
      if (edge.a == at) to = edge.b;
      if (edge.b == at) to = edge.a;
      if (to < td.nodes.size() && !side_a[to]) {
        side_a[to] = true;
        stack.push_back(to);
      }
    }
  }
  std::vector<bool> side_b(td.nodes.size());
  for (std::size_t i = 0; i < td.nodes.size(); ++i) side_b[i] = !side_a[i];
  return {glue_nodes(td, side_a), glue_nodes(td, side_b)};
}

namespace {

bool tree_witnesses_positroid(const TreeDecomposition& td) {
  for (const auto& node : td.nodes)
    if (!is_positroid(node.matroid)) return false;
  for (std::size_t ei = 0; ei < td.edges.size(); ++ei) {
    auto [first, second] = cut_along(td, ei);
    if (!is_positroid(first) || !is_positroid(second)) return false;
    if (!is_n_connected(first, 2) || !is_n_connected(second, 2)) return false;
    GroundSet ambient = merge_grounds(first.ground(), second.ground(), false);
    Mask ma = 0, mb = 0;
    for (const Label& x : first.ground().labels()) ma |= Mask{1} << ambient.index_of(x);
    for (const Label& x : second.ground().labels()) mb |= Mask{1} << ambient.index_of(x);
    if (are_crossing(ambient, ma, mb)) return false;
  }
  return true;
}

}  // namespace

bool positroid_tree_check(const Matroid& m) {
  if (!is_n_connected(m, 2))
    throw Error("NotTwoConnected", "the tree criterion applies to 2-connected matroids");
  for (SplitRule rule :
       {SplitRule::noncrossing_first, SplitRule::lex_least, SplitRule::lex_greatest}) {
    if (tree_witnesses_positroid(canonical_tree_decomposition(m, rule))) return true;
  }
  return false;
}

TreeDecomposition positroid_tree(const Matroid& p) {
  if (!is_n_connected(p, 2))
    throw Error("NotTwoConnected", "positroid trees require a 2-connected matroid");
  for (SplitRule rule :
       {SplitRule::noncrossing_first, SplitRule::lex_least, SplitRule::lex_greatest}) {
    TreeDecomposition td = canonical_tree_decomposition(p, rule);
    if (tree_witnesses_positroid(td)) return td;
  }
  throw Error("NotAPositroid", "no canonical tree witnesses positroidness");
}

EnvelopeTree envelope_tree(const Matroid& p, std::uint64_t budget) {
  if (!is_positroid(p)) throw Error("NotAPositroid", "envelope trees require a positroid");
  TreeDecomposition td = positroid_tree(p);
  EnvelopeTree out{std::move(td), {}};
  out.classes.reserve(out.tree.nodes.size());
  for (const auto& node : out.tree.nodes)
    out.classes.push_back(envelope_class_of(node.matroid, budget));
  return out;
}

}  // namespace positroid
