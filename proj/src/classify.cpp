#include "positroid/classify.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "positroid/constructions.hpp"
#include "positroid/errors.hpp"
#include "positroid/maps.hpp"
#include "positroid/mask.hpp"

namespace positroid {

bool is_binary(const Matroid& m) {
  return !has_minor_isomorphic(m, uniform(2, 4));
}

bool is_ternary_positroid(const Matroid& p) {
  if (!is_positroid(p)) {
    throw Error("NotAPositroid", "ternary test is defined for positroids");
  }
  return !has_minor_isomorphic(p, uniform(2, 5)) &&
         !has_minor_isomorphic(p, uniform(3, 5));
}

namespace {

std::vector<std::size_t> rotate_by_one(int n) {
  std::vector<std::size_t> shift(n);
  for (int i = 0; i < n; ++i) shift[i] = static_cast<std::size_t>((i + 1) % n);
  return shift;
}

// Checks that node (a positroid isomorphic to the rank-r whirl) carries one
// of the two whirl orderings and that the four constructed class members
// share its necklace; at r <= 3 the class is additionally enumerated.
void verify_whirl_class(const Matroid& node, int r) {
  Matroid p = transport(node, GroundSet::range(2 * r));
  GrassmannNecklace nc = grassmann_necklace_of(p);

  std::vector<Matroid> candidates = {n_graph(r).matroid, n_relaxed(r),
                                     wheel(r).matroid, whirl(r)};
  if (nc != grassmann_necklace_of(candidates[3])) {
    auto shift = rotate_by_one(2 * r);
    for (Matroid& c : candidates) c = permute_elements(c, shift);
    if (nc != grassmann_necklace_of(candidates[3])) {
      throw Error("NotTernary", "whirl node carries an unrecognized ordering");
    }
  }
  for (const Matroid& c : candidates) {
    if (!envelope_membership_check(p, c)) {
      throw Error("NotTernary", "constructed class member has a foreign necklace");
    }
  }
  if (r <= 3) {
    EnvelopeClass ec = envelope_class_of(p);
    if (ec.members.size() != 4) {
      throw Error("NotTernary", "whirl node class has " +
                                    std::to_string(ec.members.size()) +
                                    " members instead of 4");
    }
    for (const Matroid& c : candidates) {
      if (std::find(ec.members.begin(), ec.members.end(), c) == ec.members.end()) {
        throw Error("NotTernary", "constructed class member missing from enumeration");
      }
    }
  }
}

}  // namespace

TernaryStructure ternary_structure(const Matroid& p) {
  if (!is_positroid(p)) {
    throw Error("NotAPositroid", "structure report is defined for positroids");
  }
  TernaryStructure out;
  out.whirl_count = 0;
  for (Matroid& comp : connected_components(p)) {
    StructureComponent sc{comp, positroid_tree(comp), {}};
    for (const TreeNode& node : sc.tree.nodes) {
      StructureNode sn{node.matroid, node.kind, true, 0};
      sn.binary = is_binary(node.matroid);
      if (!sn.binary) {
        const int n = node.matroid.size();
        const int r = node.matroid.rank();
        if (n != 2 * r || !is_isomorphic(node.matroid, whirl(r))) {
          throw Error("NotTernary", "non-binary tree node is not a whirl");
        }
        verify_whirl_class(node.matroid, r);
        sn.whirl_rank = r;
        ++out.whirl_count;
      }
      sc.nodes.push_back(std::move(sn));
    }
    out.components.push_back(std::move(sc));
  }
  return out;
}

unsigned long long envelope_count(const Matroid& p) {
  TernaryStructure s = ternary_structure(p);
  return 1ull << (2 * s.whirl_count);
}

namespace {

using Vec = std::array<int, 4>;

// Rank of the r x r matrix whose columns are cols, over F_q.
bool nonsingular_mod(std::array<Vec, 4> cols, int r, int q) {
  for (int c = 0; c < r; ++c) {
    int pivot = -1;
    for (int i = c; i < r; ++i) {
      if (cols[c][i] % q != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) return false;
    if (pivot != c) {
      for (int j = c; j < r; ++j) std::swap(cols[j][c], cols[j][pivot]);
    }
    const int inv = (q == 2 || cols[c][c] % q == 1) ? 1 : 2;  // 2*2 = 1 mod 3
    for (int i = c + 1; i < r; ++i) {
      const int factor = (cols[c][i] * inv) % q;
      if (factor == 0) continue;
      for (int j = c; j < r; ++j) {
        cols[j][i] = ((cols[j][i] - factor * cols[j][c]) % q + q * q) % q;
      }
    }
  }
  return true;
}

struct RealizabilitySearch {
  const Matroid& m;
  int q;
  int r;
  int n;
  std::vector<Vec> points;       // projective representatives, first nonzero = 1
  std::vector<Vec> first_points; // 0/1 representatives for the first free column
  std::vector<Vec> column;
  std::vector<int> placed;       // ground indices with assigned columns
  std::vector<int> free_order;   // non-frame ground indices, ascending
  int nonloop_assigned = 0;

  bool consistent_with(int e) {
    // every r-subset of placed that contains e must match the basis family
    std::vector<int> others;
    for (int i : placed) {
      if (i != e) others.push_back(i);
    }
    const int k = r - 1;
    const int on = static_cast<int>(others.size());
    if (on < k) return true;
    for (Mask s = first_subset(k); s != 0 || k == 0; s = next_subset(s, on)) {
      std::array<Vec, 4> mat{};
      Mask subset = Mask{1} << e;
      int col = 0;
      mat[col++] = column[static_cast<std::size_t>(e)];
      for (int bi : bits_of(s)) {
        subset |= Mask{1} << others[static_cast<std::size_t>(bi)];
        mat[col++] = column[static_cast<std::size_t>(others[static_cast<std::size_t>(bi)])];
      }
      if (nonsingular_mod(mat, r, q) != m.is_basis(subset)) return false;
      if (k == 0) break;
    }
    return true;
  }

  bool assign(std::size_t depth) {
    if (depth == free_order.size()) return true;
    const int e = free_order[depth];
    if (m.rank_of(Mask{1} << e) == 0) {  // loops take the zero column
      column[static_cast<std::size_t>(e)] = Vec{};
      placed.push_back(e);
      const bool ok = assign(depth + 1);
      placed.pop_back();
      return ok;
    }
    // Row scaling lets the first dependent column keep 0/1 entries.
    for (const Vec& pt : nonloop_assigned == 0 ? first_points : points) {
      column[static_cast<std::size_t>(e)] = pt;
      placed.push_back(e);
      ++nonloop_assigned;
      const bool ok = consistent_with(e) && assign(depth + 1);
      --nonloop_assigned;
      placed.pop_back();
      if (ok) return true;
    }
    return false;
  }
};

bool fq_realizable(const Matroid& input, int q) {
  Matroid m = input;
  if (2 * m.rank() > static_cast<int>(m.size())) m = dual_of(m);
  const int r = m.rank();
  const int n = m.size();
  const bool within = (r <= 3 && n <= 8) || (q == 2 && r <= 4 && n <= 7);
  if (!within) {
    throw Error("OracleScaleExceeded",
                "realizability search supports rank <= 3 with n <= 8" +
                    std::string(q == 2 ? " (rank <= 4 with n <= 7 over F2)" : "") +
                    " after dualizing");
  }
  if (r == 0) return true;

  RealizabilitySearch search{m, q, r, n, {}, {}, {}, {}, {}, 0};
  int card = 1;
  for (int i = 0; i < r; ++i) card *= q;
  for (int code = 1; code < card; ++code) {
    Vec v{};
    int rem = code;
    for (int i = 0; i < r; ++i) {
      v[static_cast<std::size_t>(i)] = rem % q;
      rem /= q;
    }
    int lead = 0;
    while (v[static_cast<std::size_t>(lead)] == 0) ++lead;
    if (v[static_cast<std::size_t>(lead)] == 1) search.points.push_back(v);
    bool zero_one = true;
    for (int i = 0; i < r; ++i) zero_one = zero_one && v[static_cast<std::size_t>(i)] <= 1;
    if (zero_one) search.first_points.push_back(v);
  }

  Mask frame = lex_min_basis(m, CyclicOrder(m.ground(), 0));
  search.column.assign(static_cast<std::size_t>(n), Vec{});
  int unit = 0;
  for (int i : bits_of(frame)) {
    search.column[static_cast<std::size_t>(i)][static_cast<std::size_t>(unit++)] = 1;
    search.placed.push_back(i);
  }
  for (int i = 0; i < n; ++i) {
    if (!has_bit(frame, i)) search.free_order.push_back(i);
  }
  return search.assign(0);
}

}  // namespace

bool f2_realizable(const Matroid& m) { return fq_realizable(m, 2); }
bool f3_realizable(const Matroid& m) { return fq_realizable(m, 3); }

Classification classify(const Matroid& m, std::uint64_t budget) {
  Classification c{};
  c.is_positroid = is_positroid(m);
  c.is_binary = is_binary(m);
  c.non_binary_3conn_count = 0;
  for (const Matroid& comp : connected_components(m)) {
    TreeDecomposition td = canonical_tree_decomposition(comp);
    for (const TreeNode& node : td.nodes) {
      if (!is_binary(node.matroid)) ++c.non_binary_3conn_count;
    }
  }
  c.is_ternary = false;
  if (c.is_positroid) {
    c.is_ternary = is_ternary_positroid(m);
    if (c.is_ternary) {
      c.envelope_size = 1ull << (2 * c.non_binary_3conn_count);
    } else {
      try {
        c.envelope_size = envelope_class_of(m, budget).members.size();
      } catch (const Error& err) {
        if (std::string(err.name()) != "BudgetExceeded") throw;
      }
    }
  }
  return c;
}

}  // namespace positroid
