#include "support/oracles.hpp"

#include <algorithm>
#include <numeric>

#include "positroid/mask.hpp"

namespace oracle {

using positroid::bits_of;
using positroid::full_mask;
using positroid::has_bit;
using positroid::popcount;
using positroid::subset_of;

bool independent(const Matroid& m, Mask x) {
  for (Mask b : m.bases()) {
    if (subset_of(x, b)) return true;
  }
  return false;
}

int rank(const Matroid& m, Mask x) {
  int best = 0;
  for (Mask s = x;; s = (s - 1) & x) {
    if (independent(m, s)) best = std::max(best, popcount(s));
    if (s == 0) break;
  }
  return best;
}

Mask closure(const Matroid& m, Mask x) {
  const int rx = rank(m, x);
  Mask out = x;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (!has_bit(x, i) && rank(m, x | (Mask{1} << i)) == rx) out |= Mask{1} << i;
  }
  return out;
}

std::vector<Mask> circuits(const Matroid& m) {
  std::vector<Mask> out;
  const Mask all = full_mask(m.size());
  for (Mask s = 1; s <= all; ++s) {
    if (independent(m, s)) continue;
    bool minimal = true;
    for (std::size_t i : bits_of(s)) {
      if (!independent(m, s & ~(Mask{1} << i))) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool crossing(const GroundSet& g, Mask x, Mask y) {
  const Mask xo = x & ~y;
  const Mask yo = y & ~x;
  const std::size_t n = g.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c)
        for (std::size_t d = c + 1; d < n; ++d) {
          const bool xyxy = has_bit(xo, a) && has_bit(yo, b) && has_bit(xo, c) && has_bit(yo, d);
          const bool yxyx = has_bit(yo, a) && has_bit(xo, b) && has_bit(yo, c) && has_bit(xo, d);
          if (xyxy || yxyx) return true;
        }
  return false;
}

std::int64_t spanning_tree_count(const Graph& g) {
  const int n = g.vertex_count;
  if (n <= 1) return 1;
  std::vector<std::vector<std::int64_t>> lap(
      static_cast<std::size_t>(n), std::vector<std::int64_t>(static_cast<std::size_t>(n), 0));
  for (const auto& e : g.edges) {
    if (e.u == e.v) continue;
    lap[e.u][e.u] += 1;
    lap[e.v][e.v] += 1;
    lap[e.u][e.v] -= 1;
    lap[e.v][e.u] -= 1;
  }
  // Bareiss elimination on the first minor
  const int k = n - 1;
  std::vector<std::vector<std::int64_t>> a(static_cast<std::size_t>(k),
                                           std::vector<std::int64_t>(static_cast<std::size_t>(k)));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) a[i][j] = lap[i + 1][j + 1];
  std::int64_t prev = 1;
  std::int64_t sign = 1;
  for (int c = 0; c < k; ++c) {
    int pivot = -1;
    for (int i = c; i < k; ++i) {
      if (a[i][c] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) return 0;
    if (pivot != c) {
      std::swap(a[pivot], a[c]);
      sign = -sign;
    }
    for (int i = c + 1; i < k; ++i)
      for (int j = c + 1; j < k; ++j)
        a[i][j] = (a[i][j] * a[c][c] - a[i][c] * a[c][j]) / prev;
    prev = a[c][c];
  }
  return sign * a[k - 1][k - 1];
}

Mask lex_min_basis(const Matroid& m, std::size_t start) {
  const std::size_t n = m.size();
  auto key = [&](Mask b) {
    std::vector<std::size_t> pos;
    for (std::size_t i : bits_of(b)) pos.push_back((i + n - start) % n);
    std::sort(pos.begin(), pos.end());
    return pos;
  };
  Mask best = m.bases().front();
  auto best_key = key(best);
  for (Mask b : m.bases()) {
    auto k = key(b);
    if (k < best_key) {
      best = b;
      best_key = std::move(k);
    }
  }
  return best;
}

namespace {

bool families_isomorphic(std::size_t n, std::vector<Mask> fam_a, std::vector<Mask> fam_b) {
  if (fam_a.size() != fam_b.size()) return false;
  std::sort(fam_b.begin(), fam_b.end());
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<Mask> mapped;
    mapped.reserve(fam_a.size());
    for (Mask b : fam_a) mapped.push_back(positroid::remap_bits(b, perm));
    std::sort(mapped.begin(), mapped.end());
    if (mapped == fam_b) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace

bool has_minor(const Matroid& m, const Matroid& target) {
  const std::size_t n = m.size();
  const std::size_t tn = target.size();
  if (tn > n) return false;
  const Mask all = full_mask(n);
  for (Mask con = 0; con <= all; ++con) {
    const int rc = rank(m, con);
    for (Mask del = 0; del <= all; ++del) {
      if ((con & del) != 0) continue;
      const Mask keep = all & ~con & ~del;
      if (static_cast<std::size_t>(popcount(keep)) != tn) continue;
      const int minor_rank = rank(m, all & ~del) - rc;
      if (minor_rank != target.rank()) continue;
      // bases of (m / con) \ del via the contracted rank function
      std::vector<Mask> bases;
      const auto keep_bits = bits_of(keep);
      for (Mask s = keep;; s = (s - 1) & keep) {
        if (popcount(s) == minor_rank && rank(m, s | con) == minor_rank + rc) {
          Mask packed = 0;
          for (std::size_t i = 0; i < keep_bits.size(); ++i)
            if (has_bit(s, keep_bits[i])) packed |= Mask{1} << i;
          bases.push_back(packed);
        }
        if (s == 0) break;
      }
      if (bases.empty()) continue;
      if (families_isomorphic(tn, bases, target.bases())) return true;
    }
  }
  return false;
}

}  // namespace oracle
