#include "positroid/cyclic.hpp"

#include "positroid/errors.hpp"

namespace positroid {

CyclicOrder::CyclicOrder(GroundSet ground, std::size_t start_index)
    : ground_(std::move(ground)), start_(start_index) {
  if (start_ >= ground_.size() && !(start_ == 0 && ground_.empty()))
    throw Error("PreconditionViolation", "start index outside ground");
}

CyclicOrder CyclicOrder::starting_at(const GroundSet& ground, const Label& a) {
  return CyclicOrder(ground, ground.index_of(a));
}

std::size_t CyclicOrder::position(std::size_t i) const {
  std::size_t n = ground_.size();
  return (i + n - start_) % n;
}

std::size_t CyclicOrder::index_at(std::size_t p) const {
  return (start_ + p) % ground_.size();
}

std::strong_ordering shifted_compare(const CyclicOrder& o, const Label& a, const Label& b) {
  return o.position(o.ground().index_of(a)) <=> o.position(o.ground().index_of(b));
}

Mask cyclic_interval(const GroundSet& ground, const Label& a, const Label& b) {
  std::size_t i = ground.index_of(a), j = ground.index_of(b);
  std::size_t n = ground.size();
  Mask out = 0;
  for (std::size_t k = i;; k = (k + 1) % n) {
    out |= Mask{1} << k;
    if (k == j) break;
  }
  return out;
}

bool are_crossing(const GroundSet& ground, Mask x, Mask y) {
  Mask shared = x & y;
  Mask a = x & ~shared, b = y & ~shared;
  if (!a || !b) return false;
  // Walk the circle once and count circular blocks of a-marks and b-marks;
  // the pattern a..b..a..b exists iff there are at least four blocks.
  int changes = 0;
  int first_mark = -1, prev_mark = -1;
  for (std::size_t i = 0; i < ground.size(); ++i) {
    int mark;
    if (has_bit(a, i))
      mark = 0;
    else if (has_bit(b, i))
      mark = 1;
    else
      continue;
    if (first_mark < 0) first_mark = mark;
    if (prev_mark >= 0 && mark != prev_mark) ++changes;
    prev_mark = mark;
  }
  if (prev_mark != first_mark) ++changes;
  return changes >= 4;
}

bool is_noncrossing_partition(const GroundSet& ground, const std::vector<Mask>& parts) {
  Mask seen = 0;
  for (Mask p : parts) {
    if (p == 0) throw Error("NotAPartition", "empty part");
    if (p & seen) throw Error("NotAPartition", "parts overlap");
    seen |= p;
  }
  if (seen != ground.all()) throw Error("NotAPartition", "parts do not cover the ground set");
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = i + 1; j < parts.size(); ++j)
      if (are_crossing(ground, parts[i], parts[j])) return false;
  return true;
}

bool gale_leq(const CyclicOrder& o, Mask s, Mask t) {
  if (popcount(s) != popcount(t))
    throw Error("UnequalCardinality", "Gale comparison of sets of different size");
  std::size_t n = o.ground().size();
  std::vector<std::size_t> ps, pt;
  for (std::size_t p = 0; p < n; ++p) {
    std::size_t idx = o.index_at(p);
    if (has_bit(s, idx)) ps.push_back(p);
    if (has_bit(t, idx)) pt.push_back(p);
  }
  for (std::size_t i = 0; i < ps.size(); ++i)
    if (ps[i] > pt[i]) return false;
  return true;
}

Mask lex_min_basis(const Matroid& m, const CyclicOrder& o) {
  Mask cur = 0;
  std::size_t n = m.size();
  for (std::size_t p = 0; p < n; ++p) {
    Mask bit = Mask{1} << o.index_at(p);
    if (m.is_independent(cur | bit)) cur |= bit;
    if (popcount(cur) == m.rank()) break;
  }
  return cur;
}

}  // namespace positroid
