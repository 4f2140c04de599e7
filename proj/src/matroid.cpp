#include "positroid/matroid.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <string>

#include "positroid/errors.hpp"

namespace positroid {

namespace {

std::string mask_str(const GroundSet& g, Mask m) {
  std::string out = "{";
  bool first = true;
  for (auto i : bits_of(m)) {
    if (!first) out += ",";
    out += label_str(g.label(i));
    first = false;
  }
  return out + "}";
}

// Removes bit position i, shifting higher bits down.
Mask drop_bit(Mask m, std::size_t i) {
  Mask low = m & (full_mask(i));
  Mask high = (m >> (i + 1)) << i;
  return low | high;
}

void sort_unique(std::vector<Mask>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

struct Matroid::Core {
  GroundSet ground;
  int rank = 0;
  std::vector<Mask> bases;

  mutable std::mutex memo_mutex;
  mutable std::shared_ptr<const std::vector<Mask>> circuits;
  mutable std::shared_ptr<const std::vector<Mask>> cocircuits;
};

namespace {

void validate_bases(const GroundSet& ground, const std::vector<Mask>& bases) {
  if (bases.empty()) throw Error("EmptyBases", "a matroid needs at least one basis");
  Mask all = ground.all();
  int k = popcount(bases.front());
  for (Mask b : bases) {
    if (!subset_of(b, all))
      throw Error("LabelNotInGround", "basis uses bits outside the ground set");
    if (popcount(b) != k)
      throw Error("UnequalCardinality", "bases " + mask_str(ground, bases.front()) + " and " +
                                            mask_str(ground, b) + " differ in size");
  }
  for (Mask b1 : bases) {
    for (Mask b2 : bases) {
      Mask only1 = b1 & ~b2;
      for (auto x : bits_of(only1)) {
        Mask stripped = b1 ^ (Mask{1} << x);
        bool fixed = false;
        for (auto y : bits_of(b2 & ~b1)) {
          if (std::binary_search(bases.begin(), bases.end(), stripped | (Mask{1} << y))) {
            fixed = true;
            break;
          }
        }
        if (!fixed)
          throw Error("ExchangeViolation",
                      "no exchange for element " + label_str(ground.label(x)) + " of " +
                          mask_str(ground, b1) + " against " + mask_str(ground, b2));
      }
    }
  }
}

}  // namespace

Matroid::Matroid(GroundSet ground, std::vector<Mask> bases) {
  sort_unique(bases);
  validate_bases(ground, bases);
  auto core = std::make_shared<Core>();
  core->ground = std::move(ground);
  core->rank = popcount(bases.front());
  core->bases = std::move(bases);
  core_ = std::move(core);
}

Matroid detail::make_unchecked(GroundSet ground, std::vector<Mask> bases) {
  sort_unique(bases);
  if (bases.empty()) throw Error("EmptyBases", "internal construction produced no bases");
#ifndef NDEBUG
  validate_bases(ground, bases);
#endif
  Matroid m;
  auto core = std::make_shared<Matroid::Core>();
  core->ground = std::move(ground);
  core->rank = bases.empty() ? 0 : popcount(bases.front());
  core->bases = std::move(bases);
  m.core_ = std::move(core);
  return m;
}

const GroundSet& Matroid::ground() const { return core_->ground; }
int Matroid::rank() const { return core_->rank; }
const std::vector<Mask>& Matroid::bases() const { return core_->bases; }

bool Matroid::is_basis(Mask x) const {
  return std::binary_search(core_->bases.begin(), core_->bases.end(), x);
}

bool Matroid::is_independent(Mask x) const {
  for (Mask b : core_->bases)
    if (subset_of(x, b)) return true;
  return false;
}

int Matroid::rank_of(Mask x) const {
  int best = 0;
  for (Mask b : core_->bases) best = std::max(best, popcount(b & x));
  return best;
}

Mask Matroid::closure_of(Mask x) const {
  int r = rank_of(x);
  Mask out = x;
  Mask rest = core_->ground.all() & ~x;
  for (auto i : bits_of(rest))
    if (rank_of(x | (Mask{1} << i)) == r) out |= Mask{1} << i;
  return out;
}

bool Matroid::is_flat(Mask x) const { return closure_of(x) == x; }

Mask Matroid::loops() const {
  Mask used = 0;
  for (Mask b : core_->bases) used |= b;
  return core_->ground.all() & ~used;
}

Mask Matroid::coloops() const {
  Mask common = core_->ground.all();
  for (Mask b : core_->bases) common &= b;
  return common;
}

const std::vector<Mask>& Matroid::circuits() const {
  std::lock_guard<std::mutex> lock(core_->memo_mutex);
  if (!core_->circuits) {
    auto out = std::make_shared<std::vector<Mask>>();
    std::size_t n = size();
    int max_size = std::min<int>(rank() + 1, static_cast<int>(n));
    for (int s = 1; s <= max_size; ++s) {
      for (Mask m = first_subset(s); m != 0; m = next_subset(m, n)) {
        if (is_independent(m)) continue;
        bool minimal = true;
        for (auto e : bits_of(m)) {
          if (!is_independent(m ^ (Mask{1} << e))) {
            minimal = false;
            break;
          }
        }
        if (minimal) out->push_back(m);
      }
    }
    std::sort(out->begin(), out->end());
    core_->circuits = std::move(out);
  }
  return *core_->circuits;
}

const std::vector<Mask>& Matroid::cocircuits() const {
  {
    std::lock_guard<std::mutex> lock(core_->memo_mutex);
    if (core_->cocircuits) return *core_->cocircuits;
  }
  auto computed = std::make_shared<std::vector<Mask>>(dual_of(*this).circuits());
  std::lock_guard<std::mutex> lock(core_->memo_mutex);
  if (!core_->cocircuits) core_->cocircuits = std::move(computed);
  return *core_->cocircuits;
}

std::vector<Mask> Matroid::circuit_hyperplanes() const {
  std::vector<Mask> out;
  for (Mask c : circuits())
    if (rank_of(c) == rank() - 1 && is_flat(c)) out.push_back(c);
  return out;
}

bool Matroid::operator==(const Matroid& other) const {
  return ground() == other.ground() && bases() == other.bases();
}

Matroid matroid_from_bases(GroundSet ground, std::vector<Mask> bases) {
  return Matroid(std::move(ground), std::move(bases));
}

Matroid dual_of(const Matroid& m) {
  Mask all = m.ground().all();
  std::vector<Mask> dual_bases;
  dual_bases.reserve(m.bases().size());
  for (Mask b : m.bases()) dual_bases.push_back(all & ~b);
  std::sort(dual_bases.begin(), dual_bases.end());
  return detail::make_unchecked(m.ground(), std::move(dual_bases));
}

namespace {

GroundSet ground_without(const GroundSet& g, std::size_t idx) {
  std::vector<Label> labels;
  labels.reserve(g.size() - 1);
  for (std::size_t i = 0; i < g.size(); ++i)
    if (i != idx) labels.push_back(g.label(i));
  return GroundSet(std::move(labels));
}

}  // namespace

Matroid delete_element(const Matroid& m, const Label& e) {
  std::size_t idx = m.ground().index_of(e);
  Mask bit = Mask{1} << idx;
  bool coloop = has_bit(m.coloops(), idx);
  std::vector<Mask> out;
  for (Mask b : m.bases()) {
    if (coloop) {
      out.push_back(drop_bit(b & ~bit, idx));
    } else if (!(b & bit)) {
      out.push_back(drop_bit(b, idx));
    }
  }
  sort_unique(out);
  return detail::make_unchecked(ground_without(m.ground(), idx), std::move(out));
}

Matroid contract_element(const Matroid& m, const Label& e) {
  std::size_t idx = m.ground().index_of(e);
  Mask bit = Mask{1} << idx;
  if (has_bit(m.loops(), idx)) return delete_element(m, e);
  std::vector<Mask> out;
  for (Mask b : m.bases())
    if (b & bit) out.push_back(drop_bit(b, idx));
  sort_unique(out);
  return detail::make_unchecked(ground_without(m.ground(), idx), std::move(out));
}

Matroid minor(const Matroid& m, Mask del, Mask con) {
  if (del & con) throw Error("PreconditionViolation", "deletion and contraction sets overlap");
  std::vector<std::pair<Label, bool>> steps;  // label, contract?
  for (auto i : bits_of(del)) steps.emplace_back(m.ground().label(i), false);
  for (auto i : bits_of(con)) steps.emplace_back(m.ground().label(i), true);
  std::sort(steps.begin(), steps.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  Matroid out = m;
  for (const auto& [label, contract] : steps)
    out = contract ? contract_element(out, label) : delete_element(out, label);
  return out;
}

Matroid relax_circuit_hyperplane(const Matroid& m, Mask x) {
  auto chs = m.circuit_hyperplanes();
  if (std::find(chs.begin(), chs.end(), x) == chs.end())
    throw Error("NotACircuitHyperplane",
                mask_str(m.ground(), x) + " is not a circuit-hyperplane");
  std::vector<Mask> bases = m.bases();
  bases.push_back(x);
  return Matroid(m.ground(), std::move(bases));
}

namespace {

std::vector<int> degree_vector(const Matroid& m) {
  std::vector<int> deg(m.size(), 0);
  for (Mask b : m.bases())
    for (auto i : bits_of(b)) ++deg[i];
  return deg;
}

std::vector<std::vector<int>> pair_degrees(const Matroid& m) {
  std::size_t n = m.size();
  std::vector<std::vector<int>> deg2(n, std::vector<int>(n, 0));
  for (Mask b : m.bases()) {
    auto idx = bits_of(b);
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t j = i + 1; j < idx.size(); ++j) {
        ++deg2[idx[i]][idx[j]];
        ++deg2[idx[j]][idx[i]];
      }
  }
  return deg2;
}

struct IsoSearch {
  const Matroid& a;
  const Matroid& b;
  std::vector<int> deg_a{}, deg_b{};
  std::vector<std::vector<int>> deg2_a{}, deg2_b{};
  std::vector<std::size_t> order{};           // assignment order over a's indices
  std::vector<std::size_t> map_a_to_b{};      // n = unassigned sentinel
  std::vector<bool> used_b{};
  std::size_t n = 0;

  bool run(std::vector<std::size_t>& witness) {
    n = a.size();
    deg_a = degree_vector(a);
    deg_b = degree_vector(b);
    auto sa = deg_a, sb = deg_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
    deg2_a = pair_degrees(a);
    deg2_b = pair_degrees(b);
    {
      // Rarest degree values first shrinks the branching factor.
      std::map<int, int> freq;
      for (int d : deg_a) ++freq[d];
      order.resize(n);
      std::iota(order.begin(), order.end(), std::size_t{0});
      std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        auto kx = std::make_pair(freq[deg_a[x]], deg_a[x]);
        auto ky = std::make_pair(freq[deg_a[y]], deg_a[y]);
        if (kx != ky) return kx < ky;
        return x < y;
      });
    }
    map_a_to_b.assign(n, n);
    used_b.assign(n, false);
    if (!assign(0)) return false;
    witness = map_a_to_b;
    return true;
  }

  bool assign(std::size_t step) {
    if (step == n) return final_check();
    std::size_t x = order[step];
    for (std::size_t y = 0; y < n; ++y) {
      if (used_b[y] || deg_a[x] != deg_b[y]) continue;
      bool ok = true;
      for (std::size_t s = 0; s < step; ++s) {
        std::size_t px = order[s];
        if (deg2_a[x][px] != deg2_b[y][map_a_to_b[px]]) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      map_a_to_b[x] = y;
      used_b[y] = true;
      if (assign(step + 1)) return true;
      used_b[y] = false;
      map_a_to_b[x] = n;
    }
    return false;
  }

  bool final_check() const {
    for (Mask base : a.bases()) {
      Mask image = remap_bits(base, map_a_to_b);
      if (!b.is_basis(image)) return false;
    }
    return true;
  }
};

}  // namespace

std::optional<std::vector<std::size_t>> isomorphism_witness(const Matroid& a, const Matroid& b) {
  if (a.size() != b.size() || a.rank() != b.rank() || a.bases().size() != b.bases().size())
    return std::nullopt;
  IsoSearch search{a, b};
  std::vector<std::size_t> witness;
  if (search.run(witness)) return witness;
  return std::nullopt;
}

bool is_isomorphic(const Matroid& a, const Matroid& b) {
  return isomorphism_witness(a, b).has_value();
}

namespace {

Matroid contract_set(const Matroid& m, Mask con) {
  Matroid out = m;
  // Recompute indices as the ground shrinks.
  for (const Label& label : m.ground().labels_of(con)) out = contract_element(out, label);
  return out;
}

Matroid delete_set(const Matroid& m, Mask del) {
  Matroid out = m;
  for (const Label& label : m.ground().labels_of(del)) out = delete_element(out, label);
  return out;
}

}  // namespace

bool has_minor_isomorphic(const Matroid& m, const Matroid& target) {
  std::size_t n = m.size(), nt = target.size();
  int r = m.rank(), rt = target.rank();
  if (nt > n || rt > r || (static_cast<int>(nt) - rt) > (static_cast<int>(n) - r)) return false;
  int con_size = r - rt;
  int del_size = static_cast<int>(n) - con_size - static_cast<int>(nt);

  auto scan_deletions = [&](const Matroid& contracted) {
    std::size_t rem = contracted.size();
    if (del_size == 0)
      return contracted.rank() == rt && is_isomorphic(contracted, target);
    for (Mask d = first_subset(del_size); d != 0; d = next_subset(d, rem)) {
      Matroid cand = delete_set(contracted, d);
      if (cand.rank() != rt) continue;
      if (cand.bases().size() != target.bases().size()) continue;
      if (is_isomorphic(cand, target)) return true;
    }
    return false;
  };

  if (con_size == 0) return scan_deletions(m);
  for (Mask c = first_subset(con_size); c != 0; c = next_subset(c, n)) {
    if (!m.is_independent(c)) continue;
    if (scan_deletions(contract_set(m, c))) return true;
  }
  return false;
}

Matroid transport(const Matroid& m, GroundSet new_ground) {
  if (new_ground.size() != m.size())
    throw Error("PreconditionViolation", "transport requires grounds of equal size");
  return detail::make_unchecked(std::move(new_ground), m.bases());
}

Matroid permute_elements(const Matroid& m, const std::vector<std::size_t>& perm) {
  if (perm.size() != m.size())
    throw Error("PreconditionViolation", "permutation size must match ground size");
  std::vector<Mask> out;
  out.reserve(m.bases().size());
  for (Mask b : m.bases()) out.push_back(remap_bits(b, perm));
  std::sort(out.begin(), out.end());
  return detail::make_unchecked(m.ground(), std::move(out));
}

}  // namespace positroid
