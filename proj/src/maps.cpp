#include "positroid/maps.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "positroid/errors.hpp"

namespace positroid {

DecoratedPermutation::DecoratedPermutation(GroundSet ground, std::vector<std::size_t> image,
                                           std::vector<int> color)
    : ground_(std::move(ground)), image_(std::move(image)), color_(std::move(color)) {
  std::size_t n = ground_.size();
  if (image_.size() != n || color_.size() != n)
    throw Error("PreconditionViolation", "permutation data sized differently from ground");
  std::vector<bool> hit(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (image_[i] >= n || hit[image_[i]])
      throw Error("PreconditionViolation", "image is not a permutation");
    hit[image_[i]] = true;
    bool fixed = image_[i] == i;
    if (fixed && color_[i] != 1 && color_[i] != -1)
      throw Error("PreconditionViolation", "fixed point without a +1/-1 color");
    if (!fixed && color_[i] != 0)
      throw Error("PreconditionViolation", "color on a non-fixed element");
  }
}

Label DecoratedPermutation::apply(const Label& x) const {
  return ground_.label(image_[ground_.index_of(x)]);
}

bool DecoratedPermutation::operator==(const DecoratedPermutation& other) const {
  return ground_ == other.ground_ && image_ == other.image_ && color_ == other.color_;
}

GrassmannNecklace::GrassmannNecklace(GroundSet ground, std::vector<Mask> entries)
    : ground_(std::move(ground)), entries_(std::move(entries)) {
  std::size_t n = ground_.size();
  if (entries_.size() != n)
    throw Error("InconsistentNecklace", "expected one entry per ground element");
  if (n == 0) return;
  int k = popcount(entries_[0]);
  for (Mask e : entries_) {
    if (!subset_of(e, ground_.all()))
      throw Error("InconsistentNecklace", "entry uses bits outside the ground set");
    if (popcount(e) != k) throw Error("InconsistentNecklace", "entries of unequal size");
  }
  for (std::size_t j = 0; j < n; ++j) {
    Mask cur = entries_[j], next = entries_[(j + 1) % n];
    Mask bit = Mask{1} << j;
    if (!(cur & bit)) {
      if (next != cur)
        throw Error("InconsistentNecklace",
                    "entry " + std::to_string(j) + " changes without containing its start");
    } else {
      Mask kept = cur & ~bit;
      if (!subset_of(kept, next) || popcount(next & ~kept) != 1)
        throw Error("InconsistentNecklace",
                    "entry " + std::to_string(j + 1) + " is not a single swap of its predecessor");
    }
  }
}

int GrassmannNecklace::cardinality() const {
  return entries_.empty() ? 0 : popcount(entries_[0]);
}

bool GrassmannNecklace::operator==(const GrassmannNecklace& other) const {
  return ground_ == other.ground_ && entries_ == other.entries_;
}

DecoratedPermutation decorated_permutation_of(const Matroid& m) {
  std::size_t n = m.size();
  Mask loops = m.loops(), coloops = m.coloops();
  std::vector<std::size_t> image(n);
  std::vector<int> color(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    Mask bit = Mask{1} << j;
    if (loops & bit) {
      image[j] = j;
      color[j] = 1;
      continue;
    }
    if (coloops & bit) {
      image[j] = j;
      color[j] = -1;
      continue;
    }
    // First i_k (scanning forward from i_{j+1}) with i_j in cl([i_{j+1}, i_k]).
    Mask interval = 0;
    std::size_t k = j;
    bool found = false;
    for (std::size_t t = 1; t < n; ++t) {
      k = (j + 1 + t - 1) % n;
      interval |= Mask{1} << k;
      if (m.rank_of(interval | bit) == m.rank_of(interval)) {
        image[j] = k;
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("decorated permutation scan failed on a non-coloop");
  }
  return DecoratedPermutation(m.ground(), std::move(image), std::move(color));
}

DecoratedPermutation inverse_of(const DecoratedPermutation& p) {
  std::size_t n = p.size();
  std::vector<std::size_t> image(n);
  std::vector<int> color(n, 0);
  for (std::size_t i = 0; i < n; ++i) image[p.image_of(i)] = i;
  for (std::size_t i = 0; i < n; ++i)
    if (p.is_fixed(i)) color[i] = -p.color(i);
  return DecoratedPermutation(p.ground(), std::move(image), std::move(color));
}

GrassmannNecklace grassmann_necklace_of(const Matroid& m) {
  std::size_t n = m.size();
  std::vector<Mask> entries;
  entries.reserve(n);
  for (std::size_t j = 0; j < n; ++j)
    entries.push_back(lex_min_basis(m, CyclicOrder(m.ground(), j)));
  return GrassmannNecklace(m.ground(), std::move(entries));
}

DecoratedPermutation necklace_to_permutation(const GrassmannNecklace& nk) {
  std::size_t n = nk.size();
  std::vector<std::size_t> image(n);
  std::vector<int> color(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    Mask cur = nk.entry(j), next = nk.entry((j + 1) % n);
    Mask bit = Mask{1} << j;
    if (!(cur & bit)) {
      image[j] = j;
      color[j] = 1;
    } else if (next == cur) {
      image[j] = j;
      color[j] = -1;
    } else {
      Mask added = next & ~(cur & ~bit);
      image[j] = bits_of(added).front();
    }
  }
  return DecoratedPermutation(nk.ground(), std::move(image), std::move(color));
}

GrassmannNecklace permutation_to_necklace(const DecoratedPermutation& p, int rank) {
  std::size_t n = p.size();
  std::vector<std::size_t> inverse(n);
  for (std::size_t i = 0; i < n; ++i) inverse[p.image_of(i)] = i;
  std::vector<Mask> entries;
  entries.reserve(n);
  for (std::size_t start = 0; start < n; ++start) {
    CyclicOrder o(p.ground(), start);
    Mask entry = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (p.is_fixed(j)) {
        if (p.color(j) == -1) entry |= Mask{1} << j;  // coloops sit in every entry
      } else if (o.position(j) < o.position(inverse[j])) {
        entry |= Mask{1} << j;
      }
    }
    if (popcount(entry) != rank)
      throw Error("NotARealizablePermutationRank",
                  "permutation induces entries of size " + std::to_string(popcount(entry)) +
                      ", not " + std::to_string(rank));
    entries.push_back(entry);
  }
  return GrassmannNecklace(p.ground(), std::move(entries));
}

DecoratedPermutation disjoint_union_perm(const DecoratedPermutation& a,
                                         const DecoratedPermutation& b) {
  GroundSet merged = merge_grounds(a.ground(), b.ground(), /*require_disjoint=*/true);
  std::size_t n = merged.size();
  std::vector<std::size_t> image(n);
  std::vector<int> color(n, 0);
  auto copy_part = [&](const DecoratedPermutation& p) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      std::size_t from = merged.index_of(p.ground().label(i));
      std::size_t to = merged.index_of(p.ground().label(p.image_of(i)));
      image[from] = to;
      if (p.is_fixed(i)) color[from] = p.color(i);
    }
  };
  copy_part(a);
  copy_part(b);
  return DecoratedPermutation(std::move(merged), std::move(image), std::move(color));
}

DecoratedPermutation two_sum_perm(const DecoratedPermutation& pm, const DecoratedPermutation& pn,
                                  const Label& e) {
  GroundSet ambient = merge_grounds(pm.ground(), pn.ground(), /*require_disjoint=*/false);
  if (ambient.size() != pm.size() + pn.size() - 1 || !pm.ground().contains(e) ||
      !pn.ground().contains(e))
    throw Error("SharedElementNotUnique", "grounds must meet exactly in the connector");
  if (pm.is_fixed(pm.ground().index_of(e)) || pn.is_fixed(pn.ground().index_of(e)))
    throw Error("FixedConnector", "connector " + label_str(e) + " is a loop or coloop");
  Mask mask_m = 0, mask_n = 0;
  for (const Label& x : pm.ground().labels()) mask_m |= Mask{1} << ambient.index_of(x);
  for (const Label& x : pn.ground().labels()) mask_n |= Mask{1} << ambient.index_of(x);
  if (are_crossing(ambient, mask_m, mask_n))
    throw Error("PreconditionViolation", "grounds of a 2-sum must be non-crossing");

  std::vector<Label> labels;
  for (const Label& x : ambient.labels())
    if (x != e) labels.push_back(x);
  GroundSet merged(std::move(labels));

  std::size_t n = merged.size();
  std::vector<std::size_t> image(n);
  std::vector<int> color(n, 0);
  auto splice = [&](const DecoratedPermutation& own, const DecoratedPermutation& other) {
    for (std::size_t i = 0; i < own.size(); ++i) {
      Label x = own.ground().label(i);
      if (x == e) continue;
      Label y = own.ground().label(own.image_of(i));
      if (y == e) y = other.apply(e);
      std::size_t from = merged.index_of(x);
      image[from] = merged.index_of(y);
      if (own.is_fixed(i)) color[from] = own.color(i);
    }
  };
  splice(pm, pn);
  splice(pn, pm);
  return DecoratedPermutation(std::move(merged), std::move(image), std::move(color));
}

Matroid positroid_from_necklace(const GrassmannNecklace& nk) {
  const GroundSet& g = nk.ground();
  std::size_t n = g.size();
  int k = nk.cardinality();
  std::vector<CyclicOrder> orders;
  orders.reserve(n);
  for (std::size_t j = 0; j < n; ++j) orders.emplace_back(g, j);
  std::vector<Mask> bases;
  if (k == 0) {
    bases.push_back(0);
    return detail::make_unchecked(g, std::move(bases));
  }
  for (Mask b = first_subset(k); b != 0; b = next_subset(b, n)) {
    bool ok = true;
    for (std::size_t j = 0; j < n; ++j) {
      if (!gale_leq(orders[j], nk.entry(j), b)) {
        ok = false;
        break;
      }
    }
    if (ok) bases.push_back(b);
  }
  return detail::make_unchecked(g, std::move(bases));
}

Matroid envelope_positroid(const Matroid& m) {
  return positroid_from_necklace(grassmann_necklace_of(m));
}

namespace {

bool is_positroid_by_crossing(const Matroid& m) {
  const auto& circuits = m.circuits();
  const auto& cocircuits = m.cocircuits();
  for (Mask c : circuits)
    for (Mask d : cocircuits) {
      if (c & d) continue;
      if (are_crossing(m.ground(), c, d)) return false;
    }
  return true;
}

}  // namespace

bool is_positroid(const Matroid& m) {
  bool crossing_route = is_positroid_by_crossing(m);
  bool envelope_route = envelope_positroid(m) == m;
  if (crossing_route != envelope_route)
    throw std::logic_error("positroid criteria disagree: crossing=" +
                           std::to_string(crossing_route));
  return crossing_route;
}

bool weak_map_leq(const Matroid& m, const Matroid& n) {
  if (m.ground() != n.ground())
    throw Error("GroundMismatch", "weak map comparison needs equal grounds");
  if (m.rank() != n.rank()) throw Error("RankMismatch", "weak map comparison needs equal ranks");
  return std::includes(m.bases().begin(), m.bases().end(), n.bases().begin(), n.bases().end());
}

namespace {

struct ClassSearch {
  const Matroid& p;
  std::vector<Mask> mandatory;  // necklace entries
  std::vector<Mask> optional;   // remaining bases of p
  std::uint64_t budget;
  std::uint64_t visited = 0;

  std::vector<Mask> chosen{};
  std::unordered_set<Mask> excluded{};
  std::vector<std::vector<Mask>> results{};

  void run() {
    chosen = mandatory;
    std::sort(chosen.begin(), chosen.end());
    descend(0);
  }

  void tick() {
    if (++visited > budget)
      throw Error("BudgetExceeded",
                  "envelope class enumeration exceeded " + std::to_string(budget) + " nodes");
  }

  // True when some basis b1 of the current family has an exchange move that
  // can no longer be completed by any unexcluded basis of p.
  bool dead_pair(Mask b1, Mask b2) const {
    Mask only1 = b1 & ~b2;
    for (auto x : bits_of(only1)) {
      Mask stripped = b1 ^ (Mask{1} << x);
      bool fixable = false;
      for (auto y : bits_of(b2 & ~b1)) {
        Mask target = stripped | (Mask{1} << y);
        if (!p.is_basis(target)) continue;
        if (!excluded.count(target)) {
          fixable = true;
          break;
        }
      }
      if (!fixable) return true;
    }
    return false;
  }

  bool include_is_dead(Mask b) const {
    for (Mask s : chosen)
      if (dead_pair(b, s) || dead_pair(s, b)) return true;
    return false;
  }

  void descend(std::size_t depth) {
    tick();
    if (depth == optional.size()) {
      if (exchange_valid()) results.push_back(sorted_family());
      return;
    }
    Mask b = optional[depth];
    if (!include_is_dead(b)) {
      chosen.push_back(b);
      descend(depth + 1);
      chosen.pop_back();
    }
    excluded.insert(b);
    // Excluding b can only kill pairs whose last fix target was b itself,
    // i.e. pairs led by a basis one swap away from b.
    bool viable = true;
    for (Mask b1 : chosen) {
      if (popcount(b1 ^ b) != 2) continue;
      for (Mask b2 : chosen)
        if (dead_pair(b1, b2)) {
          viable = false;
          break;
        }
      if (!viable) break;
    }
    if (viable) descend(depth + 1);
    excluded.erase(b);
  }

  [[nodiscard]] std::vector<Mask> sorted_family() const {
    std::vector<Mask> fam = chosen;
    std::sort(fam.begin(), fam.end());
    fam.erase(std::unique(fam.begin(), fam.end()), fam.end());
    return fam;
  }

  [[nodiscard]] bool exchange_valid() const {
    auto fam = sorted_family();
    for (Mask b1 : fam)
      for (Mask b2 : fam) {
        Mask only1 = b1 & ~b2;
        for (auto x : bits_of(only1)) {
          Mask stripped = b1 ^ (Mask{1} << x);
          bool fixed = false;
          for (auto y : bits_of(b2 & ~b1)) {
            if (std::binary_search(fam.begin(), fam.end(), stripped | (Mask{1} << y))) {
              fixed = true;
              break;
            }
          }
          if (!fixed) return false;
        }
      }
    return true;
  }
};

}  // namespace

EnvelopeClass envelope_class_of(const Matroid& p, std::uint64_t budget) {
  if (!is_positroid(p)) throw Error("NotAPositroid", "envelope classes exist only for positroids");
  GrassmannNecklace nk = grassmann_necklace_of(p);
  std::vector<Mask> mandatory(nk.entries().begin(), nk.entries().end());
  std::sort(mandatory.begin(), mandatory.end());
  mandatory.erase(std::unique(mandatory.begin(), mandatory.end()), mandatory.end());
  std::vector<Mask> optional;
  for (Mask b : p.bases())
    if (!std::binary_search(mandatory.begin(), mandatory.end(), b)) optional.push_back(b);

  ClassSearch search{p, std::move(mandatory), std::move(optional), budget};
  search.run();

  std::sort(search.results.begin(), search.results.end(),
            [](const std::vector<Mask>& a, const std::vector<Mask>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  EnvelopeClass out{p, {}};
  out.members.reserve(search.results.size());
  for (auto& fam : search.results) out.members.push_back(detail::make_unchecked(p.ground(), fam));
  return out;
}

bool envelope_membership_check(const Matroid& p, const Matroid& candidate) {
  if (p.ground() != candidate.ground())
    throw Error("GroundMismatch", "membership check needs a candidate on the same ground");
  return grassmann_necklace_of(candidate) == grassmann_necklace_of(p);
}

}  // namespace positroid
