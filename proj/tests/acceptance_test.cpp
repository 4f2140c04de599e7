// Integration gate: one line per criterion, nonzero exit on any failure.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "positroid/classify.hpp"
#include "positroid/constructions.hpp"
#include "positroid/errors.hpp"
#include "positroid/io.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace positroid;

namespace {

struct Gate {
  int failures = 0;

  void run(int idx, const std::string& label, double limit_s,
           const std::function<void(std::string&)>& body) {
    std::string detail;
    auto t0 = std::chrono::steady_clock::now();
    try {
      body(detail);
    } catch (const std::exception& e) {
      if (detail.empty()) detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (detail.empty() && limit_s > 0 && secs > limit_s)
      detail = "exceeded " + std::to_string(limit_s) + " s";
    bool pass = detail.empty();
    failures += pass ? 0 : 1;
    std::printf("[%s] %2d. %s (%.2fs)%s%s\n", pass ? "PASS" : "FAIL", idx, label.c_str(), secs,
                pass ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
  }
};

void expect(std::string& detail, bool ok, const std::string& msg) {
  if (!ok && detail.empty()) detail = msg;
}

DecoratedPermutation whirl_perm(int r) {
  const int n = 2 * r;
  std::vector<std::size_t> image(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const int label = i + 1;
    int to = label % 2 == 1 ? label + 2 : label - 2;
    if (to > n) to -= n;
    if (to < 1) to += n;
    image[static_cast<std::size_t>(i)] = static_cast<std::size_t>(to - 1);
  }
  return DecoratedPermutation(GroundSet::range(static_cast<std::size_t>(n)), std::move(image),
                              std::vector<int>(static_cast<std::size_t>(n), 0));
}

Matroid whirl_two_sum_circuit() {
  Matroid right = transport(uniform(2, 3), GroundSet({Label(4), Label(5), Label(6)}));
  return two_sum(whirl(2), right, Label(4)).matroid;
}

}  // namespace

int main() {
  Gate gate;

  gate.run(1, "whirl decorated permutations for r = 2..5", 1.0, [](std::string& detail) {
    for (int r = 2; r <= 5; ++r)
      expect(detail, decorated_permutation_of(whirl(r)) == whirl_perm(r),
             "wrong permutation at r = " + std::to_string(r));
    expect(detail, permutation_str(decorated_permutation_of(whirl(3))) == "(1,3,5)(6,4,2)",
           "wrong rendering at r = 3");
  });

  gate.run(2, "envelope class of the rank-2 uniform matroid on four elements", 1.0,
           [](std::string& detail) {
             EnvelopeClass ec = envelope_class_of(uniform(2, 4));
             expect(detail, ec.members.size() == 4,
                    "expected 4 members, got " + std::to_string(ec.members.size()));
             if (!detail.empty()) return;
             const std::vector<std::vector<Mask>> lists = {
                 {0b0011, 0b0110, 0b1001, 0b1100},
                 {0b0011, 0b0101, 0b0110, 0b1001, 0b1100},
                 {0b0011, 0b0110, 0b1001, 0b1010, 0b1100},
                 {0b0011, 0b0101, 0b0110, 0b1001, 0b1010, 0b1100}};
             for (std::size_t i = 0; i < 4; ++i)
               expect(detail, ec.members[i].bases() == lists[i],
                      "member " + std::to_string(i) + " has the wrong basis list");
           });

  gate.run(3, "envelope class of the rank-3 whirl, enumerated", 60.0, [](std::string& detail) {
    EnvelopeClass ec = envelope_class_of(whirl(3), std::uint64_t{1} << 17);
    expect(detail, ec.members.size() == 4,
           "expected 4 members, got " + std::to_string(ec.members.size()));
    if (!detail.empty()) return;
    const std::vector<Matroid> expected = {n_graph(3).matroid, n_relaxed(3), wheel(3).matroid,
                                           whirl(3)};
    for (std::size_t i = 0; i < 4; ++i) {
      expect(detail, is_isomorphic(ec.members[i], expected[i]),
             "member " + std::to_string(i) + " is not the expected matroid");
    }
  });

  gate.run(4, "rank-4 whirl class: membership checks plus an explicit budget report", 10.0,
           [](std::string& detail) {
             Matroid w4 = whirl(4);
             for (const Matroid& c :
                  {n_graph(4).matroid, n_relaxed(4), wheel(4).matroid, w4})
               expect(detail, envelope_membership_check(w4, c), "candidate fails membership");
             bool reported = false;
             try {
               (void)envelope_class_of(w4, 64);
             } catch (const Error& e) {
               reported = std::string(e.name()) == "BudgetExceeded";
             }
             expect(detail, reported, "budget exhaustion was not reported");
             // with the default budget the pruned search does finish
             expect(detail, envelope_class_of(w4).members.size() == 4,
                    "full enumeration disagrees with the 4-member class");
           });

  gate.run(5, "envelope class sizes are 4^w", 30.0, [](std::string& detail) {
    Matroid shifted = transport(whirl(2), GroundSet({Label(5), Label(6), Label(7), Label(8)}));
    Matroid sum = direct_sum(whirl(2), shifted);
    Matroid glued = whirl_two_sum_circuit();
    Matroid circ5 = circuit_matroid(GroundSet::range(5));
    Matroid doubled = matroid_from_bases(GroundSet::range(4),
                                         {0b0011, 0b0101, 0b0110, 0b1001, 0b1010});
    expect(detail, envelope_count(whirl(2)) == 4, "whirl(2) count");
    expect(detail, envelope_count(whirl(3)) == 4, "whirl(3) count");
    expect(detail, envelope_count(sum) == 16, "direct sum count");
    expect(detail, envelope_count(glued) == 4, "2-sum count");
    expect(detail, envelope_count(circ5) == 1, "circuit count");
    expect(detail, envelope_count(doubled) == 1, "binary positroid count");
    expect(detail, envelope_class_of(whirl(2)).members.size() == 4, "whirl(2) enumeration");
    expect(detail, envelope_class_of(whirl(3)).members.size() == 4, "whirl(3) enumeration");
    expect(detail, envelope_class_of(sum).members.size() == 16, "direct sum enumeration");
    expect(detail, envelope_class_of(glued).members.size() == 4, "2-sum enumeration");
    expect(detail, envelope_class_of(circ5).members.size() == 1, "circuit enumeration");
    expect(detail, envelope_class_of(doubled).members.size() == 1,
           "binary positroid enumeration");
  });

  gate.run(6, "positroid recognition routes agree across the n <= 6 corpus", 300.0,
           [](std::string& detail) {
             std::vector<Matroid> mats = corpus::all_matroids(6);
             expect(detail, mats.size() == 4304,
                    "corpus size drifted: " + std::to_string(mats.size()));
             std::size_t positroids = 0;
             for (const Matroid& m : mats) {
               // is_positroid itself cross-checks both routes and throws on
               // any disagreement
               if (is_positroid(m)) ++positroids;
             }
             expect(detail, positroids == 2371,
                    "positroid count drifted: " + std::to_string(positroids));
           });

  gate.run(7, "permutation duality and necklace commutation across the corpus", 300.0,
           [](std::string& detail) {
             std::size_t checked = 0;
             for (const Matroid& m : corpus::all_matroids(6)) {
               DecoratedPermutation pm = decorated_permutation_of(m);
               if (decorated_permutation_of(dual_of(m)) != inverse_of(pm)) {
                 expect(detail, false, "duality fails on a corpus matroid");
                 return;
               }
               if (necklace_to_permutation(grassmann_necklace_of(m)) != pm) {
                 expect(detail, false, "commutation fails on a corpus matroid");
                 return;
               }
               ++checked;
             }
             expect(detail, checked == 4304, "short corpus scan");
           });

  gate.run(8, "2-sum permutation law on 50 random compositions", 60.0,
           [](std::string& detail) {
             std::vector<Matroid> pool;
             for (int n = 2; n <= 5; ++n)
               for (const auto& entry : positroid_census(n)) pool.push_back(entry.second);
             std::mt19937 rng(20260814u);
             std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
             int done = 0;
             while (done < 50) {
               const Matroid& lhs = pool[pick(rng)];
               const Matroid& rhs = pool[pick(rng)];
               const std::size_t a = lhs.size(), b = rhs.size();
               // place the sides on consecutive arcs sharing the label a
               std::vector<Label> right_labels;
               for (std::size_t i = 0; i < b; ++i)
                 right_labels.push_back(Label(static_cast<long>(a + i)));
               Matroid right = transport(rhs, GroundSet(std::move(right_labels)));
               DecoratedPermutation pl = decorated_permutation_of(lhs);
               DecoratedPermutation pr = decorated_permutation_of(right);
               if (pl.is_fixed(a - 1) || pr.is_fixed(0)) continue;
               Label e(static_cast<long>(a));
               DecoratedPermutation composed = two_sum_perm(pl, pr, e);
               DecoratedPermutation direct =
                   decorated_permutation_of(two_sum(lhs, right, e).matroid);
               if (composed != direct) {
                 expect(detail, false, "composition " + std::to_string(done) + " disagrees");
                 return;
               }
               ++done;
             }
           });

  gate.run(9, "binary positroids are exactly the singleton classes, n <= 6", 300.0,
           [](std::string& detail) {
             std::size_t checked = 0;
             for (const Matroid& m : corpus::all_matroids(6)) {
               if (!is_positroid(m)) continue;
               const bool binary = is_binary(m);
               const bool singleton = envelope_class_of(m).members.size() == 1;
               if (binary != singleton) {
                 expect(detail, false, "mismatch on a corpus positroid");
                 return;
               }
               ++checked;
             }
             expect(detail, checked == 2371, "short positroid scan");
           });

  gate.run(10, "three ternary tests coincide on every positroid with n <= 7", 600.0,
           [](std::string& detail) {
             for (int n = 1; n <= 7; ++n) {
               for (const auto& entry : positroid_census(n)) {
                 const Matroid& p = entry.second;
                 const bool by_minors = is_ternary_positroid(p);
                 bool by_structure = true;
                 try {
                   (void)ternary_structure(p);
                 } catch (const Error& e) {
                   if (std::string(e.name()) != "NotTernary") throw;
                   by_structure = false;
                 }
                 const bool by_field = f3_realizable(p);
                 if (by_minors != by_structure || by_minors != by_field) {
                   expect(detail, false, "tests split on an n = " + std::to_string(n) +
                                             " positroid");
                   return;
                 }
               }
             }
           });

  gate.run(11, "positroid orderings of the rank-3 whirl form two dual classes", 300.0,
           [](std::string& detail) {
             Matroid w3 = whirl(3);
             std::vector<std::size_t> perm(6);
             std::iota(perm.begin(), perm.end(), 0);
             std::vector<Matroid> found;
             int orderings = 0;
             do {
               Matroid reordered = permute_elements(w3, perm);
               if (!is_positroid(reordered)) continue;
               ++orderings;
               if (std::find(found.begin(), found.end(), reordered) == found.end())
                 found.push_back(reordered);
             } while (std::next_permutation(perm.begin(), perm.end()));
             expect(detail, orderings == 12,
                    "expected 12 positroid orderings, got " + std::to_string(orderings));
             expect(detail, found.size() == 2,
                    "expected 2 distinct basis families, got " + std::to_string(found.size()));
             if (found.size() == 2)
               expect(detail, dual_of(found[0]) == found[1], "families are not dual");
           });

  gate.run(12, "axiom property suites, exhaustive and randomized", 300.0,
           [](std::string& detail) {
             for (const Matroid& m : corpus::all_matroids(5)) {
               // re-validating the basis list exercises the exchange check
               (void)matroid_from_bases(m.ground(), m.bases());
               const Mask all = m.ground().all();
               for (Mask x = 0; x <= all; ++x) {
                 Mask cl = m.closure_of(x);
                 if (m.closure_of(cl) != cl) {
                   expect(detail, false, "closure is not idempotent");
                   return;
                 }
               }
               for (Mask x = 0; x <= all; x += 3) {
                 for (Mask y = 0; y <= all; y += 5) {
                   if (m.rank_of(x | y) + m.rank_of(x & y) > m.rank_of(x) + m.rank_of(y)) {
                     expect(detail, false, "submodularity fails");
                     return;
                   }
                 }
               }
               if (dual_of(dual_of(m)) != m) {
                 expect(detail, false, "duality is not an involution");
                 return;
               }
             }
             std::mt19937 rng(987654321u);
             std::uniform_int_distribution<int> vtx(0, 4);
             for (int trial = 0; trial < 12; ++trial) {
               Graph g{5, {}};
               std::uniform_int_distribution<int> ecount(7, 8);
               const int edges = ecount(rng);
               for (int e = 0; e < edges; ++e)
                 g.edges.push_back({vtx(rng), vtx(rng), Label(e + 1)});
               Matroid m = graphic_matroid(g);
               if (dual_of(dual_of(m)) != m) {
                 expect(detail, false, "duality involution fails on a random graph");
                 return;
               }
               const Label& e0 = m.ground().label(0);
               if (!has_bit(m.loops(), 0) && !has_bit(m.coloops(), 0)) {
                 if (dual_of(delete_element(m, e0)) != contract_element(dual_of(m), e0)) {
                   expect(detail, false, "minor duality fails on a random graph");
                   return;
                 }
               }
               std::uniform_int_distribution<int> rk(0, 8);
               Matroid u = uniform(rk(rng), 8);
               Mask x = static_cast<Mask>(rng()) & u.ground().all();
               Mask y = static_cast<Mask>(rng()) & u.ground().all();
               if (u.rank_of(x | y) + u.rank_of(x & y) > u.rank_of(x) + u.rank_of(y)) {
                 expect(detail, false, "submodularity fails on a uniform matroid");
                 return;
               }
             }
           });

  if (gate.failures > 0) {
    std::printf("%d criterion(s) failed\n", gate.failures);
    return 1;
  }
  std::printf("all 12 criteria passed\n");
  return 0;
}
