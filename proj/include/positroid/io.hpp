#pragma once

#include <istream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "positroid/classify.hpp"
#include "positroid/connectivity.hpp"
#include "positroid/maps.hpp"
#include "positroid/matroid.hpp"

namespace positroid {

// Text format, one matroid per file:
//   ground: <labels, space-separated, ascending>
//   rank: <nonnegative integer>
//   bases:
//   <one basis per line as space-separated labels; rank 0 uses one empty line>
// Serialization lists bases in sorted mask order, so parse/serialize
// round-trips byte for byte.  Malformed input throws ParseError.
[[nodiscard]] Matroid parse_matroid(std::istream& in);
[[nodiscard]] Matroid parse_matroid_string(const std::string& text);
[[nodiscard]] std::string matroid_str(const Matroid& m);

// Cycle notation; each cycle prints ascending from its minimum when the
// cycle is monotone that way, descending from its maximum when monotone the
// other way, and minimum-first otherwise.  Cycles are ordered by minimum;
// fixed points trail as ~x (coloop) and _x (loop).
[[nodiscard]] std::string permutation_str(const DecoratedPermutation& p);

// One "J_<label>: {...}" line per entry.
[[nodiscard]] std::string necklace_str(const GrassmannNecklace& nk);

[[nodiscard]] std::string dot_of_tree(const TreeDecomposition& td);
[[nodiscard]] std::string dot_of_tree(const EnvelopeTree& et);

[[nodiscard]] std::string classification_str(const Classification& c);
[[nodiscard]] std::string classification_kv(const Classification& c);

// Every positroid on 1..n via decorated-permutation enumeration, optionally
// filtered by rank, in a deterministic order.
[[nodiscard]] std::vector<std::pair<DecoratedPermutation, Matroid>> positroid_census(
    int n, std::optional<int> rank = std::nullopt);

// CSV: n, rank, permutation (quoted), binary, ternary, w, class size (blank
// when the class enumeration exceeds its budget).
[[nodiscard]] std::string census_csv(int n, std::optional<int> rank = std::nullopt,
                                     std::uint64_t budget = kDefaultEnvelopeBudget);

}  // namespace positroid
