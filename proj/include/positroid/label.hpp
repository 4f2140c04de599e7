#pragma once

#include <gmpxx.h>

#include <string>

namespace positroid {

// Ground elements are labelled by exact rationals so that fresh connector
// elements can always be inserted strictly between two existing labels.
using Label = mpq_class;

[[nodiscard]] std::string label_str(const Label& v);

// Accepts "p" or "p/q" with optional sign; throws Error("ParseError", ...).
[[nodiscard]] Label parse_label(const std::string& text);

// Midpoint, reduced; lo < result < hi required and guaranteed.
[[nodiscard]] Label label_between(const Label& lo, const Label& hi);

}  // namespace positroid
