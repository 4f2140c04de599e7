#include "positroid/label.hpp"

#include <cctype>

#include "positroid/errors.hpp"

namespace positroid {

std::string label_str(const Label& v) { return v.get_str(); }

Label parse_label(const std::string& text) {
  if (text.empty()) throw Error("ParseError", "empty label");
  std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  bool seen_digit = false, seen_slash = false;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      seen_digit = true;
    } else if (c == '/' && !seen_slash && seen_digit) {
      seen_slash = true;
      seen_digit = false;
    } else {
      throw Error("ParseError", "bad label '" + text + "'");
    }
  }
  if (!seen_digit) throw Error("ParseError", "bad label '" + text + "'");
  Label v;
  if (v.set_str(text, 10) != 0)
    throw Error("ParseError", "bad label '" + text + "'");
  if (v.get_den() == 0) throw Error("ParseError", "zero denominator in '" + text + "'");
  v.canonicalize();
  return v;
}

Label label_between(const Label& lo, const Label& hi) {
  Label mid = (lo + hi) / 2;
  mid.canonicalize();
  return mid;
}

}  // namespace positroid
