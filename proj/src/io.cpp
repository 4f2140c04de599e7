#include "positroid/io.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "positroid/errors.hpp"

namespace positroid {

namespace {

std::vector<std::string> split_words(const std::string& line) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    std::size_t space = line.find(' ', pos);
    if (space == std::string::npos) space = line.size();
    if (space == pos) throw Error("ParseError", "stray space in \"" + line + "\"");
    out.push_back(line.substr(pos, space - pos));
    pos = space + 1;
  }
  if (!line.empty() && line.back() == ' ')
    throw Error("ParseError", "trailing space in \"" + line + "\"");
  return out;
}

std::vector<std::string> read_lines(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

std::string join_labels(const std::vector<Label>& labels, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i > 0) out += sep;
    out += label_str(labels[i]);
  }
  return out;
}

}  // namespace

Matroid parse_matroid(std::istream& in) {
  auto lines = read_lines(in);
  if (lines.size() < 4) throw Error("ParseError", "matroid file needs at least four lines");
  const std::string rank_prefix = "rank: ";
  if (lines[0] != "ground:" && lines[0].rfind("ground: ", 0) != 0)
    throw Error("ParseError", "first line must start with \"ground:\"");
  std::vector<Label> labels;
  if (lines[0] != "ground:") {
    for (const std::string& word : split_words(lines[0].substr(8)))
      labels.push_back(parse_label(word));
  }
  GroundSet ground(std::move(labels));

  if (lines[1].rfind(rank_prefix, 0) != 0)
    throw Error("ParseError", "second line must start with \"rank: \"");
  const std::string rank_text = lines[1].substr(rank_prefix.size());
  if (rank_text.empty() || rank_text.size() > 2 ||
      !std::all_of(rank_text.begin(), rank_text.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw Error("ParseError", "rank must be a nonnegative integer");
  const int declared_rank = std::stoi(rank_text);

  if (lines[2] != "bases:") throw Error("ParseError", "third line must be \"bases:\"");

  std::vector<Mask> bases;
  for (std::size_t i = 3; i < lines.size(); ++i) {
    Mask b = 0;
    if (!lines[i].empty()) {
      for (const std::string& word : split_words(lines[i])) {
        std::size_t idx;
        try {
          idx = ground.index_of(parse_label(word));
        } catch (const Error& e) {
          throw Error("ParseError", std::string(e.what()));
        }
        if (has_bit(b, idx))
          throw Error("ParseError", "repeated element in basis \"" + lines[i] + "\"");
        b |= Mask{1} << idx;
      }
    }
    bases.push_back(b);
  }
  Matroid m = matroid_from_bases(ground, std::move(bases));
  if (m.rank() != declared_rank)
    throw Error("ParseError", "declared rank " + std::to_string(declared_rank) +
                                  " but bases have size " + std::to_string(m.rank()));
  return m;
}

Matroid parse_matroid_string(const std::string& text) {
  std::istringstream in(text);
  return parse_matroid(in);
}

std::string matroid_str(const Matroid& m) {
  std::string out = "ground:";
  for (const Label& x : m.ground().labels()) out += " " + label_str(x);
  out += "\nrank: " + std::to_string(m.rank()) + "\nbases:\n";
  for (Mask b : m.bases()) out += join_labels(m.ground().labels_of(b), " ") + "\n";
  return out;
}

std::string permutation_str(const DecoratedPermutation& p) {
  const std::size_t n = p.size();
  std::vector<bool> seen(n, false);
  std::string out;
  std::vector<std::size_t> fixed;
  for (std::size_t i = 0; i < n; ++i) {
    if (p.is_fixed(i)) {
      fixed.push_back(i);
      continue;
    }
    if (seen[i]) continue;
    std::vector<std::size_t> cycle;
    std::size_t j = i;
    do {
      seen[j] = true;
      cycle.push_back(j);
      j = p.image_of(j);
    } while (j != i);
    // i is the cycle minimum; prefer a monotone reading
    if (!std::is_sorted(cycle.begin(), cycle.end())) {
      auto max_it = std::max_element(cycle.begin(), cycle.end());
      std::vector<std::size_t> desc(max_it, cycle.end());
      desc.insert(desc.end(), cycle.begin(), max_it);
      if (std::is_sorted(desc.begin(), desc.end(), std::greater<>())) cycle = desc;
    }
    out += "(";
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      if (k > 0) out += ",";
      out += label_str(p.ground().label(cycle[k]));
    }
    out += ")";
  }
  for (std::size_t i : fixed) {
    if (!out.empty()) out += " ";
    out += (p.color(i) < 0 ? "~" : "_") + label_str(p.ground().label(i));
  }
  return out;
}

std::string necklace_str(const GrassmannNecklace& nk) {
  std::string out;
  for (std::size_t j = 0; j < nk.size(); ++j) {
    out += "J_" + label_str(nk.ground().label(j)) + ": {" +
           join_labels(nk.ground().labels_of(nk.entry(j)), ",") + "}\n";
  }
  return out;
}

namespace {

const char* kind_str(NodeKind k) {
  switch (k) {
    case NodeKind::circuit: return "circuit";
    case NodeKind::cocircuit: return "cocircuit";
    case NodeKind::three_connected: return "3-connected";
    case NodeKind::whole: return "whole";
  }
  return "?";
}

std::string dot_render(const TreeDecomposition& td, const std::vector<EnvelopeClass>* classes) {
  std::string out = "graph tree {\n";
  for (std::size_t i = 0; i < td.nodes.size(); ++i) {
    out += "  n" + std::to_string(i) + " [label=\"" + kind_str(td.nodes[i].kind) + " {" +
           join_labels(td.nodes[i].matroid.ground().labels(), " ") + "}";
    if (classes != nullptr)
      out += " class " + std::to_string((*classes)[i].members.size());
    out += "\"];\n";
  }
  for (const TreeEdge& e : td.edges) {
    out += "  n" + std::to_string(e.a) + " -- n" + std::to_string(e.b) + " [label=\"" +
           label_str(e.connector) + "\"];\n";
  }
  return out + "}\n";
}

}  // namespace

std::string dot_of_tree(const TreeDecomposition& td) { return dot_render(td, nullptr); }

std::string dot_of_tree(const EnvelopeTree& et) { return dot_render(et.tree, &et.classes); }

std::string classification_str(const Classification& c) {
  auto yesno = [](bool b) { return b ? "yes" : "no"; };
  std::string out;
  out += std::string("positroid: ") + yesno(c.is_positroid) + "\n";
  out += std::string("binary: ") + yesno(c.is_binary) + "\n";
  out += std::string("ternary positroid: ") + yesno(c.is_ternary) + "\n";
  out += "non-binary 3-connected nodes: " + std::to_string(c.non_binary_3conn_count) + "\n";
  out += "envelope class size: " +
         (c.envelope_size ? std::to_string(*c.envelope_size) : std::string("unknown")) + "\n";
  return out;
}

std::string classification_kv(const Classification& c) {
  auto tf = [](bool b) { return b ? "true" : "false"; };
  std::string out;
  out += std::string("is_positroid=") + tf(c.is_positroid) + "\n";
  out += std::string("is_binary=") + tf(c.is_binary) + "\n";
  out += std::string("is_ternary=") + tf(c.is_ternary) + "\n";
  out += "non_binary_3conn_count=" + std::to_string(c.non_binary_3conn_count) + "\n";
  out += "envelope_size=" + (c.envelope_size ? std::to_string(*c.envelope_size) : std::string()) +
         "\n";
  return out;
}

std::vector<std::pair<DecoratedPermutation, Matroid>> positroid_census(int n,
                                                                       std::optional<int> rank) {
  if (n < 1 || n > 12)
    throw Error("PreconditionViolation", "census supports 1 <= n <= 12");
  GroundSet ground = GroundSet::range(static_cast<std::size_t>(n));
  std::vector<std::pair<DecoratedPermutation, Matroid>> out;
  std::vector<std::size_t> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 0);
  do {
    std::vector<std::size_t> fixed;
    int anti = 0;
    for (std::size_t i = 0; i < image.size(); ++i) {
      if (image[i] == i) fixed.push_back(i);
      if (image[i] < i) ++anti;
    }
    for (std::size_t colors = 0; colors < (std::size_t{1} << fixed.size()); ++colors) {
      std::vector<int> color(static_cast<std::size_t>(n), 0);
      int coloops = 0;
      for (std::size_t f = 0; f < fixed.size(); ++f) {
        const bool coloop = (colors >> f) & 1;
        color[fixed[f]] = coloop ? -1 : 1;
        coloops += coloop ? 1 : 0;
      }
      const int k = anti + coloops;
      if (rank && *rank != k) continue;
      DecoratedPermutation perm(ground, image, std::move(color));
      Matroid p = positroid_from_necklace(permutation_to_necklace(perm, k));
      out.emplace_back(std::move(perm), std::move(p));
    }
  } while (std::next_permutation(image.begin(), image.end()));
  return out;
}

std::string census_csv(int n, std::optional<int> rank, std::uint64_t budget) {
  std::string out = "n,rank,permutation,binary,ternary,w,class_size\n";
  for (const auto& [perm, p] : positroid_census(n, rank)) {
    Classification c = classify(p, budget);
    out += std::to_string(n) + "," + std::to_string(p.rank()) + ",\"" + permutation_str(perm) +
           "\"," + (c.is_binary ? "1" : "0") + "," + (c.is_ternary ? "1" : "0") + "," +
           std::to_string(c.non_binary_3conn_count) + "," +
           (c.envelope_size ? std::to_string(*c.envelope_size) : std::string()) + "\n";
  }
  return out;
}

}  // namespace positroid
