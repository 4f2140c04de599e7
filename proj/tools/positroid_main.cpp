#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "positroid/classify.hpp"
#include "positroid/connectivity.hpp"
#include "positroid/constructions.hpp"
#include "positroid/errors.hpp"
#include "positroid/io.hpp"
#include "positroid/maps.hpp"

namespace {

positroid::Matroid load(const std::string& path) {
  if (path == "-") return positroid::parse_matroid(std::cin);
  std::ifstream in(path);
  if (!in) throw positroid::Error("ParseError", "cannot open " + path);
  return positroid::parse_matroid(in);
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw positroid::Error("ParseError", "cannot write " + out_path);
  out << text;
}

std::string label_set(const positroid::Matroid& m, positroid::Mask x) {
  std::string out = "{";
  bool first = true;
  for (const auto& v : m.ground().labels_of(x)) {
    if (!first) out += ",";
    out += positroid::label_str(v);
    first = false;
  }
  return out + "}";
}

void run_info(const std::string& file) {
  positroid::Matroid m = load(file);
  std::cout << "elements: " << m.size() << "\n";
  std::cout << "rank: " << m.rank() << "\n";
  std::cout << "bases: " << m.bases().size() << "\n";
  std::cout << "loops: " << label_set(m, m.loops()) << "\n";
  std::cout << "coloops: " << label_set(m, m.coloops()) << "\n";
  std::cout << "circuits:\n";
  for (positroid::Mask c : m.circuits()) std::cout << label_set(m, c) << "\n";
}

positroid::Matroid build(const std::string& kind, std::optional<int> a, std::optional<int> b) {
  auto need = [&](int count) {
    const int got = (a ? 1 : 0) + (b ? 1 : 0);
    if (got != count) {
      throw positroid::Error("ParseError", "construct " + kind + " takes " +
                                               std::to_string(count) + " argument(s)");
    }
  };
  if (kind == "uniform") {
    need(2);
    return positroid::uniform(*a, *b);
  }
  need(1);
  if (kind == "whirl") return positroid::whirl(*a);
  if (kind == "wheel") return positroid::wheel(*a).matroid;
  if (kind == "ngraph") return positroid::n_graph(*a).matroid;
  if (kind == "nrelaxed") return positroid::n_relaxed(*a);
  if (kind == "circuit") return positroid::circuit_matroid(positroid::GroundSet::range(*a));
  if (kind == "cocircuit") return positroid::cocircuit_matroid(positroid::GroundSet::range(*a));
  throw positroid::Error("ParseError", "unknown construction \"" + kind + "\"");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ordered matroids and positroids"};
  app.require_subcommand(1);

  std::string file = "-";
  std::string target_file;
  std::string out_path;
  std::string dot_path;
  std::string kind;
  std::optional<int> arg_a;
  std::optional<int> arg_b;
  std::uint64_t budget = positroid::kDefaultEnvelopeBudget;
  std::optional<int> rank_filter;
  int census_n = 0;
  bool kv = false;

  auto* info = app.add_subcommand("info", "rank, bases, circuits, loops, coloops");
  info->add_option("FILE", file, "matroid file, - for stdin");
  info->callback([&] { run_info(file); });

  auto* perm = app.add_subcommand("perm", "decorated permutation in cycle notation");
  perm->add_option("FILE", file);
  perm->callback([&] {
    std::cout << positroid::permutation_str(positroid::decorated_permutation_of(load(file)))
              << "\n";
  });

  auto* necklace = app.add_subcommand("necklace", "Grassmann necklace");
  necklace->add_option("FILE", file);
  necklace->callback([&] {
    std::cout << positroid::necklace_str(positroid::grassmann_necklace_of(load(file)));
  });

  auto* envelope = app.add_subcommand("envelope", "envelope positroid");
  envelope->add_option("FILE", file);
  envelope->add_option("-o,--output", out_path, "output file");
  envelope->callback([&] {
    emit(positroid::matroid_str(positroid::envelope_positroid(load(file))), out_path);
  });

  auto* cls = app.add_subcommand("class", "members of the envelope class");
  cls->add_option("FILE", file);
  cls->add_option("--budget", budget, "search node budget");
  cls->callback([&] {
    positroid::Matroid m = load(file);
    positroid::EnvelopeClass ec =
        positroid::envelope_class_of(positroid::envelope_positroid(m), budget);
    bool first = true;
    for (const positroid::Matroid& member : ec.members) {
      if (!first) std::cout << "\n";
      std::cout << positroid::matroid_str(member);
      first = false;
    }
  });

  auto* decompose = app.add_subcommand("decompose", "canonical tree decomposition");
  decompose->add_option("FILE", file);
  decompose->add_option("--dot", dot_path, "write DOT here instead of stdout");
  decompose->callback([&] {
    emit(positroid::dot_of_tree(positroid::canonical_tree_decomposition(load(file))), dot_path);
  });

  auto* classify_cmd = app.add_subcommand("classify", "positroid/binary/ternary report");
  classify_cmd->add_option("FILE", file);
  classify_cmd->add_option("--budget", budget, "class enumeration budget");
  classify_cmd->add_flag("--kv", kv, "machine-readable key=value output");
  classify_cmd->callback([&] {
    positroid::Classification c = positroid::classify(load(file), budget);
    std::cout << (kv ? positroid::classification_kv(c) : positroid::classification_str(c));
  });

  auto* construct = app.add_subcommand("construct", "build a named matroid");
  construct->add_option("KIND", kind, "uniform|whirl|wheel|ngraph|nrelaxed|circuit|cocircuit")
      ->required();
  construct->add_option("A", arg_a, "first argument");
  construct->add_option("B", arg_b, "second argument");
  construct->add_option("-o,--output", out_path, "output file");
  construct->callback([&] { emit(positroid::matroid_str(build(kind, arg_a, arg_b)), out_path); });

  auto* is_pos = app.add_subcommand("is-positroid", "positroid recognition");
  is_pos->add_option("FILE", file);
  is_pos->callback(
      [&] { std::cout << (positroid::is_positroid(load(file)) ? "true" : "false") << "\n"; });

  auto* minor = app.add_subcommand("minor", "does FILE have a minor isomorphic to TARGET");
  minor->add_option("FILE", file)->required();
  minor->add_option("TARGET", target_file)->required();
  minor->callback([&] {
    std::cout << (positroid::has_minor_isomorphic(load(file), load(target_file)) ? "true"
                                                                                 : "false")
              << "\n";
  });

  auto* census = app.add_subcommand("census", "CSV of all positroids on 1..N");
  census->add_option("N", census_n, "ground size")->required();
  census->add_option("--rank", rank_filter, "restrict to one rank");
  census->add_option("--budget", budget, "class enumeration budget");
  census->callback([&] { std::cout << positroid::census_csv(census_n, rank_filter, budget); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const positroid::Error& e) {
    std::cerr << e.name() << ": " << e.what() << "\n";
    return std::string(e.name()) == "ParseError" ? 2 : 1;
  }
  return 0;
}
