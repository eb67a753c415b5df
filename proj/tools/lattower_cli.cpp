// lattower: command-line front end for the lattice, automorphism and tower code.
#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "lattower/autgroup.hpp"
#include "lattower/error.hpp"
#include "lattower/json_io.hpp"
#include "lattower/lattice.hpp"
#include "lattower/perm_oracle.hpp"
#include "lattower/tower.hpp"

using namespace lattower;
using nlohmann::json;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitBounds = 3;
constexpr int kExitMismatch = 4;

struct Options {
  std::string spec;
  std::string format = "text";
  std::string out;
  std::size_t max_order = oracle::kDefaultMaxOrder;
  int max_T = kDefaultMaxT;
  std::size_t max_lattice = kDefaultMaxLattice;
  bool verify = false;
};

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::DegreeTooSmall:
    case ErrorKind::DegreeTooLarge:
    case ErrorKind::NegativeExponent:
      return kExitParse;
    case ErrorKind::TooLarge:
    case ErrorKind::NonTermination:
      return kExitBounds;
    case ErrorKind::Mismatch:
    case ErrorKind::SpecMismatch:
      return kExitMismatch;
    default:
      return 1;
  }
}

void emit(const Options& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(opt.out);
  if (!file) throw Error(ErrorKind::ParseError, "cannot open output file " + opt.out);
  file << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// Lattices with an order-2 factor are addressed by name: C2, C2^2, C2*S3, ...
std::optional<oracle::LemmaLattice> find_lemma(const std::string& literal) {
  std::string key;
  for (char c : literal) {
    if (!std::isspace(static_cast<unsigned char>(c))) key += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  }
  if (key.empty() || key[0] != 'C') return std::nullopt;
  auto lemmas = oracle::lemma_lattices();
  auto it = lemmas.find(key);
  if (it == lemmas.end()) throw Error(ErrorKind::ParseError, "unknown lemma lattice '" + literal + "'");
  return it->second;
}

void require_format(const Options& opt, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed) {
    if (opt.format == f) return;
  }
  throw Error(ErrorKind::ParseError, "format '" + opt.format + "' not supported by this command");
}

int cmd_enumerate(const Options& opt) {
  require_format(opt, {"text", "json"});
  auto lattice = enumerate_lattice(parse_spec(opt.spec), opt.max_T);
  if (opt.format == "json") {
    emit(opt, dump(io::to_json(lattice)));
  } else {
    emit(opt, io::census_line(lattice.census()) + "\n");
  }
  return 0;
}

int cmd_hasse(const Options& opt) {
  require_format(opt, {"dot", "json", "text"});
  Poset poset;
  std::vector<std::string> labels;
  if (auto lemma = find_lemma(opt.spec)) {
    poset = lemma->poset;
    for (auto order : lemma->orders) labels.push_back("normal:" + std::to_string(order));
  } else {
    auto lattice = enumerate_lattice(parse_spec(opt.spec), opt.max_T);
    poset = lattice.poset();
    for (const auto& e : lattice.elements()) labels.push_back(std::string(to_string(e.family)) + ":" + e.order.str());
  }
  if (opt.format == "json") {
    json edges = json::array();
    for (auto [lo, hi] : poset.covers()) edges.push_back(json::array({lo, hi}));
    emit(opt, dump(json{{"nodes", labels}, {"edges", edges}}));
  } else if (opt.format == "text") {
    std::ostringstream out;
    out << poset.size() << " nodes, " << poset.covers().size() << " edges\n";
    emit(opt, out.str());
  } else {
    emit(opt, io::hasse_dot(poset, labels));
  }
  return 0;
}

int cmd_aut(const Options& opt) {
  require_format(opt, {"text", "json"});
  if (auto lemma = find_lemma(opt.spec)) {
    auto auts = brute_force_automorphisms(lemma->poset, opt.max_lattice);
    if (opt.format == "json") {
      emit(opt, dump(json{{"spec", lemma->name}, {"lattice_size", lemma->poset.size()}, {"brute_force_order", auts.size()}}));
    } else {
      std::ostringstream out;
      out << "spec " << lemma->name << "\nlattice " << lemma->poset.size() << "\nbrute-force " << auts.size() << "\n";
      emit(opt, out.str());
    }
    return 0;
  }
  auto report = verify_product_formula(parse_spec(opt.spec), opt.max_T, opt.max_lattice);
  if (opt.format == "json") {
    emit(opt, dump(io::to_json(report)));
  } else {
    std::ostringstream out;
    out << "spec " << report.spec.to_string() << "\n"
        << "predicted " << report.predicted_order << "\n"
        << "lattice " << report.lattice_size << "\n"
        << "brute-force " << report.brute_force_order << "\n"
        << "constructive " << report.constructive_order << "\n"
        << "match " << (report.match ? "yes" : "no") << "\n"
        << "generators";
    if (report.generators.empty()) out << " none";
    for (const auto& g : report.generators) out << " " << g.to_cycles();
    out << "\n";
    emit(opt, out.str());
  }
  return report.match ? 0 : kExitMismatch;
}

int cmd_tower(const Options& opt) {
  require_format(opt, {"text", "json"});
  TowerNode start = parse_spec(opt.spec);
  auto run = run_tower(start);
  std::vector<StepCheck> checks;
  bool ok = true;
  if (opt.verify) {
    Bounds bounds{opt.max_T, opt.max_lattice, opt.max_order};
    for (std::size_t i = 0; i + 1 < run.nodes.size(); ++i) {
      checks.push_back(verify_step_against_lattice(run.nodes[i], bounds));
      if (!checks.back().skipped && !checks.back().match) ok = false;
    }
  }
  if (opt.format == "json") {
    json j = io::to_json(run);
    if (opt.verify) {
      j["checks"] = json::array();
      for (const auto& c : checks) j["checks"].push_back(io::to_json(c));
    }
    emit(opt, dump(j));
  } else {
    std::ostringstream out;
    out << format_run(run) << "\n";
    for (const auto& c : checks) {
      out << "  " << c.node << " -> " << c.predicted << ": ";
      if (c.skipped) {
        out << "skipped (" << c.warning << ")";
      } else {
        out << "|LatAut| " << c.brute_force_order << " via " << c.source << ", predicted " << c.predicted_order
            << (c.match ? ", ok" : ", MISMATCH");
      }
      out << "\n";
    }
    emit(opt, out.str());
  }
  return ok ? 0 : kExitMismatch;
}

int cmd_oracle_diff(const Options& opt) {
  require_format(opt, {"text", "json"});
  auto report = oracle::differential_validate(parse_spec(opt.spec), opt.max_order);
  if (opt.format == "json" || !report.ok) {
    emit(opt, dump(io::to_json(report)));
  } else {
    emit(opt, "ok\n");
  }
  return report.ok ? 0 : kExitMismatch;
}

int cmd_lemmas(const Options& opt) {
  require_format(opt, {"text", "json"});
  struct Row {
    std::string name;
    std::size_t size;
    std::size_t aut;
    std::size_t expected;
  };
  std::vector<Row> rows;
  for (int n = 3; n <= 6; ++n) {
    auto lattice = enumerate_lattice(make_spec({{n, 1}}), opt.max_T);
    rows.push_back({"S" + std::to_string(n), lattice.size(), brute_force_automorphisms(lattice.poset()).size(), 1});
  }
  const std::map<std::string, std::size_t> expected{{"C2", 1}, {"C2^2", 6}, {"C2*S3", 2}, {"C2*S4", 2}, {"C2*S5", 2}};
  for (const auto& [name, lemma] : oracle::lemma_lattices()) {
    rows.push_back({name, lemma.poset.size(), brute_force_automorphisms(lemma.poset).size(), expected.at(name)});
  }
  bool ok = std::all_of(rows.begin(), rows.end(), [](const Row& r) { return r.aut == r.expected; });
  if (opt.format == "json") {
    json j = json::array();
    for (const auto& r : rows) {
      j.push_back(json{{"name", r.name}, {"lattice_size", r.size}, {"brute_force_order", r.aut},
                       {"expected", r.expected}, {"match", r.aut == r.expected}});
    }
    emit(opt, dump(j));
  } else {
    std::ostringstream out;
    for (const auto& r : rows) {
      out << r.name << ": " << r.size << " elements, |LatAut| " << r.aut << " (expected " << r.expected << ")"
          << (r.aut == r.expected ? "" : " MISMATCH") << "\n";
    }
    emit(opt, out.str());
  }
  return ok ? 0 : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Normal-subgroup lattices of products of symmetric groups"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub, bool needs_spec) {
    auto* spec = sub->add_option("--spec", opt.spec, "group literal, e.g. S3^3 or S4^2*S3^2");
    if (needs_spec) spec->required();
    sub->add_option("--format", opt.format, "text, json or dot");
    sub->add_option("--out", opt.out, "write output to this file");
    sub->add_option("--max-order", opt.max_order, "largest concrete group the oracle will build");
    sub->add_option("--max-T", opt.max_T, "largest number of factors to enumerate");
    sub->add_option("--max-lattice", opt.max_lattice, "largest lattice for automorphism search");
  };

  auto* enumerate = app.add_subcommand("enumerate", "print the census of N(G)");
  auto* aut = app.add_subcommand("aut", "compare |LatAut(N(G))| with the product formula");
  auto* tower = app.add_subcommand("tower", "iterate LatAut until the trivial group");
  auto* diff = app.add_subcommand("oracle-diff", "check the lattice against a concrete permutation group");
  auto* hasse = app.add_subcommand("hasse", "Hasse diagram of N(G)");
  auto* lemmas = app.add_subcommand("lemmas", "automorphism counts of the small lattices");
  for (auto* sub : {enumerate, aut, tower, diff, hasse}) add_common(sub, true);
  add_common(lemmas, false);
  tower->add_flag("--verify", opt.verify, "brute-force each step within the bounds");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
  if (hasse->parsed() && hasse->get_option("--format")->count() == 0) opt.format = "dot";

  try {
    if (enumerate->parsed()) return cmd_enumerate(opt);
    if (aut->parsed()) return cmd_aut(opt);
    if (tower->parsed()) return cmd_tower(opt);
    if (diff->parsed()) return cmd_oracle_diff(opt);
    if (hasse->parsed()) return cmd_hasse(opt);
    if (lemmas->parsed()) return cmd_lemmas(opt);
  } catch (const Error& e) {
    std::cerr << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
