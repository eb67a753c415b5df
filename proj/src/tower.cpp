#include "lattower/tower.hpp"

#include <algorithm>
#include <sstream>

#include "lattower/error.hpp"

namespace lattower {

namespace {

std::string factor_name(int degree) { return degree == 2 ? "C2" : "S" + std::to_string(degree); }

}  // namespace

std::vector<int> nontrivial_degrees(const PairNode& node) {
  std::vector<int> out;
  for (int x : {node.a, node.b}) {
    if (x >= 2) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_trivial(const TowerNode& node) {
  if (const auto* spec = std::get_if<TowerGroupSpec>(&node)) return spec->trivial();
  return nontrivial_degrees(std::get<PairNode>(node)).empty();
}

std::string describe(const TowerNode& node) {
  if (const auto* spec = std::get_if<TowerGroupSpec>(&node)) return spec->to_string();
  const auto degrees = nontrivial_degrees(std::get<PairNode>(node));
  if (degrees.empty()) return "1";
  if (degrees.size() == 2 && degrees[0] == degrees[1]) return factor_name(degrees[0]) + "^2";
  std::string out = factor_name(degrees[0]);
  for (std::size_t i = 1; i < degrees.size(); ++i) out += "*" + factor_name(degrees[i]);
  return out;
}

TowerNode latauto_step(const TowerNode& node) {
  if (const auto* spec = std::get_if<TowerGroupSpec>(&node)) return PairNode{spec->a4(), spec->B()};

  const auto f = nontrivial_degrees(std::get<PairNode>(node));
  // 1, C2 and S_n all have rigid lattices.
  if (f.size() <= 1) return PairNode{0, 0};
  const int n = f[0];
  const int m = f[1];
  if (n == 2 && m == 2) return PairNode{0, 3};  // N(C2^2) is the diamond M_3
  if (n == 2) return PairNode{0, 2};             // C2 x S_m: swap the two coatoms
  return PairNode{(n == 4) + (m == 4), (n != 4) + (m != 4)};
}

Order predicted_lataut_order(const TowerNode& node) {
  const auto next = std::get<PairNode>(latauto_step(node));
  return factorial(next.a) * factorial(next.b);
}

TowerRun run_tower(const TowerNode& start) {
  TowerRun run{{start}};
  while (!is_trivial(run.nodes.back())) {
    if (run.length() >= kTowerIterationCap) {
      throw Error(ErrorKind::NonTermination, "tower from " + describe(start) + " exceeded " +
                                                 std::to_string(kTowerIterationCap) + " steps");
    }
    run.nodes.push_back(latauto_step(run.nodes.back()));
  }
  if (std::holds_alternative<TowerGroupSpec>(start) && run.length() > 3) {
    throw Error(ErrorKind::NonTermination, "tower from " + describe(start) + " took " +
                                               std::to_string(run.length()) + " steps");
  }
  return run;
}

std::string format_run(const TowerRun& run) {
  std::ostringstream out;
  for (std::size_t i = 0; i < run.nodes.size(); ++i) {
    if (i > 0) out << " → ";
    out << "G_" << i << " = " << describe(run.nodes[i]);
  }
  const int n = run.length();
  out << " (" << n << (n == 1 ? " step" : " steps") << (n == 3 ? ", sharp" : "") << ")";
  return out.str();
}

StepCheck verify_step_against_lattice(const TowerNode& node, const Bounds& bounds) {
  StepCheck c;
  c.node = describe(node);
  c.predicted = describe(latauto_step(node));
  c.predicted_order = predicted_lataut_order(node);
  try {
    if (const auto* spec = std::get_if<TowerGroupSpec>(&node)) {
      const auto r = verify_product_formula(*spec, bounds.max_T, bounds.max_lattice);
      c.source = "lattice_core";
      c.brute_force_order = r.brute_force_order;
      c.match = r.match && Order(r.brute_force_order) == c.predicted_order;
      return c;
    }
    const auto degrees = nontrivial_degrees(std::get<PairNode>(node));
    if (std::find(degrees.begin(), degrees.end(), 2) != degrees.end()) {
      const auto lat = oracle::concrete_lattice(c.node, degrees, bounds.max_order);
      c.source = "perm_oracle";
      c.brute_force_order = brute_force_automorphisms(lat.poset, bounds.max_lattice).size();
    } else {
      std::map<int, int> exps;
      for (int d : degrees) ++exps[d];
      const auto lat = enumerate_lattice(make_spec(exps, std::max(kDefaultMaxDegree, degrees.empty() ? 0 : degrees.back())),
                                         bounds.max_T);
      c.source = "lattice_core";
      c.brute_force_order = brute_force_automorphisms(lat.poset(), bounds.max_lattice).size();
    }
    c.match = Order(c.brute_force_order) == c.predicted_order;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::TooLarge) throw;
    c.skipped = true;
    c.warning = e.what();
  }
  return c;
}

}  // namespace lattower
