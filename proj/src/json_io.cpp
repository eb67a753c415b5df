#include "lattower/json_io.hpp"

#include <limits>
#include <sstream>

namespace lattower::io {

using nlohmann::json;

json order_json(const Order& order) {
  if (order >= 0 && order <= std::numeric_limits<std::uint64_t>::max()) {
    return json(static_cast<std::uint64_t>(order));
  }
  return json(order.str());
}

json to_json(const gf2::Subspace& s) { return json(s.to_strings()); }

json to_json(const AdmissibleTriple& t) {
  json P = json::object();
  std::size_t j = 0;
  for (std::size_t s = 0; s < t.P.size(); ++s) {
    if (j < t.J.size() && t.J[j] == static_cast<int>(s)) {
      ++j;
      continue;
    }
    P[std::to_string(s)] = std::string(to_string(t.P[s]));
  }
  return json{{"J", t.J}, {"P", P}, {"H", to_json(t.H)}};
}

json to_json(const Census& c) {
  return json{{"sub_products", c.sub_products}, {"sign_parity", c.sign_parity}, {"mixed", c.mixed}, {"total", c.total}};
}

json to_json(const Lattice& lattice) {
  json elements = json::array();
  for (const auto& e : lattice.elements()) {
    elements.push_back(json{{"triple", to_json(e.triple)},
                            {"family", std::string(to_string(e.family))},
                            {"order", order_json(e.order)}});
  }
  json hasse = json::array();
  for (auto [lo, hi] : lattice.poset().covers()) hasse.push_back(json::array({lo, hi}));
  return json{{"spec", lattice.spec().to_string()},
              {"census", to_json(lattice.census())},
              {"elements", std::move(elements)},
              {"hasse", std::move(hasse)}};
}

json to_json(const ProductFormulaReport& r) {
  json gens = json::array();
  for (const auto& g : r.generators) gens.push_back(g.to_cycles());
  return json{{"spec", r.spec.to_string()},
              {"predicted_order", order_json(r.predicted_order)},
              {"brute_force_order", r.brute_force_order},
              {"constructive_order", r.constructive_order},
              {"match", r.match},
              {"generators", std::move(gens)}};
}

json to_json(const oracle::OracleReport& r) {
  json out{{"spec", r.spec},
           {"ok", r.ok},
           {"oracle_count", r.oracle_count},
           {"lattice_count", r.lattice_count},
           {"pairs_checked", r.pairs_checked}};
  if (!r.ok) out["first_mismatch"] = r.first_mismatch;
  return out;
}

json to_json(const TowerRun& run) {
  json nodes = json::array();
  for (const auto& n : run.nodes) nodes.push_back(describe(n));
  return json{{"nodes", std::move(nodes)}, {"steps", run.length()}, {"sharp", run.length() == 3}};
}

json to_json(const StepCheck& c) {
  json out{{"node", c.node},
           {"predicted", c.predicted},
           {"predicted_order", order_json(c.predicted_order)},
           {"skipped", c.skipped}};
  if (c.skipped) {
    out["warning"] = c.warning;
  } else {
    out["brute_force_order"] = c.brute_force_order;
    out["source"] = c.source;
    out["match"] = c.match;
  }
  return out;
}

std::string census_line(const Census& c) {
  std::ostringstream out;
  out << "total " << c.total << ": sub-products " << c.sub_products << ", sign-parity " << c.sign_parity
      << ", mixed " << c.mixed;
  return out.str();
}

std::string hasse_dot(const Poset& poset, const std::vector<std::string>& labels) {
  std::ostringstream out;
  out << "digraph lattice {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < poset.size(); ++i) {
    out << "  n" << i << " [label=\"" << labels.at(i) << "\"];\n";
  }
  for (auto [lo, hi] : poset.covers()) out << "  n" << lo << " -> n" << hi << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace lattower::io
