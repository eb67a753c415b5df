#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "lattower/autgroup.hpp"
#include "lattower/lattice.hpp"
#include "lattower/perm_oracle.hpp"
#include "lattower/tower.hpp"

namespace lattower::io {

/// Exact integer as a JSON number when it fits in 64 bits, else a decimal string.
nlohmann::json order_json(const Order& order);

nlohmann::json to_json(const gf2::Subspace& s);
nlohmann::json to_json(const AdmissibleTriple& t);
nlohmann::json to_json(const Census& c);

/// {spec, census, elements: [{triple, family, order}], hasse: [[lower, upper]]}
nlohmann::json to_json(const Lattice& lattice);

/// {spec, predicted_order, brute_force_order, constructive_order, match, generators}
nlohmann::json to_json(const ProductFormulaReport& r);
nlohmann::json to_json(const oracle::OracleReport& r);
nlohmann::json to_json(const TowerRun& run);
nlohmann::json to_json(const StepCheck& c);

/// "total 38: sub-products 27, sign-parity 4, mixed 7"
std::string census_line(const Census& c);

/// Covering relations as a DOT digraph, one labelled node per element.
std::string hasse_dot(const Poset& poset, const std::vector<std::string>& labels);

}  // namespace lattower::io
