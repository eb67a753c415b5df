#include <regex>

#include "doctest.h"
#include "lattower/json_io.hpp"

using namespace lattower;

namespace {

std::size_t count_matches(const std::string& text, const std::string& pattern) {
  std::regex re(pattern);
  return static_cast<std::size_t>(std::distance(std::sregex_iterator(text.begin(), text.end(), re), std::sregex_iterator()));
}

// Covering pairs straight from the triple inclusion rule, no Poset involved.
std::size_t covering_scan(const Lattice& L) {
  const auto& es = L.elements();
  const auto& spec = L.spec();
  const std::size_t n = es.size();
  std::vector<std::vector<bool>> le(n, std::vector<bool>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) le[a][b] = leq_triples(spec, es[a].triple, es[b].triple);
  }
  std::size_t covers = 0;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b || !le[a][b]) continue;
      bool between = false;
      for (std::size_t c = 0; c < n && !between; ++c) {
        between = c != a && c != b && le[a][c] && le[c][b];
      }
      if (!between) ++covers;
    }
  }
  return covers;
}

std::vector<std::string> labels_of(const Lattice& L) {
  std::vector<std::string> out;
  for (const auto& e : L.elements()) out.push_back(std::string(to_string(e.family)) + ":" + e.order.str());
  return out;
}

}  // namespace

TEST_CASE("census line") {
  auto L = enumerate_lattice(parse_spec("S3^3"));
  CHECK(io::census_line(L.census()) == "total 38: sub-products 27, sign-parity 4, mixed 7");
}

TEST_CASE("order_json switches to a string past 64 bits") {
  CHECK(io::order_json(Order(720)) == nlohmann::json(720));
  Order big = factorial(25);
  CHECK(io::order_json(big) == nlohmann::json(big.str()));
}

TEST_CASE("lattice export") {
  auto L = enumerate_lattice(parse_spec("S3^2"));
  auto j = io::to_json(L);
  CHECK(j["spec"] == "S3^2");
  CHECK(j["elements"].size() == L.size());
  CHECK(j["census"]["total"] == 10);
  CHECK(j["hasse"].size() == covering_scan(L));
  for (std::size_t i = 0; i < L.size(); ++i) {
    const auto& e = L.at(i);
    const auto& je = j["elements"][i];
    CHECK(je["order"] == io::order_json(e.order));
    CHECK(je["triple"]["J"].size() == e.triple.J.size());
    CHECK(je["triple"]["P"].size() + e.triple.J.size() == 2);
    CHECK(je["triple"]["H"].size() == static_cast<std::size_t>(e.triple.H.dim()));
  }
}

TEST_CASE("mixed element triple serializes bitstrings") {
  auto L = enumerate_lattice(parse_spec("S3^3"));
  bool seen = false;
  for (const auto& e : L.elements()) {
    if (e.family != Family::Mixed) continue;
    auto t = io::to_json(e.triple);
    for (const auto& row : t["H"]) CHECK(row.get<std::string>().size() == e.triple.J.size());
    seen = true;
  }
  CHECK(seen);
}

TEST_CASE("hasse DOT edge counts") {
  SUBCASE("S4 is a path") {
    auto L = enumerate_lattice(parse_spec("S4"));
    auto dot = io::hasse_dot(L.poset(), labels_of(L));
    CHECK(count_matches(dot, "\\[label=") == 4);
    CHECK(count_matches(dot, "->") == 3);
    CHECK(dot.find("label=\"SubProduct:12\"") != std::string::npos);
  }
  SUBCASE("S3^2 matches a covering scan") {
    auto L = enumerate_lattice(parse_spec("S3^2"));
    auto dot = io::hasse_dot(L.poset(), labels_of(L));
    CHECK(count_matches(dot, "\\[label=") == 10);
    CHECK(count_matches(dot, "->") == covering_scan(L));
  }
  SUBCASE("S3^2*S4 matches a covering scan") {
    auto L = enumerate_lattice(parse_spec("S3^2*S4"));
    CHECK(L.poset().covers().size() == covering_scan(L));
  }
  SUBCASE("C2^2 lattice") {
    auto lemma = oracle::lemma_lattices().at("C2^2");
    std::vector<std::string> labels;
    for (auto o : lemma.orders) labels.push_back("normal:" + std::to_string(o));
    auto dot = io::hasse_dot(lemma.poset, labels);
    CHECK(count_matches(dot, "\\[label=") == 5);
    CHECK(count_matches(dot, "->") == 6);
  }
}

TEST_CASE("report exports") {
  auto r = verify_product_formula(parse_spec("S3^3"));
  auto j = io::to_json(r);
  CHECK(j["predicted_order"] == 6);
  CHECK(j["brute_force_order"] == 6);
  CHECK(j["match"] == true);
  CHECK(j["generators"].size() == r.generators.size());

  auto o = io::to_json(oracle::differential_validate(parse_spec("S3^2")));
  CHECK(o["ok"] == true);
  CHECK_FALSE(o.contains("first_mismatch"));

  auto t = io::to_json(run_tower(parse_spec("S4^2*S3^2")));
  CHECK(t["steps"] == 3);
  CHECK(t["sharp"] == true);
  CHECK(t["nodes"][1] == "C2^2");
}
