#include "doctest.h"
#include "lattower/error.hpp"
#include "lattower/tower.hpp"

using namespace lattower;

TEST_CASE("latauto_step examples") {
  CHECK(std::get<PairNode>(latauto_step(parse_spec("S4^2*S3^2"))) == PairNode{2, 2});
  CHECK(std::get<PairNode>(latauto_step(PairNode{2, 2})) == PairNode{0, 3});
  CHECK(std::get<PairNode>(latauto_step(PairNode{0, 3})) == PairNode{0, 0});
}

TEST_CASE("case table") {
  CHECK(std::get<PairNode>(latauto_step(PairNode{1, 1})) == PairNode{0, 0});
  CHECK(std::get<PairNode>(latauto_step(PairNode{2, 0})) == PairNode{0, 0});
  CHECK(std::get<PairNode>(latauto_step(PairNode{1, 2})) == PairNode{0, 0});
  CHECK(std::get<PairNode>(latauto_step(PairNode{0, 7})) == PairNode{0, 0});
  CHECK(std::get<PairNode>(latauto_step(PairNode{2, 5})) == PairNode{0, 2});
  CHECK(std::get<PairNode>(latauto_step(PairNode{3, 2})) == PairNode{0, 2});
  CHECK(std::get<PairNode>(latauto_step(PairNode{4, 4})) == PairNode{2, 0});
  CHECK(std::get<PairNode>(latauto_step(PairNode{4, 5})) == PairNode{1, 1});
  CHECK(std::get<PairNode>(latauto_step(PairNode{3, 6})) == PairNode{0, 2});
  // symmetric in its two coordinates
  for (int a = 0; a <= 12; ++a) {
    for (int b = 0; b <= 12; ++b) {
      auto x = std::get<PairNode>(latauto_step(PairNode{a, b}));
      auto y = std::get<PairNode>(latauto_step(PairNode{b, a}));
      CHECK(x == y);
      CHECK(x.a + x.b <= 3);
    }
  }
}

TEST_CASE("describe") {
  CHECK(describe(PairNode{2, 2}) == "C2^2");
  CHECK(describe(PairNode{0, 3}) == "S3");
  CHECK(describe(PairNode{1, 1}) == "1");
  CHECK(describe(PairNode{2, 3}) == "C2*S3");
  CHECK(describe(PairNode{5, 4}) == "S4*S5");
  CHECK(describe(parse_spec("S5^2*S3^2")) == "S5^2*S3^2");
}

TEST_CASE("run_tower examples") {
  auto r = run_tower(parse_spec("S3^3"));
  CHECK(r.length() == 2);
  CHECK(format_run(r) == "G_0 = S3^3 → G_1 = S3 → G_2 = 1 (2 steps)");

  auto sharp = run_tower(parse_spec("S4^2*S3^2"));
  CHECK(sharp.length() == 3);
  CHECK_FALSE(is_trivial(sharp.nodes[2]));
  CHECK(format_run(sharp) == "G_0 = S4^2*S3^2 → G_1 = C2^2 → G_2 = S3 → G_3 = 1 (3 steps, sharp)");

  CHECK(run_tower(parse_spec("1")).length() == 0);
  CHECK(run_tower(parse_spec("S5^2*S3^2")).length() == 2);
  CHECK(run_tower(parse_spec("S4^3")).length() == 2);
  CHECK(format_run(run_tower(parse_spec("S7"))) == "G_0 = S7 → G_1 = 1 (1 step)");
}

TEST_CASE("termination over all specs with T <= 6, degrees 3..7") {
  int specs = 0;
  std::map<int, int> exps;
  // all multisets of size <= 6 over {3,...,7}
  for (int a3 = 0; a3 <= 6; ++a3)
    for (int a4 = 0; a3 + a4 <= 6; ++a4)
      for (int a5 = 0; a3 + a4 + a5 <= 6; ++a5)
        for (int a6 = 0; a3 + a4 + a5 + a6 <= 6; ++a6)
          for (int a7 = 0; a3 + a4 + a5 + a6 + a7 <= 6; ++a7) {
            auto spec = make_spec({{3, a3}, {4, a4}, {5, a5}, {6, a6}, {7, a7}});
            auto run = run_tower(spec);
            CHECK(run.length() <= 3);
            CHECK(is_trivial(run.nodes.back()));
            if (!spec.trivial()) {
              CHECK(std::get<PairNode>(run.nodes[1]) == PairNode{spec.a4(), spec.B()});
            }
            ++specs;
          }
  CHECK(specs == 462);
}

TEST_CASE("verify_step_against_lattice examples") {
  auto diamond = verify_step_against_lattice(PairNode{2, 2});
  CHECK(diamond.source == "perm_oracle");
  CHECK(diamond.brute_force_order == 6);
  CHECK(diamond.match);

  auto c2s3 = verify_step_against_lattice(PairNode{2, 3});
  CHECK(c2s3.brute_force_order == 2);
  CHECK(c2s3.match);

  auto s4s5 = verify_step_against_lattice(PairNode{4, 5});
  CHECK(s4s5.source == "lattice_core");
  CHECK(s4s5.brute_force_order == 1);
  CHECK(s4s5.predicted == "1");
  CHECK(s4s5.match);

  auto start = verify_step_against_lattice(parse_spec("S4^2*S3^2"));
  CHECK(start.brute_force_order == 4);
  CHECK(start.match);

  auto big = verify_step_against_lattice(PairNode{2, 9});
  CHECK(big.skipped);
  CHECK_FALSE(big.warning.empty());
}

TEST_CASE("case table agrees with the lattice wherever it is computable") {
  int checked = 0;
  for (int a = 0; a <= 12; ++a) {
    for (int b = 0; b <= 12; ++b) {
      auto c = verify_step_against_lattice(PairNode{a, b});
      if (c.skipped) continue;
      INFO("Pair(" << a << ", " << b << ")");
      CHECK(c.match);
      ++checked;
    }
  }
  CHECK(checked > 150);
}
