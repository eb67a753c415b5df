#include "doctest.h"
#include "lattower/error.hpp"
#include "lattower/group_spec.hpp"

using namespace lattower;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::Mismatch;
}

}  // namespace

TEST_CASE("make_spec computes T, a4, B and canonical slots") {
  auto s33 = make_spec({{3, 3}});
  CHECK(s33.T() == 3);
  CHECK(s33.a4() == 0);
  CHECK(s33.B() == 3);

  auto trivial = make_spec({});
  CHECK(trivial.T() == 0);
  CHECK(trivial.trivial());
  CHECK(trivial.group_order() == 1);

  auto sharp = make_spec({{4, 2}, {3, 2}});
  CHECK(sharp.T() == 4);
  CHECK(sharp.a4() == 2);
  CHECK(sharp.B() == 2);
  // lexicographic (k, i): S3 copies first
  REQUIRE(sharp.slots().size() == 4);
  CHECK(sharp.slot(0) == FactorSlot{3, 1, SlotClass::B, 0});
  CHECK(sharp.slot(1) == FactorSlot{3, 2, SlotClass::B, 1});
  CHECK(sharp.slot(2) == FactorSlot{4, 1, SlotClass::A, 2});
  CHECK(sharp.slot(3) == FactorSlot{4, 2, SlotClass::A, 3});
  CHECK(sharp.group_order() == 24 * 24 * 6 * 6);
}

TEST_CASE("make_spec drops zero exponents and rejects bad input") {
  auto s = make_spec({{3, 1}, {5, 0}});
  CHECK(s.exponents().size() == 1);
  CHECK(kind_of([] { make_spec({{2, 1}}); }) == ErrorKind::DegreeTooSmall);
  CHECK(kind_of([] { make_spec({{3, -1}}); }) == ErrorKind::NegativeExponent);
  CHECK(kind_of([] { make_spec({{21, 1}}); }) == ErrorKind::DegreeTooLarge);
  CHECK(make_spec({{25, 1}}, 30).T() == 1);
}

TEST_CASE("slot counts per class") {
  auto s = make_spec({{3, 2}, {4, 3}, {7, 1}});
  int a = 0;
  for (const auto& slot : s.slots()) a += slot.cls == SlotClass::A;
  CHECK(s.T() == 6);
  CHECK(a == s.a4());
  CHECK(s.T() - a == s.B());
  for (int i = 0; i < s.T(); ++i) CHECK(s.slot(i).index == i);
}

TEST_CASE("parse_spec grammar") {
  CHECK(parse_spec("S3^3") == make_spec({{3, 3}}));
  CHECK(parse_spec(" s4 ^2 *S3^ 2") == make_spec({{4, 2}, {3, 2}}));
  CHECK(parse_spec("S5^2*S3^2").to_string() == "S5^2*S3^2");
  CHECK(parse_spec("S3*S3") == make_spec({{3, 2}}));
  CHECK(parse_spec("S3*S4").to_string() == "S4*S3");
  CHECK(parse_spec("1").trivial());
  CHECK(parse_spec("").trivial());
  CHECK(make_spec({}).to_string() == "1");

  CHECK(kind_of([] { parse_spec("S3^"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_spec("T3"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_spec("S3**S4"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_spec("S2"); }) == ErrorKind::DegreeTooSmall);
  CHECK(kind_of([] { parse_spec("S3^-1"); }) == ErrorKind::NegativeExponent);

  try {
    parse_spec("S3 * X4");
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("position 5") != std::string::npos);
  }
}

TEST_CASE("chain of N(S_k)") {
  using enum ChainPos;
  CHECK(chain(3) == std::vector{Triv, Alt, Full});
  CHECK(chain(4) == std::vector{Triv, V, Alt, Full});
  CHECK(chain(5) == std::vector{Triv, Alt, Full});
  CHECK(kind_of([] { chain(2); }) == ErrorKind::DegreeTooSmall);

  CHECK(chain_cardinality(4, V) == 4);
  CHECK(chain_cardinality(5, Alt) == 60);
  CHECK(chain_cardinality(3, Full) == 6);
  CHECK(chain_rank(5, Alt) == 1);
  CHECK(chain_rank(4, Alt) == 2);
  CHECK(kind_of([] { chain_cardinality(3, V); }) == ErrorKind::IllegalChainPosition);
}

TEST_CASE("chain_iso") {
  using enum ChainPos;
  auto iso = chain_iso(3, 5);
  CHECK(iso == std::map<ChainPos, ChainPos>{{Triv, Triv}, {Alt, Alt}, {Full, Full}});
  auto id4 = chain_iso(4, 4);
  for (auto p : chain(4)) CHECK(id4.at(p) == p);
  CHECK(kind_of([] { chain_iso(4, 3); }) == ErrorKind::ChainLengthMismatch);
}

TEST_CASE("chain_iso composes within a class") {
  const std::vector<int> b_degrees{3, 5, 6, 7, 9};
  for (int k1 : b_degrees) {
    for (int k2 : b_degrees) {
      for (int k3 : b_degrees) {
        auto f = chain_iso(k1, k2);
        auto g = chain_iso(k2, k3);
        auto h = chain_iso(k1, k3);
        for (auto p : chain(k1)) CHECK(g.at(f.at(p)) == h.at(p));
      }
    }
  }
}
