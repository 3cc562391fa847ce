#include "segre/ideal.hpp"

#include <doctest.h>

using namespace segre;

namespace {

IVec iv(std::initializer_list<long> xs) {
  IVec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

}  // namespace

TEST_CASE("parse monomial list") {
  MonomialIdealSpec spec = parse_ideal("x1^2*x2^6, x1^7");
  CHECK(spec.n == 2);
  REQUIRE(spec.generators.size() == 2);
  CHECK(spec.generators[0] == iv({2, 6}));
  CHECK(spec.generators[1] == iv({7, 0}));
  CHECK_FALSE(spec.unit_ideal);
}

TEST_CASE("parse single variable") {
  MonomialIdealSpec spec = parse_ideal("x1");
  CHECK(spec.n == 1);
  REQUIRE(spec.generators.size() == 1);
  CHECK(spec.generators[0] == iv({1}));
}

TEST_CASE("parse integer rows") {
  MonomialIdealSpec spec = parse_ideal("2 6\n3 4\n4 3\n5 1\n7 0");
  CHECK(spec.n == 2);
  CHECK(spec.generators.size() == 5);
  CHECK(spec.generators.front() == iv({2, 6}));
  CHECK(spec.generators.back() == iv({7, 0}));
}

TEST_CASE("parse unit ideal and implicit exponents") {
  CHECK(parse_ideal("1").unit_ideal);
  CHECK(parse_ideal("x1*x2, 1").unit_ideal);
  CHECK(parse_ideal("x1^0").unit_ideal);  // empty product
  MonomialIdealSpec spec = parse_ideal("x1*x2^3*x1");
  CHECK(spec.generators[0] == iv({2, 3}));  // repeated factors accumulate
}

TEST_CASE("parse dedups generators") {
  MonomialIdealSpec spec = parse_ideal("x1^2, x1^2, 2 0");
  CHECK(spec.n == 2);
  CHECK(spec.generators.size() == 1);
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_ideal(""), ParseError);
  CHECK_THROWS_AS(parse_ideal("y1^2"), ParseError);
  CHECK_THROWS_AS(parse_ideal("x1^-2"), ParseError);
  CHECK_THROWS_AS(parse_ideal("-1 2"), ParseError);
  CHECK_THROWS_AS(parse_ideal("1 2, 3 4 5"), ParseError);
  CHECK_THROWS_AS(parse_ideal("x3", 2), ParseError);
  CHECK_THROWS_AS(parse_ideal("x1*"), ParseError);
}

TEST_CASE("minimalize drops generators inside the region") {
  MonomialIdealSpec spec =
      make_spec(2, {iv({2, 6}), iv({3, 4}), iv({4, 3}), iv({5, 1}), iv({7, 0})});
  MonomialIdealSpec min = minimalize(spec);
  REQUIRE(min.generators.size() == 4);
  CHECK(min.generators[0] == iv({2, 6}));
  CHECK(min.generators[1] == iv({3, 4}));
  CHECK(min.generators[2] == iv({5, 1}));
  CHECK(min.generators[3] == iv({7, 0}));
}

TEST_CASE("minimalize keeps a single generator") {
  MonomialIdealSpec min = minimalize(make_spec(2, {iv({3, 4})}));
  REQUIRE(min.generators.size() == 1);
  CHECK(min.generators[0] == iv({3, 4}));
}

TEST_CASE("minimalize drops points on hull edges") {
  // (1,1) lies on the segment (2,0)-(0,2)
  MonomialIdealSpec min =
      minimalize(make_spec(2, {iv({2, 0}), iv({1, 1}), iv({0, 2})}));
  REQUIRE(min.generators.size() == 2);
  CHECK(min.generators[0] == iv({0, 2}));
  CHECK(min.generators[1] == iv({2, 0}));
}

TEST_CASE("minimalize is idempotent and order independent") {
  MonomialIdealSpec a =
      make_spec(2, {iv({7, 0}), iv({4, 3}), iv({2, 6}), iv({3, 4}), iv({5, 1})});
  MonomialIdealSpec m1 = minimalize(a);
  MonomialIdealSpec m2 = minimalize(m1);
  CHECK(m1.generators == m2.generators);
}

TEST_CASE("unit ideal passes through minimalize") {
  MonomialIdealSpec u = make_spec(2, {iv({0, 0}), iv({1, 2})});
  CHECK(u.unit_ideal);
  CHECK(minimalize(u).unit_ideal);
}

TEST_CASE("permute variables") {
  MonomialIdealSpec spec = make_spec(3, {iv({1, 2, 3})});
  MonomialIdealSpec p = permute_variables(spec, {2, 0, 1});
  CHECK(p.generators[0] == iv({2, 3, 1}));
}
