#include "segre/classexpr.hpp"

#include <doctest.h>

using namespace segre;

namespace {

QVec qv(std::initializer_list<long> xs) {
  QVec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

Cell cell_of(std::vector<QVec> simplex, std::vector<int> w) {
  Cell c;
  c.simplex = std::move(simplex);
  c.extensions = std::move(w);
  c.engine = "fan";
  return c;
}

std::vector<Int> deg(std::initializer_list<long> xs) {
  std::vector<Int> v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

}  // namespace

TEST_CASE("cell integral: half strip") {
  ClassTerm t = cell_integral(cell_of({qv({0, 0}), qv({2, 6})}, {1}), 2);
  CHECK(t.coeff == 2);
  CHECK(t.numer_exp == std::vector<int>{1, 0});
  REQUIRE(t.denom.size() == 1);  // the origin factor is 1 and drops
  CHECK(t.denom[0] == qv({2, 6}));
}

TEST_CASE("cell integral: column over a triangle in R^3") {
  ClassTerm t = cell_integral(
      cell_of({qv({0, 0, 0}), qv({0, 1, 1}), qv({1, 0, 1})}, {2}), 3);
  CHECK(t.coeff == 1);
  CHECK(t.numer_exp == std::vector<int>{1, 1, 0});
  CHECK(t.denom == std::vector<QVec>{qv({0, 1, 1}), qv({1, 0, 1})});
}

TEST_CASE("cell integral: blow-up triangle") {
  ClassTerm t = cell_integral(
      cell_of({qv({0, 0}), qv({2, 0}), qv({0, 2})}, {}), 2);
  CHECK(t.coeff == 4);
  CHECK(t.numer_exp == std::vector<int>{1, 1});
  CHECK(t.denom == std::vector<QVec>{qv({0, 2}), qv({2, 0})});
}

TEST_CASE("cell integral: point cell of the full orthant") {
  ClassTerm t = cell_integral(cell_of({qv({0, 0, 0})}, {0, 1, 2}), 3);
  CHECK(t.coeff == 1);
  CHECK(t.numer_exp == std::vector<int>{0, 0, 0});
  CHECK(t.denom.empty());
}

TEST_CASE("cell integral rejects mismatched extensions") {
  CHECK_THROWS_AS(cell_integral(cell_of({qv({0, 0}), qv({2, 6})}, {}), 2),
                  std::invalid_argument);
}

TEST_CASE("degenerate cell integrates to zero") {
  ClassTerm t = cell_integral(cell_of({qv({0, 0}), qv({7, 0})}, {0}), 2);
  CHECK(t.coeff == 0);
}

TEST_CASE("sum of single-generator cells is the principal class") {
  CellSet cells;
  cells.n = 2;
  cells.cells.push_back(cell_of({qv({0, 0}), qv({3, 4})}, {0}));
  cells.cells.push_back(cell_of({qv({0, 0}), qv({3, 4})}, {1}));
  ClassExpr e = sum_cells(cells);
  REQUIRE(e.terms.size() == 2);  // shared denominator, numerators 4X2 and 3X1
  CHECK(e.terms[0].numer_exp == std::vector<int>{0, 1});
  CHECK(e.terms[0].coeff == 4);
  CHECK(e.terms[1].numer_exp == std::vector<int>{1, 0});
  CHECK(e.terms[1].coeff == 3);
  CHECK(e.terms[0].denom == e.terms[1].denom);
}

TEST_CASE("series expansion of the principal class") {
  ClassExpr e;
  e.n = 2;
  e.terms.push_back(make_term(3, {1, 0}, {qv({3, 4})}));
  e.terms.push_back(make_term(4, {0, 1}, {qv({3, 4})}));
  TruncatedSeries s = to_series(e, 2);
  // 3X1 + 4X2 - (3X1 + 4X2)^2
  CHECK(s.poly.coefficient({1, 0}) == 3);
  CHECK(s.poly.coefficient({0, 1}) == 4);
  CHECK(s.poly.coefficient({2, 0}) == -9);
  CHECK(s.poly.coefficient({1, 1}) == -24);
  CHECK(s.poly.coefficient({0, 2}) == -16);
  CHECK(s.poly.coefficient({0, 0}) == 0);
}

TEST_CASE("zero expression expands to the zero series") {
  ClassExpr zero;
  zero.n = 2;
  CHECK(to_series(zero, 3).poly.is_zero());
}

TEST_CASE("specialization and closed form of a CI class") {
  // 6 X1 X2 / ((1+2X1)(1+3X2)) with X1 = X2 = H
  ClassExpr e;
  e.n = 2;
  e.terms.push_back(make_term(6, {1, 1}, {qv({2, 0}), qv({0, 3})}));
  ClassExpr h = specialize_expr(e, deg({1, 1}));
  REQUIRE(h.terms.size() == 1);
  CHECK(h.terms[0].numer_exp == std::vector<int>{2});
  CHECK(h.terms[0].denom == std::vector<QVec>{qv({2}), qv({3})});
  ClosedForm cf = closed_form(h);
  CHECK(cf.numerator == Poly::monomial(1, {2}, 6));
  REQUIRE(cf.denominator.size() == 2);
}

TEST_CASE("closed form merges a shared denominator") {
  ClassExpr e;
  e.n = 2;
  e.terms.push_back(make_term(3, {1, 0}, {qv({3, 4})}));
  e.terms.push_back(make_term(4, {0, 1}, {qv({3, 4})}));
  ClosedForm cf = closed_form(e);
  Poly expected = Poly::monomial(2, {1, 0}, 3).plus(Poly::monomial(2, {0, 1}, 4));
  CHECK(cf.numerator == expected);
  REQUIRE(cf.denominator.size() == 1);
  CHECK(cf.denominator[0].first == qv({3, 4}));
  CHECK(cf.denominator[0].second == 1);
}

TEST_CASE("closed form cancels a removable factor") {
  // X1/[(1+X1)(1+X2)] + X1 X2/[(1+X1)(1+X2)] = X1/(1+X1)
  ClassExpr e;
  e.n = 2;
  e.terms.push_back(make_term(1, {1, 0}, {qv({1, 0}), qv({0, 1})}));
  e.terms.push_back(make_term(1, {1, 1}, {qv({1, 0}), qv({0, 1})}));
  ClosedForm cf = closed_form(e);
  CHECK(cf.numerator == Poly::monomial(2, {1, 0}, 1));
  REQUIRE(cf.denominator.size() == 1);
  CHECK(cf.denominator[0].first == qv({1, 0}));
}

TEST_CASE("exact evaluation") {
  ClassExpr e;
  e.n = 2;
  e.terms.push_back(make_term(3, {1, 0}, {qv({3, 4})}));
  e.terms.push_back(make_term(4, {0, 1}, {qv({3, 4})}));
  CHECK(evaluate_exact(e, qv({1, 1})) == Rat(7, 8));
  ClassExpr zero;
  zero.n = 2;
  CHECK(evaluate_exact(zero, qv({5, 7})) == 0);
}

TEST_CASE("evaluation reports vanishing denominators") {
  ClassExpr e;
  e.n = 1;
  e.terms.push_back(make_term(1, {1}, {qv({1})}));
  CHECK_THROWS_AS(evaluate_exact(e, qv({-1})), std::domain_error);
}

TEST_CASE("rational function equality by cross multiplication") {
  // X1X2/D + X1/(1+X1+X2) + X2X3/D  ==  X1X3/D + X1/(1+X1+X3) + X2X3/D
  // with D = (1+X1+X2)(1+X1+X3): two tilings of the same region
  QVec a = qv({1, 1, 0}), b = qv({1, 0, 1});
  ClassExpr lhs, rhs;
  lhs.n = rhs.n = 3;
  lhs.terms.push_back(make_term(1, {1, 1, 0}, {a, b}));
  lhs.terms.push_back(make_term(1, {1, 0, 0}, {a}));
  lhs.terms.push_back(make_term(1, {0, 1, 1}, {a, b}));
  rhs.terms.push_back(make_term(1, {1, 0, 1}, {a, b}));
  rhs.terms.push_back(make_term(1, {1, 0, 0}, {b}));
  rhs.terms.push_back(make_term(1, {0, 1, 1}, {a, b}));
  CHECK(equal_rational(lhs, rhs));
  rhs.terms[0].coeff = 2;
  CHECK_FALSE(equal_rational(lhs, rhs));
}

TEST_CASE("excess numbers") {
  ClassExpr e;
  e.n = 1;
  // threelines specialized: 3H^2 - 10H^3 to order 3
  e.terms.push_back(make_term(3, {2}, {qv({2}), qv({2})}));
  e.terms.push_back(make_term(2, {3}, {qv({2}), qv({2}), qv({2})}));
  TruncatedSeries s = to_series(e, 3);
  CHECK(s.poly.coefficient({2}) == 3);
  CHECK(s.poly.coefficient({3}) == -10);
  ExcessResult ex = excess(s, deg({2, 2, 2}));
  CHECK(ex.equivalence == 8);
  CHECK(ex.bezout == 8);
  CHECK(ex.excess == 0);
}

TEST_CASE("excess of the zero series") {
  TruncatedSeries s{1, 3, Poly::zero(1)};
  ExcessResult ex = excess(s, deg({2, 3, 4}));
  CHECK(ex.equivalence == 0);
  CHECK(ex.bezout == 24);
  CHECK(ex.excess == 24);
}

TEST_CASE("excess of a hypersurface meets Bezout") {
  // s = mH/(1+mH) in P^4, all cutting degrees m
  const long m = 3;
  const int N = 4;
  ClassExpr e;
  e.n = 1;
  e.terms.push_back(make_term(m, {1}, {qv({m})}));
  ExcessResult ex = excess(to_series(e, N), deg({m, m, m, m}));
  CHECK(ex.equivalence == 81);
  CHECK(ex.excess == 0);
}

TEST_CASE("excess validates series order") {
  TruncatedSeries s{1, 2, Poly::zero(1)};
  CHECK_THROWS_AS(excess(s, deg({2, 2, 2})), std::invalid_argument);
}

TEST_CASE("polynomial exact division") {
  Poly d = Poly::one_plus_linear(qv({6}));
  Poly p = Poly::monomial(1, {1}, 2).times(d);
  auto q = p.divide_exact(d);
  REQUIRE(q.has_value());
  CHECK(*q == Poly::monomial(1, {1}, 2));
  CHECK_FALSE(Poly::monomial(1, {1}, 1).divide_exact(d).has_value());
}
