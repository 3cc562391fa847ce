#include "segre/json_io.hpp"
#include "segre/oracles.hpp"
#include "segre/segre.hpp"

#include <doctest.h>

#include <set>

using namespace segre;

namespace {

IVec iv(std::initializer_list<long> xs) {
  IVec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

std::vector<Int> ints(std::initializer_list<long> xs) {
  std::vector<Int> v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

std::vector<Rat> rats(std::initializer_list<long> xs) {
  std::vector<Rat> v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

SegreOutput introex_output() {
  SegreOptions opt;
  opt.degrees = ints({1, 1});
  opt.ambient_dim = 5;
  return compute_segre(parse_ideal("x1^2*x2^6,x1^3*x2^4,x1^4*x2^3,x1^5*x2,x1^7"),
                       opt);
}

}  // namespace

TEST_CASE("introex pipeline: series, closed form, breakdown") {
  SegreOutput out = introex_output();
  CHECK_FALSE(out.conjectural);
  REQUIRE(out.specialized.has_value());
  CHECK(out.specialized->h_coeffs() ==
        rats({0, 2, 18, -334, 3714, -35278}));

  REQUIRE(out.closed.has_value());
  Poly expected_num = Poly::monomial(1, {1}, 2)
                          .plus(Poly::monomial(1, {2}, 60))
                          .plus(Poly::monomial(1, {3}, 336));
  CHECK(out.closed->numerator == expected_num);  // 2H(1 + 30H + 168H^2)
  REQUIRE(out.closed->denominator.size() == 3);
  CHECK(out.closed->denominator[0].first == QVec{Rat(6)});
  CHECK(out.closed->denominator[1].first == QVec{Rat(7)});
  CHECK(out.closed->denominator[2].first == QVec{Rat(8)});

  // per-cell terms, specialized at X1 = X2 = H, as multisets of strings
  std::multiset<std::string> got;
  for (const auto& [cell, term] : out.breakdown) {
    ClassExpr one;
    one.n = 2;
    one.terms.push_back(term);
    got.insert(expr_str(specialize_expr(one, ints({1, 1})), {"H"}));
  }
  std::multiset<std::string> expected = {
      "2*H / [(1 + 8*H)]",
      "10*H^2 / [(1 + 7*H)*(1 + 8*H)]",
      "17*H^2 / [(1 + 6*H)*(1 + 7*H)]",
      "7*H^2 / [(1 + 6*H)*(1 + 7*H)]",
  };
  CHECK(got == expected);

  CHECK(evaluate_exact(*out.specialized_expr, {Rat(1)}) == Rat(199, 252));
}

TEST_CASE("threelines pipeline") {
  SegreOptions opt;
  opt.degrees = ints({1, 1, 1});
  opt.ambient_dim = 3;
  SegreOutput out = compute_segre(parse_ideal("x1*x2,x1*x3,x2*x3"), opt);
  CHECK(out.conjectural);
  CHECK(out.specialized->h_coeffs() == rats({0, 0, 3, -10}));
  // (3H^2 + 8H^3) / (1+2H)^3
  Poly expected_num =
      Poly::monomial(1, {2}, 3).plus(Poly::monomial(1, {3}, 8));
  CHECK(out.closed->numerator == expected_num);
  REQUIRE(out.closed->denominator.size() == 1);
  CHECK(out.closed->denominator[0].first == QVec{Rat(2)});
  CHECK(out.closed->denominator[0].second == 3);

  ExcessResult ex = excess(*out.specialized, ints({2, 2, 2}));
  CHECK(ex.equivalence == 8);
  CHECK(ex.excess == 0);
}

TEST_CASE("unit ideal yields the zero class") {
  SegreOutput out = compute_segre(parse_ideal("x1*x2, 1"));
  CHECK(out.spec.unit_ideal);
  CHECK(out.class_expr.is_zero());
  CHECK(out.series.poly.is_zero());
  CHECK(out.specialized->poly.is_zero());
}

TEST_CASE("n = 1 principal ideal") {
  SegreOutput out = compute_segre(parse_ideal("x1^4"));
  CHECK(equal_rational(out.class_expr, principal_class(iv({4}))));
  CHECK(out.specialized->h_coeffs()[1] == 4);
}

TEST_CASE("unit vectors give the transverse intersection class") {
  SegreOutput out = compute_segre(parse_ideal("x1,x2,x3"));
  CHECK(equal_rational(out.class_expr,
                       complete_intersection_class(ints({1, 1, 1}))));
}

TEST_CASE("dominated generators never change the output") {
  SegreOptions opt;
  MonomialIdealSpec base = parse_ideal("x1^2*x2^6,x1^5*x2,x1^7");
  SegreOutput a = compute_segre(base, opt);
  MonomialIdealSpec fat = parse_ideal("x1^2*x2^6,x1^5*x2,x1^7,x1^3*x2^7,x1^9");
  SegreOutput b = compute_segre(fat, opt);
  CHECK(a.series.poly == b.series.poly);
  CHECK(output_json(a)["class"] == output_json(b)["class"]);
  CHECK(a.minimal.generators == b.minimal.generators);
}

TEST_CASE("permutation equivariance") {
  MonomialIdealSpec spec = parse_ideal("x1^2*x2,x2^3*x3,x1*x3^2");
  std::vector<int> perm = {2, 0, 1};
  SegreOutput direct = compute_segre(permute_variables(spec, perm));
  SegreOutput base = compute_segre(spec);
  Poly relabeled = Poly::zero(3);
  for (const auto& [e, c] : base.series.poly.coef) {
    std::vector<int> pe(3);
    for (int i = 0; i < 3; ++i) pe[perm[i]] = e[i];
    relabeled.add_term(pe, c);
  }
  CHECK(direct.series.poly == relabeled);
}

TEST_CASE("constant series term vanishes for non-unit ideals") {
  for (const char* text : {"x1^3*x2, x1*x2^2", "x1*x2*x3", "x2^5"}) {
    SegreOutput out = compute_segre(parse_ideal(text));
    CHECK(out.series.poly.coefficient(std::vector<int>(out.spec.n, 0)) == 0);
  }
}

TEST_CASE("engine 'both' cross-validates silently on agreement") {
  SegreOptions opt;
  opt.engine = Engine::Both;
  SegreOutput out = compute_segre(parse_ideal("x1^2*x2^6,x1^5*x2,x1^7"), opt);
  CHECK_FALSE(out.class_expr.is_zero());
}

TEST_CASE("cone compatibility with an extra pure power") {
  // two-variable ideal extended by x3^m: the class is the product of the
  // pure-power class with the embedded two-variable class
  MonomialIdealSpec base = parse_ideal("x1^2*x2,x1*x2^3");
  const long m = 2;
  MonomialIdealSpec cone =
      make_spec(3, {iv({2, 1, 0}), iv({1, 3, 0}), iv({0, 0, m})});
  SegreOptions opt;
  opt.truncate = 6;
  opt.specialize = false;
  SegreOutput lhs = compute_segre(cone, opt);

  SegreOutput plane = compute_segre(base, opt);
  ClassExpr factor;
  factor.n = 3;
  factor.terms.push_back(make_term(m, {0, 0, 1}, {{Rat(0), Rat(0), Rat(m)}}));
  ClassExpr rhs = expr_product(factor, expr_embed(plane.class_expr, 3));
  CHECK(to_series(rhs, 6).poly == lhs.series.poly);
}

TEST_CASE("json output round trips through the parser") {
  SegreOutput out = introex_output();
  nlohmann::json j = output_json(out);
  std::string gens;
  for (const auto& g : j["ideal"]["generators"]) {
    std::string row;
    for (const auto& e : g) row += e.dump() + " ";
    gens += row + "\n";
  }
  SegreOptions opt;
  opt.degrees = ints({1, 1});
  opt.ambient_dim = 5;
  SegreOutput again = compute_segre(parse_ideal(gens), opt);
  CHECK(output_json(again) == j);
}

TEST_CASE("text rendering matches the transcript style") {
  SegreOutput out = introex_output();
  CHECK(series_ascending_str(*out.specialized) ==
        "2H + 18H^2 - 334H^3 + 3714H^4 - 35278H^5");
  CHECK(series_descending_str(*out.specialized) ==
        "- 35278H^5 + 3714H^4 - 334H^3 + 18H^2 + 2H");
  CHECK(series_bracket_str(*out.specialized, 5) ==
        "2[P^4] + 18[P^3] - 334[P^2] + 3714[P^1] - 35278[P^0]");
  CHECK(closed_form_str(*out.closed, {"H"}) ==
        "(2*H + 60*H^2 + 336*H^3) / [(1 + 6*H)*(1 + 7*H)*(1 + 8*H)]");
}

TEST_CASE("oracle report renders a table") {
  OracleReport r = cross_check(parse_ideal("x1^2, x2^3"),
                               CrossCheckOptions{});
  std::string table = report_table(r);
  CHECK(table.find("fan-vs-complete-intersection") != std::string::npos);
  CHECK(table.find("PASS") != std::string::npos);
}
