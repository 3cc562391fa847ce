#pragma once

#include "segre/decompose.hpp"
#include "segre/numeric.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace segre {

/// Sparse multivariate polynomial over the rationals, monomials ordered
/// lexicographically. Exponents are machine ints: polynomial degrees here
/// are bounded by truncation orders and denominator counts, never by the
/// (arbitrary-precision) exponent data of the ideal.
struct Poly {
  int nvars = 0;
  std::map<std::vector<int>, Rat> coef;

  static Poly zero(int nvars) { return Poly{nvars, {}}; }
  static Poly constant(int nvars, const Rat& c);
  static Poly monomial(int nvars, const std::vector<int>& exp, const Rat& c);
  /// 1 + v.X
  static Poly one_plus_linear(const QVec& v);

  bool is_zero() const { return coef.empty(); }
  int total_degree() const;

  Poly& add_term(const std::vector<int>& exp, const Rat& c);
  Poly plus(const Poly& o) const;
  Poly minus(const Poly& o) const;
  Poly times(const Poly& o, int truncate_degree = -1) const;
  Poly scaled(const Rat& c) const;
  Poly truncated(int max_total_degree) const;
  Rat eval(const QVec& point) const;
  Rat coefficient(const std::vector<int>& exp) const;
  /// Substitute X_i = degrees[i] * H; returns a univariate polynomial.
  Poly substitute_hyperplane(const std::vector<Int>& degrees) const;
  /// Exact division; nullopt when the divisor does not divide exactly.
  /// The divisor must have constant term 1 (the only shape needed here).
  std::optional<Poly> divide_exact(const Poly& divisor) const;

  std::string str(const std::vector<std::string>& vars) const;
  bool operator==(const Poly& o) const {
    return nvars == o.nvars && coef == o.coef;
  }
};

/// coeff * X^numer_exp / prod_v (1 + v.X). Zero denominator vectors
/// (factors equal to 1) are dropped; factors are sorted.
struct ClassTerm {
  Rat coeff;
  std::vector<int> numer_exp;
  std::vector<QVec> denom;

  bool same_shape(const ClassTerm& o) const {
    return numer_exp == o.numer_exp && denom == o.denom;
  }
};

/// Finite sum of ClassTerms; normalized form merges terms with identical
/// shape and drops zero coefficients.
struct ClassExpr {
  int n = 0;
  std::vector<ClassTerm> terms;

  bool is_zero() const { return terms.empty(); }
};

struct TruncatedSeries {
  int n = 0;
  int max_degree = 0;
  Poly poly;  // truncated at total degree max_degree

  /// Coefficients of H^0..H^max_degree (univariate series only).
  std::vector<Rat> h_coeffs() const;
  bool operator==(const TruncatedSeries& o) const {
    return n == o.n && max_degree == o.max_degree && poly == o.poly;
  }
};

struct ClosedForm {
  Poly numerator;
  std::vector<std::pair<QVec, int>> denominator;  // (factor vector, power)
};

struct ExcessResult {
  Rat equivalence;
  Int bezout;
  Rat excess;  // bezout - equivalence
};

ClassTerm make_term(const Rat& coeff, std::vector<int> numer_exp,
                    std::vector<QVec> denom);
ClassExpr normalized(ClassExpr e);
ClassExpr expr_add(const ClassExpr& a, const ClassExpr& b);
ClassExpr expr_product(const ClassExpr& a, const ClassExpr& b);
/// Embed an expression into a larger variable set (new variables unused).
ClassExpr expr_embed(const ClassExpr& e, int new_n);

/// Closed form of the integral over one cell: k! Vol(pi_J(T)) X_J over the
/// product of (1 + v.X) for the simplex vertices, J the complement of the
/// extension set. Degenerate cells give the zero term.
ClassTerm cell_integral(const Cell& cell, int n);

ClassExpr sum_cells(const CellSet& cells);

/// Exact power-series expansion to total degree D.
TruncatedSeries to_series(const ClassExpr& expr, int D);

/// Substitute X_i = degrees[i] * H in the rational function itself;
/// the result is a univariate ClassExpr in H.
ClassExpr specialize_expr(const ClassExpr& expr,
                          const std::vector<Int>& degrees);

/// Specialized series up to H^ambient_dim.
TruncatedSeries specialize_series(const ClassExpr& expr,
                                  const std::vector<Int>& degrees,
                                  int ambient_dim);

/// Common denominator (max multiplicity over terms), exact numerator, then
/// best-effort cancellation by repeated exact division.
ClosedForm closed_form(const ClassExpr& expr);

/// Exact value at a point where no denominator factor vanishes.
Rat evaluate_exact(const ClassExpr& expr, const QVec& point);

/// Cross-multiplied polynomial identity test: a and b are equal as
/// rational functions.
bool equal_rational(const ClassExpr& a, const ClassExpr& b);

/// equivalence = [H^N] prod_i (1 + d_i H) * series, N = #degrees;
/// bezout = prod d_i; excess = bezout - equivalence. The series must be
/// univariate and truncated at (at least) H^N.
ExcessResult excess(const TruncatedSeries& specialized,
                    const std::vector<Int>& degrees);

}  // namespace segre
