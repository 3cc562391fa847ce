#pragma once

#include "segre/classexpr.hpp"
#include "segre/ideal.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace segre {

/// Principal ideal (X^I): (i1 X1 + ... + in Xn) / (1 + i1 X1 + ... + in Xn).
/// Zero class for I = 0.
ClassExpr principal_class(const IVec& I);

/// Complete intersection of pure powers: prod_i m_i X_i / (1 + m_i X_i).
ClassExpr complete_intersection_class(const std::vector<Int>& m);

/// Exponents f_j = (1,...,1) - e_j (singularity subscheme of a normal
/// crossings union): 1 - (1 + X1 + ... + Xn)^{n-1} / prod_j (1 + f_j.X).
ClassExpr singularity_family_class(int n);

class QuadratureError : public std::runtime_error {
 public:
  explicit QuadratureError(const std::string& what)
      : std::runtime_error(what) {}
};

/// Numeric integral of n! X1...Xn / (1 + a.X)^{n+1} over the cell, with the
/// simplex mapped to the unit cube (Duffy) and extension rays via
/// a = u/(1-u). Adaptive dyadic subdivision with tensor Gauss-Legendre
/// panels until the estimated relative error is below tol.
double quadrature_cell(const Cell& cell, int n, const std::vector<double>& X,
                       double tol);

struct OracleCheck {
  std::string name;
  bool pass = false;
  std::string lhs, rhs;
  std::string tolerance;  // "exact" or a numeric bound
};

struct OracleReport {
  std::vector<OracleCheck> checks;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

struct CrossCheckOptions {
  Rat grid_step = Rat(1, 4);
  Rat box_margin = 2;
  double quad_rel_tol = 1e-6;
  int random_points = 5;
  std::uint64_t seed = 0;  // 0: use SEGRE_SEED env var or built-in default
  int jobs = 1;
};

/// Independent ground truths for one spec: engine agreement (n = 2),
/// per-cell quadrature, family oracles when applicable, tiling validation.
OracleReport cross_check(const MonomialIdealSpec& spec,
                         const CrossCheckOptions& options = {});

/// Seed resolution: explicit value, else SEGRE_SEED, else a fixed default.
std::uint64_t resolve_seed(std::uint64_t requested);

}  // namespace segre
