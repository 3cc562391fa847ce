#pragma once

#include "segre/classexpr.hpp"
#include "segre/decompose.hpp"
#include "segre/ideal.hpp"
#include "segre/newton.hpp"

#include <optional>
#include <vector>

namespace segre {

enum class Engine { Fan, Staircase, Both };

struct SegreOptions {
  Engine engine = Engine::Fan;
  int truncate = -1;                // series order; default n (or ambient_dim)
  std::vector<Int> degrees;        // deg X_i for specialization; default all 1
  int ambient_dim = -1;            // default n
  bool specialize = true;
  int staircase_depth_limit = 64;
};

struct SegreOutput {
  MonomialIdealSpec spec;      // canonicalized input
  MonomialIdealSpec minimal;   // generators = polyhedron vertices
  CellSet cells;
  std::vector<std::pair<Cell, ClassTerm>> breakdown;  // effective cells only
  ClassExpr class_expr;
  TruncatedSeries series;                    // n-variate, to `truncate`
  std::optional<ClassExpr> specialized_expr; // univariate in H
  std::optional<TruncatedSeries> specialized;
  std::optional<ClosedForm> closed;          // of the specialized expr
  bool conjectural = false;                  // n > 2
};

/// Full pipeline: canonicalize -> minimalize -> polyhedron -> decompose ->
/// sum cell integrals -> series / specialization / closed form.
SegreOutput compute_segre(const MonomialIdealSpec& spec,
                          const SegreOptions& options = {});

}  // namespace segre
