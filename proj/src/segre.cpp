#include "segre/segre.hpp"

#include <stdexcept>

namespace segre {

SegreOutput compute_segre(const MonomialIdealSpec& spec,
                          const SegreOptions& options) {
  SegreOutput out;
  out.spec = make_spec(spec.n, spec.generators);
  out.conjectural = spec.n > 2;

  const int ambient =
      options.ambient_dim > 0 ? options.ambient_dim : spec.n;
  std::vector<Int> degrees = options.degrees;
  if (degrees.empty()) degrees.assign(spec.n, 1);
  if (static_cast<int>(degrees.size()) != spec.n)
    throw std::invalid_argument("degrees length must equal variable count");
  const int D =
      options.truncate > 0 ? options.truncate
                           : (options.specialize ? ambient : spec.n);

  if (out.spec.unit_ideal) {
    // empty subscheme: zero class throughout
    out.minimal = out.spec;
    out.cells.n = spec.n;
    out.class_expr.n = spec.n;
    out.series = TruncatedSeries{spec.n, D, Poly::zero(spec.n)};
    if (options.specialize) {
      ClassExpr zero1;
      zero1.n = 1;
      out.specialized_expr = zero1;
      out.specialized = TruncatedSeries{1, ambient, Poly::zero(1)};
      out.closed = closed_form(zero1);
    }
    return out;
  }

  out.minimal = minimalize(out.spec);
  NewtonPolyhedron poly = build_polyhedron(out.minimal);

  switch (options.engine) {
    case Engine::Fan:
      out.cells = decompose_fan(poly);
      break;
    case Engine::Staircase:
      out.cells = decompose_staircase(out.minimal,
                                      options.staircase_depth_limit);
      break;
    case Engine::Both: {
      out.cells = decompose_fan(poly);
      CellSet alt =
          decompose_staircase(out.minimal, options.staircase_depth_limit);
      if (!equal_rational(sum_cells(out.cells), sum_cells(alt)))
        throw std::logic_error(
            "fan and staircase decompositions disagree; this contradicts "
            "decomposition invariance and indicates a bug");
      break;
    }
  }

  for (const Cell& c : out.cells.cells) {
    if (c.degenerate) continue;
    out.breakdown.emplace_back(c, cell_integral(c, spec.n));
  }
  out.class_expr = sum_cells(out.cells);
  out.series = to_series(out.class_expr, D);

  if (options.specialize) {
    out.specialized_expr = specialize_expr(out.class_expr, degrees);
    out.specialized = to_series(*out.specialized_expr, ambient);
    out.closed = closed_form(*out.specialized_expr);
  }
  return out;
}

}  // namespace segre
