#pragma once

#include "segre/newton.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace segre {

/// One integration cell: a k-simplex swept along the coordinate directions
/// in `extensions`. Effective cells satisfy |extensions| + k = n; cells
/// whose projection volume vanishes are kept but flagged degenerate (they
/// contribute the zero term).
struct Cell {
  std::vector<QVec> simplex;    // k+1 vertices, lex sorted
  std::vector<int> extensions;  // W, 0-based, sorted
  std::string engine;           // "fan" or "staircase"
  std::string provenance;       // face / recursion-node id
  bool degenerate = false;

  int simplex_dim() const { return static_cast<int>(simplex.size()) - 1; }
};

struct CellSet {
  int n = 0;
  std::vector<Cell> cells;

  std::vector<Cell> effective() const {
    std::vector<Cell> out;
    for (const Cell& c : cells)
      if (!c.degenerate) out.push_back(c);
    return out;
  }
};

class StaircaseDepthError : public std::runtime_error {
 public:
  explicit StaircaseDepthError(const std::string& what)
      : std::runtime_error(what) {}
};

/// Radial decomposition of the Newton region: every facet of the
/// polyhedron not through the origin is tiled by peeling off its
/// recession directions, and each tile is coned to the origin. Zero-volume
/// cells arising from the per-face extension-subset enumeration are
/// appended as flagged degenerate cells.
CellSet decompose_fan(const NewtonPolyhedron& poly);

/// n = 2 only: blow-up recursion. Splits off the triangle with legs
/// min(i1+i2), recurses on the two residual exponent sets, and maps child
/// cells back through the unimodular coordinate changes.
CellSet decompose_staircase(const MonomialIdealSpec& spec,
                            int depth_limit = 64);

struct TilingViolation {
  QVec point;
  bool expected_in_region = false;
  int cover_count = 0;
};

struct TilingReport {
  long checked = 0;
  long skipped = 0;
  std::vector<TilingViolation> violations;

  bool ok() const { return violations.empty(); }
};

/// Sample a rational grid over [0, M]^n with M = max vertex coordinate sum
/// + box_margin; every grid point farther than grid_step from all cell and
/// region boundaries must be covered by exactly one cell interior iff it
/// lies in the Newton region.
TilingReport validate_tiling(const CellSet& cells,
                             const NewtonPolyhedron& poly,
                             const Rat& grid_step, const Rat& box_margin);

}  // namespace segre
