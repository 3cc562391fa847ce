#pragma once

#include "segre/ideal.hpp"
#include "segre/numeric.hpp"

#include <string>
#include <vector>

namespace segre {

/// Supporting halfspace c.x >= b of the Newton polyhedron, with c >= 0
/// componentwise and gcd(c, b) = 1.
struct FacetInequality {
  IVec normal;
  Int offset;

  bool operator==(const FacetInequality& o) const {
    return normal == o.normal && offset == o.offset;
  }
  bool operator<(const FacetInequality& o) const {
    if (normal != o.normal) return normal < o.normal;
    return offset < o.offset;
  }
};

/// A face of the polyhedron: conv(vertices) + cone{e_i : i in rec_dirs}.
/// rec_dirs is the set of coordinate directions annihilated by every
/// active facet normal; it is empty exactly for compact faces.
struct Face {
  std::vector<int> vertex_ids;  // indices into NewtonPolyhedron::vertices
  std::vector<int> active;      // indices of facets containing the face
  std::vector<int> rec_dirs;    // 0-based coordinate recession directions
  int dim = 0;

  bool compact() const { return rec_dirs.empty(); }
};

/// Compact face together with its extension set U(F) = coordinate
/// directions killed by at least one active facet normal.
struct CompactFace {
  std::vector<int> vertex_ids;
  int dim = 0;
  std::vector<int> active_facets;
  std::vector<int> extensions;  // U(F), 0-based
};

enum class Membership { InsideP, BoundaryOfP, InNewtonRegion, OutsideOrthant };

struct NewtonPolyhedron {
  int n = 0;
  std::vector<IVec> vertices;           // lex sorted; subset of generators
  std::vector<FacetInequality> facets;  // lex sorted
  std::vector<Face> faces;              // all proper faces, every dimension
  std::vector<std::vector<int>> face_children;  // codim-1 subfaces per face
};

/// Exact hull of the union of translated orthants gen + R_{>=0}^n.
/// Facets are found by brute-force supporting-hyperplane enumeration over
/// n-subsets of {generators} u {generators + unit rays}; adequate at desk
/// scale (small n, few generators).
NewtonPolyhedron build_polyhedron(const MonomialIdealSpec& spec);

/// Exact classification of a rational point against the polyhedron.
Membership contains(const NewtonPolyhedron& poly, const QVec& point);

std::string membership_str(Membership m);

/// All faces with trivial recession cone, vertices up to compact facets.
std::vector<CompactFace> compact_faces(const NewtonPolyhedron& poly);

/// U(F) for any face: directions i such that some active facet normal has
/// zero i-th component.
std::vector<int> extension_set(const NewtonPolyhedron& poly, const Face& f);

}  // namespace segre
