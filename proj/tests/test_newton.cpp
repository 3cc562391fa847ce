#include "segre/newton.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace segre;

namespace {

IVec iv(std::initializer_list<long> xs) {
  IVec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

QVec qv(std::initializer_list<long> xs) {
  QVec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

FacetInequality fi(std::initializer_list<long> normal, long offset) {
  FacetInequality f;
  for (long x : normal) f.normal.emplace_back(x);
  f.offset = offset;
  return f;
}

MonomialIdealSpec introex() {
  return make_spec(2,
                   {iv({2, 6}), iv({3, 4}), iv({4, 3}), iv({5, 1}), iv({7, 0})});
}

MonomialIdealSpec threelines() {
  return make_spec(3, {iv({0, 1, 1}), iv({1, 0, 1}), iv({1, 1, 0})});
}

// U(F) keyed by the vertex set of the face, for faces of a given dim
std::set<std::pair<std::vector<int>, std::vector<int>>> faces_with_u(
    const NewtonPolyhedron& poly, int dim) {
  std::set<std::pair<std::vector<int>, std::vector<int>>> out;
  for (const CompactFace& f : compact_faces(poly))
    if (f.dim == dim) out.insert({f.vertex_ids, f.extensions});
  return out;
}

}  // namespace

TEST_CASE("introex polyhedron: facets and vertices") {
  NewtonPolyhedron poly = build_polyhedron(introex());
  std::vector<FacetInequality> expected = {
      fi({0, 1}, 0), fi({1, 0}, 2), fi({1, 2}, 7), fi({2, 1}, 10),
      fi({3, 2}, 17)};
  CHECK(poly.facets == expected);
  REQUIRE(poly.vertices.size() == 4);
  CHECK(poly.vertices[0] == iv({2, 6}));
  CHECK(poly.vertices[3] == iv({7, 0}));
}

TEST_CASE("single generator polyhedron") {
  NewtonPolyhedron poly = build_polyhedron(make_spec(2, {iv({3, 4})}));
  std::vector<FacetInequality> expected = {fi({0, 1}, 4), fi({1, 0}, 3)};
  CHECK(poly.facets == expected);
  REQUIRE(poly.vertices.size() == 1);
  CHECK(poly.vertices[0] == iv({3, 4}));
}

TEST_CASE("threelines polyhedron") {
  NewtonPolyhedron poly = build_polyhedron(threelines());
  std::vector<FacetInequality> expected = {
      fi({0, 0, 1}, 0), fi({0, 1, 0}, 0), fi({0, 1, 1}, 1), fi({1, 0, 0}, 0),
      fi({1, 0, 1}, 1), fi({1, 1, 0}, 1), fi({1, 1, 1}, 2)};
  CHECK(poly.facets == expected);
  CHECK(poly.vertices.size() == 3);
}

TEST_CASE("membership classification") {
  NewtonPolyhedron poly = build_polyhedron(introex());
  // with the (5,1) hull every facet holds strictly at (5, 3/2)
  CHECK(contains(poly, QVec{Rat(5), Rat(3, 2)}) == Membership::InsideP);
  CHECK(contains(poly, QVec{Rat(5), Rat(1, 2)}) == Membership::InNewtonRegion);
  CHECK(contains(poly, qv({1, 0})) == Membership::InNewtonRegion);
  CHECK(contains(poly, qv({7, 0})) == Membership::BoundaryOfP);
  CHECK(contains(poly, QVec{Rat(-1), Rat(2)}) == Membership::OutsideOrthant);
  CHECK(contains(poly, qv({100, 100})) == Membership::InsideP);
}

TEST_CASE("every generator satisfies every facet") {
  for (const auto& spec : {introex(), threelines()}) {
    NewtonPolyhedron poly = build_polyhedron(spec);
    for (const auto& f : poly.facets)
      for (const IVec& g : spec.generators)
        CHECK(dot(f.normal, g) >= f.offset);
  }
}

TEST_CASE("introex compact faces and extension sets") {
  NewtonPolyhedron poly = build_polyhedron(introex());
  // vertices 0..3 = (2,6),(3,4),(5,1),(7,0)
  auto verts = faces_with_u(poly, 0);
  CHECK(verts ==
        decltype(verts){{{0}, {1}}, {{1}, {}}, {{2}, {}}, {{3}, {0}}});
  auto edges = faces_with_u(poly, 1);
  CHECK(edges ==
        decltype(edges){{{0, 1}, {}}, {{1, 2}, {}}, {{2, 3}, {}}});
}

TEST_CASE("single generator vertex extends in both directions") {
  NewtonPolyhedron poly = build_polyhedron(make_spec(2, {iv({3, 4})}));
  auto faces = compact_faces(poly);
  REQUIRE(faces.size() == 1);
  CHECK(faces[0].dim == 0);
  CHECK(faces[0].extensions == std::vector<int>{0, 1});
}

TEST_CASE("threelines compact face census") {
  NewtonPolyhedron poly = build_polyhedron(threelines());
  auto faces = compact_faces(poly);
  int nv = 0, ne = 0, nf = 0;
  for (const auto& f : faces) {
    if (f.dim == 0) {
      ++nv;
      CHECK(f.extensions.size() == 2);
    } else if (f.dim == 1) {
      ++ne;
      CHECK(f.extensions.size() == 1);
    } else if (f.dim == 2) {
      ++nf;
      CHECK(f.extensions.empty());
    }
  }
  CHECK(nv == 3);
  CHECK(ne == 3);
  CHECK(nf == 1);
}

TEST_CASE("boundary rays along extension directions") {
  for (const auto& spec : {introex(), threelines()}) {
    NewtonPolyhedron poly = build_polyhedron(spec);
    for (const CompactFace& f : compact_faces(poly)) {
      for (int dir : f.extensions) {
        for (int vid : f.vertex_ids) {
          for (long lambda : {1L, 3L, 10L}) {
            QVec p = to_qvec(poly.vertices[vid]);
            p[dir] += Rat(lambda, 2);
            CHECK(contains(poly, p) == Membership::BoundaryOfP);
          }
        }
      }
    }
  }
}

TEST_CASE("vertices equal minimalized generators") {
  MonomialIdealSpec spec = introex();
  NewtonPolyhedron poly = build_polyhedron(spec);
  CHECK(poly.vertices == minimalize(spec).generators);
}

TEST_CASE("n = 1 polyhedron") {
  NewtonPolyhedron poly = build_polyhedron(make_spec(1, {iv({3}), iv({5})}));
  REQUIRE(poly.facets.size() == 1);
  CHECK(poly.facets[0] == fi({1}, 3));
  REQUIRE(poly.vertices.size() == 1);
  CHECK(poly.vertices[0] == iv({3}));
  REQUIRE(poly.faces.size() == 1);
  CHECK(poly.faces[0].dim == 0);
}
