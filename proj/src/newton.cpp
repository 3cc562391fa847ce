#include "segre/newton.hpp"

#include "segre/linalg.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace segre {

namespace {

// Enumerate k-subsets of [0, m) in lexicographic order.
bool next_subset(std::vector<int>& idx, int m) {
  int k = static_cast<int>(idx.size());
  for (int i = k - 1; i >= 0; --i) {
    if (idx[i] < m - (k - i)) {
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

Int vec_gcd(const IVec& normal, const Int& offset) {
  Int g = abs(offset);
  for (const Int& c : normal) g = gcd(g, abs(c));
  return g;
}

struct FaceKey {
  std::vector<int> verts;
  std::vector<int> rec;
  bool operator<(const FaceKey& o) const {
    if (verts != o.verts) return verts < o.verts;
    return rec < o.rec;
  }
};

}  // namespace

NewtonPolyhedron build_polyhedron(const MonomialIdealSpec& spec) {
  if (spec.unit_ideal)
    throw std::invalid_argument("unit ideal has no Newton polyhedron");
  const int n = spec.n;
  NewtonPolyhedron poly;
  poly.n = n;

  // Candidate tight points: generators and generators pushed along rays.
  std::set<IVec> point_set(spec.generators.begin(), spec.generators.end());
  for (const IVec& g : spec.generators) {
    for (int i = 0; i < n; ++i) {
      IVec p = g;
      p[i] += 1;
      point_set.insert(p);
    }
  }
  std::vector<IVec> points(point_set.begin(), point_set.end());
  const int m = static_cast<int>(points.size());

  // Every facet supports n affinely independent points of this set, so the
  // n-subset sweep finds all of them. Candidates with mixed-sign normals
  // cannot support the up-closed hull and are discarded.
  std::set<FacetInequality> facet_set;
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  do {
    std::vector<IVec> subset;
    subset.reserve(n);
    for (int i : idx) subset.push_back(points[i]);
    IVec normal = hyperplane_normal(subset);
    if (is_zero_vec(normal)) continue;
    bool all_nonneg = true, all_nonpos = true;
    for (const Int& c : normal) {
      if (c > 0) all_nonpos = false;
      if (c < 0) all_nonneg = false;
    }
    if (!all_nonneg && !all_nonpos) continue;
    if (all_nonpos)
      for (Int& c : normal) c = -c;
    Int offset = dot(normal, subset[0]);
    bool valid = true;
    for (const IVec& g : spec.generators) {
      if (dot(normal, g) < offset) {
        valid = false;
        break;
      }
    }
    if (!valid) continue;
    Int g = vec_gcd(normal, offset);
    if (g > 1) {
      for (Int& c : normal) c /= g;
      offset /= g;
    }
    facet_set.insert(FacetInequality{std::move(normal), std::move(offset)});
  } while (next_subset(idx, m));
  poly.facets.assign(facet_set.begin(), facet_set.end());

  // Vertices: generators with n independent active facet normals.
  for (const IVec& g : spec.generators) {
    QMat active;
    for (const auto& f : poly.facets)
      if (dot(f.normal, g) == f.offset) active.push_back(to_qvec(f.normal));
    if (static_cast<int>(active.size()) >= n && rat_rank(active) == n)
      poly.vertices.push_back(g);
  }
  std::sort(poly.vertices.begin(), poly.vertices.end());

  // Face lattice by intersecting facet equality sets. A face is closed
  // under "all facets containing it"; dedup by (vertex set, recession set).
  const int nf = static_cast<int>(poly.facets.size());
  auto facet_has_vertex = [&](int f, int v) {
    return dot(poly.facets[f].normal, poly.vertices[v]) ==
           poly.facets[f].offset;
  };
  auto close_face = [&](std::vector<int> active) -> std::optional<Face> {
    // Alternate: (verts, rec dirs) from active set, then regrow the active
    // set from them, until stable.
    for (;;) {
      std::vector<int> verts;
      for (int v = 0; v < static_cast<int>(poly.vertices.size()); ++v) {
        bool on_all = true;
        for (int f : active)
          if (!facet_has_vertex(f, v)) {
            on_all = false;
            break;
          }
        if (on_all) verts.push_back(v);
      }
      if (verts.empty()) return std::nullopt;  // empty intersection
      std::vector<int> rec;
      for (int i = 0; i < n; ++i) {
        bool killed = true;
        for (int f : active)
          if (poly.facets[f].normal[i] != 0) {
            killed = false;
            break;
          }
        if (killed) rec.push_back(i);
      }
      std::vector<int> grown;
      for (int f = 0; f < nf; ++f) {
        bool contains = true;
        for (int v : verts)
          if (!facet_has_vertex(f, v)) {
            contains = false;
            break;
          }
        if (contains)
          for (int i : rec)
            if (poly.facets[f].normal[i] != 0) {
              contains = false;
              break;
            }
        if (contains) grown.push_back(f);
      }
      if (grown == active) {
        Face face;
        face.vertex_ids = std::move(verts);
        face.active = std::move(active);
        face.rec_dirs = std::move(rec);
        QMat span;
        const IVec& base = poly.vertices[face.vertex_ids[0]];
        for (std::size_t i = 1; i < face.vertex_ids.size(); ++i) {
          QVec d(n);
          for (int j = 0; j < n; ++j)
            d[j] = Rat(poly.vertices[face.vertex_ids[i]][j] - base[j]);
          span.push_back(std::move(d));
        }
        for (int i : face.rec_dirs) {
          QVec d(n, 0);
          d[i] = 1;
          span.push_back(std::move(d));
        }
        face.dim = span.empty() ? 0 : rat_rank(span);
        return face;
      }
      active = std::move(grown);
    }
  };

  std::map<FaceKey, int> seen;
  std::vector<Face> faces;
  std::vector<int> frontier;
  for (int f = 0; f < nf; ++f) {
    auto face = close_face({f});
    if (!face) continue;
    FaceKey key{face->vertex_ids, face->rec_dirs};
    if (seen.count(key)) continue;
    seen[key] = static_cast<int>(faces.size());
    frontier.push_back(static_cast<int>(faces.size()));
    faces.push_back(*face);
  }
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int id : frontier) {
      std::vector<int> active = faces[id].active;
      for (int f = 0; f < nf; ++f) {
        if (std::binary_search(active.begin(), active.end(), f)) continue;
        std::vector<int> bigger = active;
        bigger.push_back(f);
        std::sort(bigger.begin(), bigger.end());
        auto face = close_face(std::move(bigger));
        if (!face) continue;
        FaceKey key{face->vertex_ids, face->rec_dirs};
        if (seen.count(key)) continue;
        seen[key] = static_cast<int>(faces.size());
        next.push_back(static_cast<int>(faces.size()));
        faces.push_back(*face);
      }
    }
    frontier = std::move(next);
  }

  std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    if (a.vertex_ids != b.vertex_ids) return a.vertex_ids < b.vertex_ids;
    return a.rec_dirs < b.rec_dirs;
  });
  poly.faces = std::move(faces);

  // children: codim-1 subfaces (containment = reverse inclusion of active
  // sets, equivalently inclusion of vertex and recession sets).
  auto subset_of = [](const std::vector<int>& a, const std::vector<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
  };
  poly.face_children.assign(poly.faces.size(), {});
  for (std::size_t i = 0; i < poly.faces.size(); ++i) {
    for (std::size_t j = 0; j < poly.faces.size(); ++j) {
      const Face& big = poly.faces[i];
      const Face& small = poly.faces[j];
      if (small.dim != big.dim - 1) continue;
      if (subset_of(small.vertex_ids, big.vertex_ids) &&
          subset_of(small.rec_dirs, big.rec_dirs))
        poly.face_children[i].push_back(static_cast<int>(j));
    }
  }
  return poly;
}

Membership contains(const NewtonPolyhedron& poly, const QVec& point) {
  if (static_cast<int>(point.size()) != poly.n)
    throw std::invalid_argument("point dimension mismatch");
  for (const Rat& x : point)
    if (x < 0) return Membership::OutsideOrthant;
  bool tight = false;
  for (const auto& f : poly.facets) {
    Rat v = 0;
    for (int i = 0; i < poly.n; ++i) v += Rat(f.normal[i]) * point[i];
    if (v < Rat(f.offset)) return Membership::InNewtonRegion;
    if (v == Rat(f.offset)) tight = true;
  }
  return tight ? Membership::BoundaryOfP : Membership::InsideP;
}

std::string membership_str(Membership m) {
  switch (m) {
    case Membership::InsideP: return "inside P";
    case Membership::BoundaryOfP: return "boundary of P";
    case Membership::InNewtonRegion: return "in N";
    case Membership::OutsideOrthant: return "outside orthant";
  }
  return "?";
}

std::vector<int> extension_set(const NewtonPolyhedron& poly, const Face& f) {
  std::vector<int> u;
  for (int i = 0; i < poly.n; ++i) {
    for (int a : f.active) {
      if (poly.facets[a].normal[i] == 0) {
        u.push_back(i);
        break;
      }
    }
  }
  return u;
}

std::vector<CompactFace> compact_faces(const NewtonPolyhedron& poly) {
  std::vector<CompactFace> out;
  for (const Face& f : poly.faces) {
    if (!f.compact()) continue;
    CompactFace cf;
    cf.vertex_ids = f.vertex_ids;
    cf.dim = f.dim;
    cf.active_facets = f.active;
    cf.extensions = extension_set(poly, f);
    out.push_back(std::move(cf));
  }
  return out;
}

}  // namespace segre
