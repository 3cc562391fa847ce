#include "segre/decompose.hpp"

#include "segre/linalg.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace segre {

namespace {

// |det| of the J-projected edge matrix of the cell simplex; the cell
// contributes zero exactly when this vanishes.
Rat projected_edge_det(const std::vector<QVec>& simplex,
                       const std::vector<int>& extensions, int n) {
  std::vector<int> J;
  std::set<int> w(extensions.begin(), extensions.end());
  for (int i = 0; i < n; ++i)
    if (!w.count(i)) J.push_back(i);
  const int k = static_cast<int>(simplex.size()) - 1;
  if (static_cast<int>(J.size()) != k) return 0;
  if (k == 0) return 1;
  QMat m(k, QVec(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      m[i][j] = simplex[i + 1][J[j]] - simplex[0][J[j]];
  Rat d = rat_det(std::move(m));
  return d < 0 ? -d : d;
}

std::vector<QVec> sorted_simplex(std::vector<QVec> verts) {
  std::sort(verts.begin(), verts.end());
  return verts;
}

struct Tile {
  std::vector<int> simplex;  // vertex ids
  std::vector<int> w;        // extension directions
};

class FanBuilder {
 public:
  explicit FanBuilder(const NewtonPolyhedron& poly) : poly_(poly) {}

  CellSet run() {
    CellSet out;
    out.n = poly_.n;
    const QVec origin(poly_.n, Rat(0));

    // Facets through the origin are not visible radially and contribute
    // no cells; every other facet is tiled by recession peeling and each
    // tile coned to the origin.
    for (std::size_t fi = 0; fi < poly_.facets.size(); ++fi) {
      if (poly_.facets[fi].offset == 0) continue;
      int face_id = facet_face(static_cast<int>(fi));
      for (const Tile& t : tile_face(face_id)) {
        Cell cell;
        cell.simplex.push_back(origin);
        for (int v : t.simplex)
          cell.simplex.push_back(to_qvec(poly_.vertices[v]));
        cell.simplex = sorted_simplex(std::move(cell.simplex));
        cell.extensions = t.w;
        std::sort(cell.extensions.begin(), cell.extensions.end());
        cell.engine = "fan";
        cell.provenance = "facet:" + to_str(fi);
        cell.degenerate = false;
        add(out, std::move(cell));
      }
    }

    // The per-face extension-subset enumeration would also emit cells of
    // zero projected volume; keep those, flagged, for the record. Any
    // nonzero-volume cell it proposes beyond the radial ones would break
    // the tiling and is not emitted.
    for (std::size_t id = 0; id < poly_.faces.size(); ++id) {
      const Face& f = poly_.faces[id];
      if (!f.compact()) continue;
      int want = poly_.n - 1 - f.dim;
      if (want < 1) continue;
      std::vector<int> u = extension_set(poly_, f);
      if (static_cast<int>(u.size()) < want) continue;
      std::vector<Tile> tris = triangulate(static_cast<int>(id));
      std::vector<int> pick(want);
      for (int i = 0; i < want; ++i) pick[i] = i;
      do {
        std::vector<int> w(want);
        for (int i = 0; i < want; ++i) w[i] = u[pick[i]];
        for (const Tile& t : tris) {
          Cell cell;
          cell.simplex.push_back(origin);
          for (int v : t.simplex)
            cell.simplex.push_back(to_qvec(poly_.vertices[v]));
          cell.simplex = sorted_simplex(std::move(cell.simplex));
          cell.extensions = w;
          cell.engine = "fan";
          cell.provenance = "face:" + to_str(id);
          if (projected_edge_det(cell.simplex, cell.extensions, poly_.n) != 0)
            continue;  // already covered (or unsound); only keep zero cells
          cell.degenerate = true;
          add(out, std::move(cell));
        }
      } while (next_combination(pick, static_cast<int>(u.size())));
    }

    std::sort(out.cells.begin(), out.cells.end(),
              [](const Cell& a, const Cell& b) {
                if (a.degenerate != b.degenerate) return b.degenerate;
                if (a.simplex != b.simplex) return a.simplex < b.simplex;
                return a.extensions < b.extensions;
              });
    return out;
  }

 private:
  const NewtonPolyhedron& poly_;
  std::map<int, std::vector<Tile>> tile_memo_;
  std::map<int, std::vector<Tile>> tri_memo_;
  std::set<std::pair<std::vector<QVec>, std::vector<int>>> seen_;

  static bool next_combination(std::vector<int>& idx, int m) {
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

  void add(CellSet& out, Cell cell) {
    auto key = std::make_pair(cell.simplex, cell.extensions);
    if (!seen_.insert(key).second) return;
    out.cells.push_back(std::move(cell));
  }

  int facet_face(int facet_idx) const {
    for (std::size_t i = 0; i < poly_.faces.size(); ++i) {
      const Face& f = poly_.faces[i];
      if (f.dim != poly_.n - 1) continue;
      if (std::binary_search(f.active.begin(), f.active.end(), facet_idx))
        return static_cast<int>(i);
    }
    throw std::logic_error("facet without matching face");
  }

  // Pulling triangulation from the lex-least vertex, recursing into the
  // facets of the face that avoid it.
  const std::vector<Tile>& triangulate(int face_id) {
    auto it = tri_memo_.find(face_id);
    if (it != tri_memo_.end()) return it->second;
    const Face& f = poly_.faces[face_id];
    std::vector<Tile> tris;
    if (static_cast<int>(f.vertex_ids.size()) == f.dim + 1) {
      tris.push_back(Tile{f.vertex_ids, {}});
    } else {
      int apex = f.vertex_ids.front();
      for (int child : poly_.face_children[face_id]) {
        const Face& g = poly_.faces[child];
        if (!g.compact()) continue;
        if (std::binary_search(g.vertex_ids.begin(), g.vertex_ids.end(),
                               apex))
          continue;
        for (const Tile& t : triangulate(child)) {
          Tile up = t;
          up.simplex.push_back(apex);
          std::sort(up.simplex.begin(), up.simplex.end());
          tris.push_back(std::move(up));
        }
      }
    }
    return tri_memo_[face_id] = std::move(tris);
  }

  // A face Q = conv(V) + cone{e_z : z in Z}: peel the least recession
  // direction z. The subfaces not recessing along z form the lower
  // boundary; their tiles swept along e_z tile Q.
  const std::vector<Tile>& tile_face(int face_id) {
    auto it = tile_memo_.find(face_id);
    if (it != tile_memo_.end()) return it->second;
    const Face& f = poly_.faces[face_id];
    std::vector<Tile> tiles;
    if (f.compact()) {
      tiles = triangulate(face_id);
    } else {
      int z = f.rec_dirs.front();
      for (int child : poly_.face_children[face_id]) {
        const Face& g = poly_.faces[child];
        if (std::binary_search(g.rec_dirs.begin(), g.rec_dirs.end(), z))
          continue;  // side face, unbounded along z
        for (const Tile& t : tile_face(child)) {
          Tile up = t;
          up.w.push_back(z);
          std::sort(up.w.begin(), up.w.end());
          tiles.push_back(std::move(up));
        }
      }
    }
    return tile_memo_[face_id] = std::move(tiles);
  }
};

// ---- staircase engine (n = 2) ----

IVec ivec2(const Int& a, const Int& b) { return IVec{a, b}; }

struct StairNode {
  std::vector<Cell> cells;  // in this node's own coordinates
};

Cell segment_cell(const Int& i, const Int& j, int ext_dir,
                  const std::string& prov) {
  Cell c;
  c.simplex = {QVec{Rat(0), Rat(0)}, QVec{Rat(i), Rat(j)}};
  c.simplex = sorted_simplex(std::move(c.simplex));
  c.extensions = {ext_dir};
  c.engine = "staircase";
  c.provenance = prov;
  // extending along e1 leaves the projection onto coordinate 2 and vice
  // versa; the cell is flat when that projection has zero length
  c.degenerate = (ext_dir == 0) ? (j == 0) : (i == 0);
  return c;
}

// S1 child coordinates (a~, e) map into the parent by (a~, e - a~ + m);
// S2 child coordinates (e, a~) by (e - a~ + m, a~). Both are unimodular.
Cell map_child(const Cell& child, bool first_child, const Int& m,
               const std::string& prov_prefix) {
  Cell out = child;
  out.provenance = prov_prefix + child.provenance;
  for (QVec& v : out.simplex) {
    if (first_child)
      v = QVec{v[0], v[1] - v[0] + Rat(m)};
    else
      v = QVec{v[0] - v[1] + Rat(m), v[1]};
  }
  out.simplex = sorted_simplex(std::move(out.simplex));
  for (int w : child.extensions) {
    // the linear part fixes e2 resp. e1; the other direction does not
    // stay a coordinate ray and never occurs on an effective cell
    if ((first_child && w != 1) || (!first_child && w != 0))
      throw std::logic_error(
          "staircase: extension direction does not survive the "
          "coordinate change");
  }
  return out;
}

void staircase_recurse(const std::vector<IVec>& gens, int depth,
                       int depth_limit, const std::string& prov,
                       std::vector<Cell>& out) {
  if (depth > depth_limit)
    throw StaircaseDepthError(
        "staircase recursion exceeded depth limit " + to_str(depth_limit) +
        " (non-terminating principalization would be a bug)");
  for (const IVec& g : gens)
    if (is_zero_vec(g)) return;  // unit ideal: empty subscheme, no cells

  MonomialIdealSpec node = minimalize(make_spec(2, gens));
  const std::vector<IVec>& m_gens = node.generators;

  if (m_gens.size() == 1) {
    const IVec& g = m_gens[0];
    out.push_back(segment_cell(g[0], g[1], 0, prov + ":seg1"));
    out.push_back(segment_cell(g[0], g[1], 1, prov + ":seg2"));
    return;
  }

  Int m = m_gens[0][0] + m_gens[0][1];
  for (const IVec& g : m_gens) m = std::min(m, Int(g[0] + g[1]));

  Cell tri;
  tri.simplex = {QVec{Rat(0), Rat(0)}, QVec{Rat(m), Rat(0)},
                 QVec{Rat(0), Rat(m)}};
  tri.simplex = sorted_simplex(std::move(tri.simplex));
  tri.extensions = {};
  tri.engine = "staircase";
  tri.provenance = prov + ":tri";
  out.push_back(std::move(tri));

  std::vector<IVec> s1, s2;
  for (const IVec& g : m_gens) {
    s1.push_back(ivec2(g[0], g[0] + g[1] - m));
    s2.push_back(ivec2(g[0] + g[1] - m, g[1]));
  }
  for (int which = 0; which < 2; ++which) {
    std::vector<Cell> child;
    staircase_recurse(which == 0 ? s1 : s2, depth + 1, depth_limit,
                      which == 0 ? "1" : "2", child);
    for (Cell& c : child) {
      if (c.degenerate) continue;  // zero contribution; drop before mapping
      out.push_back(map_child(c, which == 0, m, prov + "."));
    }
  }
}

}  // namespace

CellSet decompose_fan(const NewtonPolyhedron& poly) {
  return FanBuilder(poly).run();
}

CellSet decompose_staircase(const MonomialIdealSpec& spec, int depth_limit) {
  if (spec.n != 2)
    throw std::invalid_argument("staircase engine requires n = 2");
  CellSet out;
  out.n = 2;
  if (spec.unit_ideal) return out;
  staircase_recurse(spec.generators, 0, depth_limit, "0", out.cells);
  for (Cell& c : out.cells)
    c.degenerate = projected_edge_det(c.simplex, c.extensions, 2) == 0;
  std::sort(out.cells.begin(), out.cells.end(),
            [](const Cell& a, const Cell& b) {
              if (a.degenerate != b.degenerate) return b.degenerate;
              if (a.simplex != b.simplex) return a.simplex < b.simplex;
              return a.extensions < b.extensions;
            });
  return out;
}

// ---- tiling validation ----

namespace {

struct CellForms {
  // Barycentric solve for x = v0 + sum lambda_i (v_i - v0) + sum mu_w e_w:
  // row r of inv gives the r-th coordinate as inv[r].(x - v0). The first
  // k rows are simplex weights, the rest extension weights.
  QVec base;
  QMat rows;
  int k = 0;

  // interior: all weights > 0 and sum of simplex weights < 1
  bool interior(const QVec& p) const {
    Rat lam_sum = 0;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      Rat v = 0;
      for (std::size_t j = 0; j < p.size(); ++j)
        v += rows[r][j] * (p[j] - base[j]);
      if (v <= 0) return false;
      if (static_cast<int>(r) < k) lam_sum += v;
    }
    return lam_sum < 1;
  }
};

std::optional<CellForms> cell_forms(const Cell& cell, int n) {
  const int k = cell.simplex_dim();
  if (k + static_cast<int>(cell.extensions.size()) != n) return std::nullopt;
  QMat b(n, QVec(n));
  for (int col = 0; col < k; ++col)
    for (int r = 0; r < n; ++r)
      b[r][col] = cell.simplex[col + 1][r] - cell.simplex[0][r];
  for (std::size_t e = 0; e < cell.extensions.size(); ++e)
    for (int r = 0; r < n; ++r)
      b[r][k + static_cast<int>(e)] = (cell.extensions[e] == r) ? 1 : 0;
  auto inv = rat_inverse(std::move(b));
  if (!inv) return std::nullopt;
  CellForms f;
  f.base = cell.simplex[0];
  f.rows = std::move(*inv);
  f.k = k;
  return f;
}

Rat sq_norm(const QVec& v) {
  Rat s = 0;
  for (const Rat& x : v) s += x * x;
  return s;
}

}  // namespace

namespace {

// Integer fast path: with grid step a/b and integral cell vertices every
// test reduces to integer linear forms in the grid index vector. Falls
// back to the exact rational sweep when data does not fit.
struct FastForm {
  std::array<long long, 8> w{};  // gradient in grid-index coordinates
  long long c = 0;               // value at grid index 0
  unsigned __int128 sq_bound = 0;  // squared skip threshold
};

std::optional<TilingReport> validate_tiling_int64(
    const CellSet& cells, const NewtonPolyhedron& poly, const Rat& grid_step,
    long steps) {
  const int n = poly.n;
  if (n > 8) return std::nullopt;
  Int a = numerator(grid_step), b = denominator(grid_step);
  if (a > 1000000 || b > 1000000) return std::nullopt;
  const long long K = steps;

  std::vector<FastForm> facet_forms;
  std::vector<std::vector<FastForm>> cell_forms;  // per cell: n weights + sum
  std::vector<int> cell_k;

  const Int lim = Int(1) << 62;
  bool ok = true;
  auto to_u128 = [&](const Int& v) {
    Int hi = v >> 62;
    Int lo = v - (hi << 62);
    if (hi >= lim) ok = false;
    return ok ? (static_cast<unsigned __int128>(hi.convert_to<long long>())
                 << 62) |
                    static_cast<unsigned __int128>(lo.convert_to<long long>())
              : static_cast<unsigned __int128>(0);
  };
  auto make_form = [&](const IVec& grad, const Int& value_at_zero) {
    // form value at grid index g: a*(grad.g) + value_at_zero
    FastForm f;
    Int bound = abs(value_at_zero);
    Int sq = 0;
    for (int i = 0; i < n; ++i) {
      Int wi = a * grad[i];
      bound += abs(wi) * K;
      sq += grad[i] * grad[i];
      if (abs(wi) >= lim) {
        ok = false;
        return f;
      }
      f.w[i] = wi.convert_to<long long>();
    }
    sq *= a * a;
    if (bound >= lim || abs(value_at_zero) >= lim) {
      ok = false;
      return f;
    }
    f.c = value_at_zero.convert_to<long long>();
    f.sq_bound = to_u128(sq);
    return f;
  };

  for (const auto& fc : poly.facets)
    facet_forms.push_back(make_form(fc.normal, -b * fc.offset));

  for (const Cell& c : cells.cells) {
    if (c.degenerate) continue;
    const int k = c.simplex_dim();
    if (k + static_cast<int>(c.extensions.size()) != n) continue;
    IMat m(n, IVec(n, 0));
    IVec base(n);
    for (int r = 0; r < n; ++r) {
      const Rat& x = c.simplex[0][r];
      if (denominator(x) != 1) return std::nullopt;
      base[r] = numerator(x);
    }
    for (int col = 0; col < k; ++col)
      for (int r = 0; r < n; ++r) {
        Rat d = c.simplex[col + 1][r] - c.simplex[0][r];
        if (denominator(d) != 1) return std::nullopt;
        m[r][col] = numerator(d);
      }
    for (std::size_t e = 0; e < c.extensions.size(); ++e)
      m[c.extensions[e]][k + static_cast<int>(e)] = 1;
    Int det = int_det(m);
    if (det == 0) continue;
    // adjugate rows give the weights: row_i(x - base) / det
    std::vector<FastForm> forms;
    IVec sum_grad(n, 0);
    Int sum_c0 = 0;
    for (int r = 0; r < n; ++r) {
      IVec grad(n);
      for (int j = 0; j < n; ++j) {
        IMat minor(n - 1, IVec(n - 1));
        for (int rr = 0, ri = 0; rr < n; ++rr) {
          if (rr == j) continue;
          for (int cc = 0, ci = 0; cc < n; ++cc) {
            if (cc == r) continue;
            minor[ri][ci] = m[rr][cc];
            ++ci;
          }
          ++ri;
        }
        Int cof = int_det(minor);
        if ((r + j) % 2) cof = -cof;
        grad[j] = det < 0 ? -cof : cof;
      }
      Int c0 = -b * dot(grad, base);
      forms.push_back(make_form(grad, c0));
      if (r < k) {
        for (int j = 0; j < n; ++j) sum_grad[j] += grad[j];
        sum_c0 += c0;
      }
    }
    // sum of simplex weights < 1: value = sum - b*|det| must be negative
    Int absdet = abs(det);
    if (absdet >= lim) return std::nullopt;
    forms.push_back(make_form(sum_grad, sum_c0 - b * absdet));
    cell_forms.push_back(std::move(forms));
    cell_k.push_back(k);
  }
  if (!ok) return std::nullopt;

  // flatten for incremental evaluation
  std::vector<FastForm> all;
  for (const auto& f : facet_forms) all.push_back(f);
  std::vector<std::size_t> cell_begin;
  for (const auto& fs : cell_forms) {
    cell_begin.push_back(all.size());
    for (const auto& f : fs) all.push_back(f);
  }
  const std::size_t nf = facet_forms.size();
  const std::size_t total = all.size();
  std::vector<long long> vals(total);
  for (std::size_t i = 0; i < total; ++i) vals[i] = all[i].c;

  TilingReport report;
  std::vector<long long> g(n, 0);
  auto test_point = [&]() {
    for (int i = 0; i < n; ++i)
      if (g[i] <= 1) {
        ++report.skipped;
        return;
      }
    for (std::size_t i = 0; i < total; ++i) {
      __int128 v = vals[i];
      if (static_cast<unsigned __int128>(v < 0 ? -v : v) *
              static_cast<unsigned __int128>(v < 0 ? -v : v) <=
          all[i].sq_bound) {
        ++report.skipped;
        return;
      }
    }
    bool in_region = false;
    for (std::size_t i = 0; i < nf; ++i)
      if (vals[i] < 0) {
        in_region = true;
        break;
      }
    int covered = 0;
    for (std::size_t ci = 0; ci < cell_begin.size(); ++ci) {
      const std::size_t base = cell_begin[ci];
      bool inside = true;
      for (int r = 0; r < n && inside; ++r)
        inside = vals[base + r] > 0;
      if (inside && cell_k[ci] > 0) inside = vals[base + n] < 0;
      if (inside) ++covered;
    }
    if (covered != (in_region ? 1 : 0)) {
      QVec p(n);
      for (int i = 0; i < n; ++i) p[i] = Rat(g[i]) * grid_step;
      report.violations.push_back(TilingViolation{p, in_region, covered});
    }
    ++report.checked;
  };

  std::function<void(int)> sweep = [&](int axis) {
    for (g[axis] = 0; g[axis] <= K; ++g[axis]) {
      if (axis + 1 < n)
        sweep(axis + 1);
      else
        test_point();
      for (std::size_t i = 0; i < total; ++i) vals[i] += all[i].w[axis];
    }
    for (std::size_t i = 0; i < total; ++i)
      vals[i] -= all[i].w[axis] * (K + 1);
    g[axis] = 0;
  };
  sweep(0);
  return report;
}

}  // namespace

TilingReport validate_tiling(const CellSet& cells,
                             const NewtonPolyhedron& poly,
                             const Rat& grid_step, const Rat& box_margin) {
  const int n = poly.n;
  TilingReport report;

  Rat max_sum = 0;
  for (const IVec& v : poly.vertices) {
    Rat s = 0;
    for (const Int& x : v) s += Rat(x);
    max_sum = std::max(max_sum, s);
  }
  Rat box = max_sum + box_margin;
  Rat q = box / grid_step;
  long steps =
      Int(numerator(q) / denominator(q)).convert_to<long>();  // floor, q >= 0

  if (auto fast = validate_tiling_int64(cells, poly, grid_step, steps))
    return *fast;

  std::vector<CellForms> forms;
  for (const Cell& c : cells.cells) {
    if (c.degenerate) continue;
    auto f = cell_forms(c, n);
    if (!f) continue;  // flat cell; no interior
    forms.push_back(std::move(*f));
  }

  // Hyperplanes to stay clear of: facet planes, coordinate planes, and
  // every cell wall (weight = 0 and simplex weight sum = 1).
  struct Plane {
    QVec grad;
    Rat value_at_zero;  // plane is grad.x = c
  };
  std::vector<Plane> planes;
  for (const auto& f : poly.facets)
    planes.push_back(Plane{to_qvec(f.normal), Rat(f.offset)});
  for (const CellForms& f : forms) {
    QVec lam_sum(n, 0);
    for (std::size_t r = 0; r < f.rows.size(); ++r) {
      planes.push_back(Plane{f.rows[r], dot(f.rows[r], f.base)});
      if (static_cast<int>(r) < f.k)
        for (int j = 0; j < n; ++j) lam_sum[j] += f.rows[r][j];
    }
    planes.push_back(Plane{lam_sum, dot(lam_sum, f.base) + 1});
  }
  std::vector<Rat> plane_sq;
  plane_sq.reserve(planes.size());
  for (const Plane& p : planes) plane_sq.push_back(sq_norm(p.grad));
  const Rat step_sq = grid_step * grid_step;

  std::vector<long> g(n, 0);
  QVec p(n);
  for (;;) {
    bool skip = false;
    for (int i = 0; i < n; ++i) {
      p[i] = Rat(g[i]) * grid_step;
      if (g[i] <= 1) skip = true;  // within one step of a coordinate plane
    }
    if (!skip) {
      for (std::size_t pi = 0; pi < planes.size(); ++pi) {
        Rat v = dot(planes[pi].grad, p) - planes[pi].value_at_zero;
        if (v * v <= step_sq * plane_sq[pi]) {
          skip = true;
          break;
        }
      }
    }
    if (skip) {
      ++report.skipped;
    } else {
      bool in_region = contains(poly, p) == Membership::InNewtonRegion;
      int covered = 0;
      for (const CellForms& f : forms)
        if (f.interior(p)) ++covered;
      if (covered != (in_region ? 1 : 0))
        report.violations.push_back(TilingViolation{p, in_region, covered});
      ++report.checked;
    }
    int i = 0;
    while (i < n && ++g[i] > steps) g[i++] = 0;
    if (i == n) break;
  }
  return report;
}

}  // namespace segre
