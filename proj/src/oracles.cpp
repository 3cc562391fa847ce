#include "segre/oracles.hpp"

#include "segre/linalg.hpp"
#include "segre/segre.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <queue>
#include <random>
#include <thread>

namespace segre {

ClassExpr principal_class(const IVec& I) {
  const int n = static_cast<int>(I.size());
  ClassExpr out;
  out.n = n;
  if (is_zero_vec(I)) return out;
  QVec denom = to_qvec(I);
  for (int j = 0; j < n; ++j) {
    if (I[j] == 0) continue;
    std::vector<int> exp(n, 0);
    exp[j] = 1;
    out.terms.push_back(make_term(Rat(I[j]), std::move(exp), {denom}));
  }
  return normalized(std::move(out));
}

ClassExpr complete_intersection_class(const std::vector<Int>& m) {
  const int n = static_cast<int>(m.size());
  ClassExpr out;
  out.n = n;
  Rat coeff = 1;
  std::vector<QVec> denom;
  for (int i = 0; i < n; ++i) {
    if (m[i] < 1) throw std::invalid_argument("multiplicities must be >= 1");
    coeff *= Rat(m[i]);
    QVec v(n, 0);
    v[i] = Rat(m[i]);
    denom.push_back(std::move(v));
  }
  out.terms.push_back(make_term(coeff, std::vector<int>(n, 1), denom));
  return normalized(std::move(out));
}

ClassExpr singularity_family_class(int n) {
  if (n < 2) throw std::invalid_argument("family defined for n >= 2");
  ClassExpr out;
  out.n = n;
  out.terms.push_back(make_term(1, std::vector<int>(n, 0), {}));

  std::vector<QVec> denom;
  for (int j = 0; j < n; ++j) {
    QVec f(n, 1);
    f[j] = 0;
    denom.push_back(std::move(f));
  }
  // -(1 + X1 + ... + Xn)^{n-1} over the product of (1 + f_j.X)
  Poly num = Poly::constant(n, 1);
  Poly lin = Poly::one_plus_linear(QVec(n, Rat(1)));
  for (int i = 0; i < n - 1; ++i) num = num.times(lin);
  for (const auto& [exp, c] : num.coef)
    out.terms.push_back(make_term(-c, exp, denom));
  return normalized(std::move(out));
}

// ---- quadrature ----

namespace {

// Gauss-Legendre nodes/weights on [0,1], orders 6 and 4 (the lower order
// is the embedded error reference).
constexpr int kGL = 6;
const double kNode[kGL] = {0.03376524289842399, 0.16939530676686776,
                           0.38069040695840156, 0.61930959304159844,
                           0.83060469323313224, 0.96623475710157601};
const double kWeight[kGL] = {0.08566224618958517, 0.18038078652406930,
                             0.23395696728634552, 0.23395696728634552,
                             0.18038078652406930, 0.08566224618958517};
constexpr int kGL4 = 4;
const double kNode4[kGL4] = {0.06943184420297371, 0.33000947820757187,
                             0.66999052179242813, 0.93056815579702629};
const double kWeight4[kGL4] = {0.17392742256872693, 0.32607257743127307,
                               0.32607257743127307, 0.17392742256872693};

struct CellIntegrand {
  int n = 0;
  int k = 0;                              // simplex dimension
  std::vector<std::vector<double>> edge;  // v_i - v_0
  std::vector<double> v0;
  std::vector<int> ext;
  std::vector<double> X;
  double jac_affine = 0;
  double nfact = 1;

  // s in [0,1]^k (Duffy onto the simplex), u in [0,1)^{|ext|}
  double eval(const double* s, const double* u) const {
    double x[8];
    for (int i = 0; i < n; ++i) x[i] = v0[i];
    double jac = jac_affine * nfact;
    double rem = 1.0;
    for (int i = 0; i < k; ++i) {
      double t = s[i] * rem;
      jac *= rem;
      rem -= t;
      for (int j = 0; j < n; ++j) x[j] += t * edge[i][j];
    }
    for (std::size_t w = 0; w < ext.size(); ++w) {
      double om = 1.0 - u[w];
      jac /= om * om;
      x[ext[w]] += u[w] / om;
    }
    double den = 1.0;
    double prodx = 1.0;
    for (int i = 0; i < n; ++i) {
      den += x[i] * X[i];
      prodx *= X[i];
    }
    double p = 1.0;
    for (int i = 0; i < n + 1; ++i) p *= den;
    return jac * prodx / p;
  }
};

struct Box {
  double lo[8];
  double hi[8];
};

double gl_box(const CellIntegrand& f, const Box& b, int dim, int order,
              const double* nodes, const double* weights) {
  // tensor Gauss-Legendre panel
  int idx[8] = {0};
  double total = 0;
  for (;;) {
    double pt[8], wt = 1;
    for (int i = 0; i < dim; ++i) {
      double h = b.hi[i] - b.lo[i];
      pt[i] = b.lo[i] + h * nodes[idx[i]];
      wt *= h * weights[idx[i]];
    }
    total += wt * f.eval(pt, pt + f.k);
    int i = 0;
    while (i < dim && ++idx[i] == order) idx[i++] = 0;
    if (i == dim) break;
  }
  return total;
}

double gl6(const CellIntegrand& f, const Box& b, int dim) {
  return gl_box(f, b, dim, kGL, kNode, kWeight);
}

double gl4(const CellIntegrand& f, const Box& b, int dim) {
  return gl_box(f, b, dim, kGL4, kNode4, kWeight4);
}

void split_box(const Box& b, int dim, Box& b1, Box& b2) {
  int split = 0;
  double len = 0;
  for (int i = 0; i < dim; ++i)
    if (b.hi[i] - b.lo[i] > len) {
      len = b.hi[i] - b.lo[i];
      split = i;
    }
  b1 = b;
  b2 = b;
  double mid = 0.5 * (b.lo[split] + b.hi[split]);
  b1.hi[split] = mid;
  b2.lo[split] = mid;
}

struct QBox {
  Box box;
  double value = 0;  // two-panel estimate
  double error = 0;  // |two-panel - one-panel|
  bool operator<(const QBox& o) const { return error < o.error; }
};

QBox measure(const CellIntegrand& f, const Box& b, int dim) {
  // two-panel refinement for the value; the error combines the panel
  // difference with an embedded lower-order difference, which stays
  // sensitive to error transverse to the split direction
  QBox q;
  q.box = b;
  double coarse = gl6(f, b, dim);
  Box b1, b2;
  split_box(b, dim, b1, b2);
  q.value = gl6(f, b1, dim) + gl6(f, b2, dim);
  q.error = std::abs(q.value - coarse) + std::abs(coarse - gl4(f, b, dim));
  return q;
}

// Global refinement by worst-first queue: never starves a region the way
// per-branch tolerance halving does, and bottoms out gracefully at the
// roundoff floor.
double adapt(const CellIntegrand& f, const Box& whole, int dim, double tol) {
  std::priority_queue<QBox> queue;
  queue.push(measure(f, whole, dim));
  double total = queue.top().value;
  double total_err = queue.top().error;
  const long budget = 200000;
  for (long it = 0; it < budget; ++it) {
    double floor = std::max(std::abs(total) * 1e-14, 1e-300);
    if (total_err <= std::max(tol * std::abs(total), floor)) return total;
    QBox worst = queue.top();
    queue.pop();
    Box b1, b2;
    split_box(worst.box, dim, b1, b2);
    QBox q1 = measure(f, b1, dim);
    QBox q2 = measure(f, b2, dim);
    total += q1.value + q2.value - worst.value;
    total_err += q1.error + q2.error - worst.error;
    queue.push(q1);
    queue.push(q2);
  }
  if (total_err > 100 * tol * std::abs(total))
    throw QuadratureError("quadrature tolerance not reached within budget");
  return total;
}

}  // namespace

double quadrature_cell(const Cell& cell, int n, const std::vector<double>& X,
                       double tol) {
  if (n > 8) throw QuadratureError("quadrature supports n <= 8");
  for (double x : X)
    if (!(x > 0)) throw QuadratureError("evaluation point must be positive");

  CellIntegrand f;
  f.n = n;
  f.k = cell.simplex_dim();
  f.ext = cell.extensions;
  f.X = X;
  const int dim = f.k + static_cast<int>(f.ext.size());
  if (dim != n)
    throw QuadratureError("cell dimension mismatch for quadrature");

  f.v0.resize(n);
  for (int i = 0; i < n; ++i)
    f.v0[i] = cell.simplex[0][i].convert_to<double>();
  QMat m(n, QVec(n, 0));
  for (int c = 0; c < f.k; ++c) {
    std::vector<double> e(n);
    for (int r = 0; r < n; ++r) {
      Rat d = cell.simplex[c + 1][r] - cell.simplex[0][r];
      e[r] = d.convert_to<double>();
      m[r][c] = d;
    }
    f.edge.push_back(std::move(e));
  }
  for (std::size_t w = 0; w < f.ext.size(); ++w) m[f.ext[w]][f.k + w] = 1;
  Rat det = rat_det(std::move(m));
  if (det == 0) return 0.0;  // flat cell
  f.jac_affine = std::abs(det.convert_to<double>());
  for (int i = 2; i <= n; ++i) f.nfact *= i;

  Box whole;
  for (int i = 0; i < dim; ++i) {
    whole.lo[i] = 0;
    whole.hi[i] = 1;
  }
  return adapt(f, whole, dim, tol);
}

// ---- cross checks ----

std::uint64_t resolve_seed(std::uint64_t requested) {
  if (requested != 0) return requested;
  if (const char* env = std::getenv("SEGRE_SEED")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v != 0) return v;
  }
  return 123456789ull;  // fixed default: reproducible runs
}

namespace {

QVec random_positive_point(std::mt19937_64& rng, int n, int max_num,
                           int max_den) {
  std::uniform_int_distribution<int> num(1, max_num);
  std::uniform_int_distribution<int> den(1, max_den);
  QVec p(n);
  for (int i = 0; i < n; ++i) p[i] = Rat(num(rng), den(rng));
  return p;
}

std::string rat_str(const Rat& r) { return to_str(r); }

}  // namespace

OracleReport cross_check(const MonomialIdealSpec& spec,
                         const CrossCheckOptions& options) {
  OracleReport report;
  std::mt19937_64 rng(resolve_seed(options.seed));
  auto push = [&report](std::string name, bool pass, std::string lhs,
                        std::string rhs, std::string tol) {
    report.checks.push_back(OracleCheck{std::move(name), pass, std::move(lhs),
                                        std::move(rhs), std::move(tol)});
  };

  MonomialIdealSpec canon = make_spec(spec.n, spec.generators);
  if (canon.unit_ideal) {
    SegreOutput out = compute_segre(canon);
    push("unit-ideal-zero-class", out.class_expr.is_zero(),
         out.class_expr.is_zero() ? "0" : "nonzero", "0", "exact");
    return report;
  }

  MonomialIdealSpec minimal = minimalize(canon);
  NewtonPolyhedron poly = build_polyhedron(minimal);
  CellSet fan = decompose_fan(poly);
  ClassExpr fan_expr = sum_cells(fan);

  // engine agreement (exact, n = 2 only)
  if (spec.n == 2) {
    CellSet stair = decompose_staircase(minimal);
    ClassExpr stair_expr = sum_cells(stair);
    bool ok = equal_rational(fan_expr, stair_expr);
    for (int i = 0; ok && i < 20; ++i) {
      QVec p = random_positive_point(rng, 2, 12, 12);
      ok = evaluate_exact(fan_expr, p) == evaluate_exact(stair_expr, p);
    }
    push("fan-vs-staircase", ok, to_str(fan.effective().size()) + " cells",
         to_str(stair.effective().size()) + " cells", "exact");
  }

  // family oracles
  if (minimal.generators.size() == 1) {
    bool ok = equal_rational(fan_expr, principal_class(minimal.generators[0]));
    push("fan-vs-principal", ok, "integral", "principal closed form", "exact");
  } else {
    std::vector<Int> m(spec.n, 0);
    bool is_ci = static_cast<int>(minimal.generators.size()) == spec.n;
    if (is_ci) {
      for (const IVec& g : minimal.generators) {
        int support = -1;
        for (int i = 0; i < spec.n; ++i) {
          if (g[i] != 0) {
            if (support != -1) {
              support = -2;
              break;
            }
            support = i;
          }
        }
        if (support < 0 || m[support] != 0) {
          is_ci = false;
          break;
        }
        m[support] = g[support];
      }
    }
    if (is_ci) {
      bool ok = equal_rational(fan_expr, complete_intersection_class(m));
      push("fan-vs-complete-intersection", ok, "integral",
           "product closed form", "exact");
    }
    if (spec.n >= 2 &&
        static_cast<int>(minimal.generators.size()) == spec.n) {
      bool is_family = true;
      for (const IVec& g : minimal.generators) {
        int zeros = 0;
        for (const Int& e : g) {
          if (e == 0)
            ++zeros;
          else if (e != 1)
            is_family = false;
        }
        if (zeros != 1) is_family = false;
      }
      if (is_family) {
        bool ok = equal_rational(fan_expr, singularity_family_class(spec.n));
        push("fan-vs-singularity-family", ok, "integral",
             "Chern class identity", "exact");
      }
    }
  }

  // per-cell quadrature
  if (spec.n <= 4) {
    std::vector<Cell> cells = fan.effective();
    std::vector<QVec> pts;
    for (int i = 0; i < options.random_points; ++i) {
      QVec p(spec.n);
      std::uniform_int_distribution<int> num(1, 8);
      for (int j = 0; j < spec.n; ++j) p[j] = Rat(num(rng), 40);
      pts.push_back(std::move(p));
    }
    struct Task {
      const Cell* cell;
      const QVec* point;
      double rel_err = 0;
      bool ok = true;
    };
    std::vector<Task> tasks;
    for (const Cell& c : cells)
      for (const QVec& p : pts) tasks.push_back(Task{&c, &p});
    auto run_range = [&](std::size_t lo, std::size_t hi) {
      for (std::size_t i = lo; i < hi; ++i) {
        Task& t = tasks[i];
        ClassExpr one;
        one.n = spec.n;
        one.terms.push_back(cell_integral(*t.cell, spec.n));
        Rat exact = evaluate_exact(one, *t.point);
        std::vector<double> Xd(spec.n);
        for (int j = 0; j < spec.n; ++j)
          Xd[j] = (*t.point)[j].convert_to<double>();
        double approx =
            quadrature_cell(*t.cell, spec.n, Xd, options.quad_rel_tol / 10);
        double ex = exact.convert_to<double>();
        t.rel_err = std::abs(approx - ex) / std::max(std::abs(ex), 1e-300);
        t.ok = t.rel_err < options.quad_rel_tol;
      }
    };
    int jobs = std::max(1, options.jobs);
    if (jobs == 1 || tasks.size() < 2) {
      run_range(0, tasks.size());
    } else {
      std::vector<std::thread> pool;
      std::size_t chunk = (tasks.size() + jobs - 1) / jobs;
      for (int j = 0; j < jobs; ++j) {
        std::size_t lo = j * chunk;
        std::size_t hi = std::min(tasks.size(), lo + chunk);
        if (lo < hi) pool.emplace_back(run_range, lo, hi);
      }
      for (auto& th : pool) th.join();
    }
    double worst = 0;
    bool ok = true;
    for (const Task& t : tasks) {
      worst = std::max(worst, t.rel_err);
      ok = ok && t.ok;
    }
    push("fan-vs-quadrature", ok, "max rel err " + to_str(worst), "0",
         to_str(options.quad_rel_tol));
  }

  // tiling
  TilingReport tiling =
      validate_tiling(fan, poly, options.grid_step, options.box_margin);
  push("tiling", tiling.ok(), to_str(tiling.violations.size()) + " violations",
       "0", "exact (grid step " + rat_str(options.grid_step) + ")");

  std::sort(report.checks.begin(), report.checks.end(),
            [](const OracleCheck& a, const OracleCheck& b) {
              return a.name < b.name;
            });
  return report;
}

}  // namespace segre
