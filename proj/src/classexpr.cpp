#include "segre/classexpr.hpp"

#include "segre/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace segre {

// ---- Poly ----

Poly Poly::constant(int nvars, const Rat& c) {
  Poly p{nvars, {}};
  if (c != 0) p.coef[std::vector<int>(nvars, 0)] = c;
  return p;
}

Poly Poly::monomial(int nvars, const std::vector<int>& exp, const Rat& c) {
  Poly p{nvars, {}};
  if (c != 0) p.coef[exp] = c;
  return p;
}

Poly Poly::one_plus_linear(const QVec& v) {
  const int n = static_cast<int>(v.size());
  Poly p = Poly::constant(n, 1);
  for (int i = 0; i < n; ++i) {
    if (v[i] == 0) continue;
    std::vector<int> e(n, 0);
    e[i] = 1;
    p.coef[e] = v[i];
  }
  return p;
}

int Poly::total_degree() const {
  int d = 0;
  for (const auto& [e, c] : coef)
    d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

Poly& Poly::add_term(const std::vector<int>& exp, const Rat& c) {
  auto it = coef.find(exp);
  if (it == coef.end()) {
    if (c != 0) coef.emplace(exp, c);
  } else {
    it->second += c;
    if (it->second == 0) coef.erase(it);
  }
  return *this;
}

Poly Poly::plus(const Poly& o) const {
  Poly out = *this;
  for (const auto& [e, c] : o.coef) out.add_term(e, c);
  return out;
}

Poly Poly::minus(const Poly& o) const {
  Poly out = *this;
  for (const auto& [e, c] : o.coef) out.add_term(e, -c);
  return out;
}

Poly Poly::times(const Poly& o, int truncate_degree) const {
  Poly out = Poly::zero(nvars);
  std::vector<int> e(nvars);
  for (const auto& [ea, ca] : coef) {
    int da = std::accumulate(ea.begin(), ea.end(), 0);
    for (const auto& [eb, cb] : o.coef) {
      if (truncate_degree >= 0) {
        int db = std::accumulate(eb.begin(), eb.end(), 0);
        if (da + db > truncate_degree) continue;
      }
      for (int i = 0; i < nvars; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Poly Poly::scaled(const Rat& c) const {
  Poly out = Poly::zero(nvars);
  if (c == 0) return out;
  for (const auto& [e, v] : coef) out.coef[e] = v * c;
  return out;
}

Poly Poly::truncated(int max_total_degree) const {
  Poly out = Poly::zero(nvars);
  for (const auto& [e, v] : coef)
    if (std::accumulate(e.begin(), e.end(), 0) <= max_total_degree)
      out.coef[e] = v;
  return out;
}

Rat Poly::eval(const QVec& point) const {
  Rat s = 0;
  for (const auto& [e, c] : coef) {
    Rat m = c;
    for (int i = 0; i < nvars; ++i)
      for (int j = 0; j < e[i]; ++j) m *= point[i];
    s += m;
  }
  return s;
}

Rat Poly::coefficient(const std::vector<int>& exp) const {
  auto it = coef.find(exp);
  return it == coef.end() ? Rat(0) : it->second;
}

Poly Poly::substitute_hyperplane(const std::vector<Int>& degrees) const {
  Poly out = Poly::zero(1);
  for (const auto& [e, c] : coef) {
    Rat m = c;
    int total = 0;
    for (int i = 0; i < nvars; ++i) {
      total += e[i];
      for (int j = 0; j < e[i]; ++j) m *= Rat(degrees[i]);
    }
    out.add_term({total}, m);
  }
  return out;
}

std::optional<Poly> Poly::divide_exact(const Poly& divisor) const {
  // divisor = 1 + L with L of positive degree: build the quotient by
  // increasing total degree via q = p - q*L, then verify.
  std::vector<int> zero(nvars, 0);
  if (divisor.coefficient(zero) != 1) return std::nullopt;
  Poly lin = divisor;
  lin.coef.erase(zero);
  if (is_zero()) return Poly::zero(nvars);
  const int dmax = total_degree();

  std::vector<Poly> q_parts(dmax + 1, Poly::zero(nvars));
  auto homo = [&](const Poly& p, int d) {
    Poly out = Poly::zero(nvars);
    for (const auto& [e, c] : p.coef)
      if (std::accumulate(e.begin(), e.end(), 0) == d) out.coef[e] = c;
    return out;
  };
  Poly correction = Poly::zero(nvars);  // running q * L
  Poly quotient = Poly::zero(nvars);
  for (int d = 0; d <= dmax; ++d) {
    Poly qd = homo(*this, d).minus(homo(correction, d));
    if (!qd.is_zero()) {
      correction = correction.plus(qd.times(lin, dmax));
      quotient = quotient.plus(qd);
    }
  }
  if (quotient.times(divisor) == *this) return quotient;
  return std::nullopt;
}

std::string Poly::str(const std::vector<std::string>& vars) const {
  if (coef.empty()) return "0";
  // print by increasing total degree, earlier variables first within a
  // degree (reverse lex on exponents)
  std::vector<std::pair<std::vector<int>, Rat>> terms(coef.begin(),
                                                      coef.end());
  std::stable_sort(terms.begin(), terms.end(),
                   [](const auto& a, const auto& b) {
                     int da = std::accumulate(a.first.begin(), a.first.end(), 0);
                     int db = std::accumulate(b.first.begin(), b.first.end(), 0);
                     if (da != db) return da < db;
                     return a.first > b.first;
                   });
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms) {
    Rat a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    bool has_var = std::any_of(e.begin(), e.end(), [](int x) { return x; });
    if (a != 1 || !has_var) os << a;
    bool started = (a != 1 || !has_var);
    for (int i = 0; i < nvars; ++i) {
      if (e[i] == 0) continue;
      if (started) os << "*";
      os << vars[i];
      if (e[i] > 1) os << "^" << e[i];
      started = true;
    }
  }
  return os.str();
}

// ---- ClassTerm / ClassExpr ----

ClassTerm make_term(const Rat& coeff, std::vector<int> numer_exp,
                    std::vector<QVec> denom) {
  ClassTerm t;
  t.coeff = coeff;
  t.numer_exp = std::move(numer_exp);
  denom.erase(std::remove_if(denom.begin(), denom.end(),
                             [](const QVec& v) { return is_zero_vec(v); }),
              denom.end());
  std::sort(denom.begin(), denom.end());
  t.denom = std::move(denom);
  return t;
}

ClassExpr normalized(ClassExpr e) {
  std::vector<ClassTerm> canon;
  for (ClassTerm& t : e.terms) {
    if (t.coeff == 0) continue;
    canon.push_back(make_term(t.coeff, t.numer_exp, t.denom));
  }
  std::sort(canon.begin(), canon.end(),
            [](const ClassTerm& a, const ClassTerm& b) {
              if (a.numer_exp != b.numer_exp) return a.numer_exp < b.numer_exp;
              return a.denom < b.denom;
            });
  std::vector<ClassTerm> merged;
  for (ClassTerm& t : canon) {
    if (!merged.empty() && merged.back().same_shape(t))
      merged.back().coeff += t.coeff;
    else
      merged.push_back(std::move(t));
  }
  merged.erase(std::remove_if(merged.begin(), merged.end(),
                              [](const ClassTerm& t) { return t.coeff == 0; }),
               merged.end());
  e.terms = std::move(merged);
  return e;
}

ClassExpr expr_add(const ClassExpr& a, const ClassExpr& b) {
  ClassExpr out;
  out.n = a.n ? a.n : b.n;
  out.terms = a.terms;
  out.terms.insert(out.terms.end(), b.terms.begin(), b.terms.end());
  return normalized(std::move(out));
}

ClassExpr expr_product(const ClassExpr& a, const ClassExpr& b) {
  ClassExpr out;
  out.n = a.n;
  for (const ClassTerm& ta : a.terms) {
    for (const ClassTerm& tb : b.terms) {
      std::vector<int> exp(ta.numer_exp);
      for (std::size_t i = 0; i < exp.size(); ++i) exp[i] += tb.numer_exp[i];
      std::vector<QVec> denom = ta.denom;
      denom.insert(denom.end(), tb.denom.begin(), tb.denom.end());
      out.terms.push_back(
          make_term(ta.coeff * tb.coeff, std::move(exp), std::move(denom)));
    }
  }
  return normalized(std::move(out));
}

ClassExpr expr_embed(const ClassExpr& e, int new_n) {
  ClassExpr out;
  out.n = new_n;
  for (const ClassTerm& t : e.terms) {
    std::vector<int> exp = t.numer_exp;
    exp.resize(new_n, 0);
    std::vector<QVec> denom;
    for (const QVec& v : t.denom) {
      QVec w = v;
      w.resize(new_n, Rat(0));
      denom.push_back(std::move(w));
    }
    out.terms.push_back(make_term(t.coeff, std::move(exp), std::move(denom)));
  }
  return normalized(std::move(out));
}

ClassTerm cell_integral(const Cell& cell, int n) {
  const int k = cell.simplex_dim();
  std::set<int> w(cell.extensions.begin(), cell.extensions.end());
  std::vector<int> J;
  for (int i = 0; i < n; ++i)
    if (!w.count(i)) J.push_back(i);
  if (static_cast<int>(J.size()) != k)
    throw std::invalid_argument(
        "cell dimension mismatch: |J| = " + to_str(J.size()) +
        " but simplex dimension = " + to_str(k));

  // k! Vol(pi_J(T)) collapses to |det| of the projected edge vectors.
  Rat coeff = 1;
  if (k > 0) {
    QMat m(k, QVec(k));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        m[i][j] = cell.simplex[i + 1][J[j]] - cell.simplex[0][J[j]];
    coeff = rat_det(std::move(m));
    if (coeff < 0) coeff = -coeff;
  }
  if (coeff == 0) return make_term(0, std::vector<int>(n, 0), {});

  std::vector<int> exp(n, 0);
  for (int j : J) exp[j] = 1;
  return make_term(coeff, std::move(exp), cell.simplex);
}

ClassExpr sum_cells(const CellSet& cells) {
  ClassExpr out;
  out.n = cells.n;
  for (const Cell& c : cells.cells) {
    if (c.degenerate) continue;
    ClassTerm t = cell_integral(c, cells.n);
    if (t.coeff != 0) out.terms.push_back(std::move(t));
  }
  return normalized(std::move(out));
}

// ---- series, specialization, closed form ----

namespace {

// 1/(1 + v.X) = sum_j (-v.X)^j, truncated.
Poly inverse_one_plus(const QVec& v, int D) {
  const int n = static_cast<int>(v.size());
  Poly lin = Poly::one_plus_linear(v);
  lin.coef.erase(std::vector<int>(n, 0));  // just v.X
  Poly out = Poly::constant(n, 1);
  Poly pow = Poly::constant(n, 1);
  for (int j = 1; j <= D; ++j) {
    pow = pow.times(lin, D).scaled(-1);
    if (pow.is_zero()) break;
    out = out.plus(pow);
  }
  return out;
}

}  // namespace

TruncatedSeries to_series(const ClassExpr& expr, int D) {
  if (D < 0) throw std::invalid_argument("series order must be >= 0");
  Poly acc = Poly::zero(expr.n);
  for (const ClassTerm& t : expr.terms) {
    Poly p = Poly::monomial(expr.n, t.numer_exp, t.coeff);
    if (p.total_degree() > D) continue;
    for (const QVec& v : t.denom) p = p.times(inverse_one_plus(v, D), D);
    acc = acc.plus(p);
  }
  return TruncatedSeries{expr.n, D, acc.truncated(D)};
}

ClassExpr specialize_expr(const ClassExpr& expr,
                          const std::vector<Int>& degrees) {
  if (static_cast<int>(degrees.size()) != expr.n)
    throw std::invalid_argument("degrees length must equal variable count");
  ClassExpr out;
  out.n = 1;
  for (const ClassTerm& t : expr.terms) {
    Rat c = t.coeff;
    int h_power = 0;
    for (int i = 0; i < expr.n; ++i) {
      h_power += t.numer_exp[i];
      for (int j = 0; j < t.numer_exp[i]; ++j) c *= Rat(degrees[i]);
    }
    std::vector<QVec> denom;
    for (const QVec& v : t.denom) {
      Rat s = 0;
      for (int i = 0; i < expr.n; ++i) s += v[i] * Rat(degrees[i]);
      denom.push_back(QVec{s});
    }
    out.terms.push_back(make_term(c, {h_power}, std::move(denom)));
  }
  return normalized(std::move(out));
}

TruncatedSeries specialize_series(const ClassExpr& expr,
                                  const std::vector<Int>& degrees,
                                  int ambient_dim) {
  if (ambient_dim < 1) throw std::invalid_argument("ambient dim must be >= 1");
  return to_series(specialize_expr(expr, degrees), ambient_dim);
}

std::vector<Rat> TruncatedSeries::h_coeffs() const {
  if (n != 1)
    throw std::logic_error("H coefficients only defined for univariate series");
  std::vector<Rat> out(max_degree + 1, 0);
  for (const auto& [e, c] : poly.coef) out[e[0]] = c;
  return out;
}

ClosedForm closed_form(const ClassExpr& expr) {
  ClosedForm cf;
  cf.numerator = Poly::zero(expr.n);
  if (expr.is_zero()) return cf;

  // Common denominator: every distinct factor with its largest
  // multiplicity across terms.
  std::map<QVec, int> common;
  for (const ClassTerm& t : expr.terms) {
    std::map<QVec, int> local;
    for (const QVec& v : t.denom) local[v]++;
    for (const auto& [v, m] : local)
      common[v] = std::max(common[v], m);
  }
  for (const ClassTerm& t : expr.terms) {
    std::map<QVec, int> local;
    for (const QVec& v : t.denom) local[v]++;
    Poly part = Poly::monomial(expr.n, t.numer_exp, t.coeff);
    for (const auto& [v, m] : common) {
      int missing = m - (local.count(v) ? local[v] : 0);
      Poly f = Poly::one_plus_linear(v);
      for (int i = 0; i < missing; ++i) part = part.times(f);
    }
    cf.numerator = cf.numerator.plus(part);
  }
  // Best-effort cancellation by repeated exact division.
  for (auto& [v, m] : common) {
    Poly f = Poly::one_plus_linear(v);
    while (m > 0) {
      auto q = cf.numerator.divide_exact(f);
      if (!q) break;
      cf.numerator = std::move(*q);
      --m;
    }
  }
  for (const auto& [v, m] : common)
    if (m > 0) cf.denominator.emplace_back(v, m);
  if (cf.numerator.is_zero()) cf.denominator.clear();
  return cf;
}

Rat evaluate_exact(const ClassExpr& expr, const QVec& point) {
  Rat s = 0;
  for (const ClassTerm& t : expr.terms) {
    Rat v = t.coeff;
    for (int i = 0; i < expr.n; ++i)
      for (int j = 0; j < t.numer_exp[i]; ++j) v *= point[i];
    for (const QVec& d : t.denom) {
      Rat den = 1 + dot(d, point);
      if (den == 0)
        throw std::domain_error("denominator vanishes at evaluation point");
      v /= den;
    }
    s += v;
  }
  return s;
}

bool equal_rational(const ClassExpr& a, const ClassExpr& b) {
  const int n = a.n ? a.n : b.n;
  if (a.n && b.n && a.n != b.n) return false;
  std::map<QVec, int> common;
  auto absorb = [&common](const ClassExpr& e) {
    for (const ClassTerm& t : e.terms) {
      std::map<QVec, int> local;
      for (const QVec& v : t.denom) local[v]++;
      for (const auto& [v, m] : local)
        common[v] = std::max(common[v], m);
    }
  };
  absorb(a);
  absorb(b);
  Poly diff = Poly::zero(n);
  auto accumulate_terms = [&](const ClassExpr& e, int sign) {
    for (const ClassTerm& t : e.terms) {
      std::map<QVec, int> local;
      for (const QVec& v : t.denom) local[v]++;
      Poly part = Poly::monomial(n, t.numer_exp, sign * t.coeff);
      for (const auto& [v, m] : common) {
        int missing = m - (local.count(v) ? local[v] : 0);
        Poly f = Poly::one_plus_linear(v);
        for (int i = 0; i < missing; ++i) part = part.times(f);
      }
      diff = diff.plus(part);
    }
  };
  accumulate_terms(a, 1);
  accumulate_terms(b, -1);
  return diff.is_zero();
}

ExcessResult excess(const TruncatedSeries& specialized,
                    const std::vector<Int>& degrees) {
  const int N = static_cast<int>(degrees.size());
  if (specialized.n != 1 || specialized.max_degree < N)
    throw std::invalid_argument(
        "excess needs a univariate series truncated at H^" + to_str(N));
  Poly prod = Poly::constant(1, 1);
  for (const Int& d : degrees)
    prod = prod.times(Poly::one_plus_linear(QVec{Rat(d)}), N);
  Poly total = prod.times(specialized.poly, N);
  ExcessResult out;
  out.equivalence = total.coefficient({N});
  out.bezout = 1;
  for (const Int& d : degrees) out.bezout *= d;
  out.excess = Rat(out.bezout) - out.equivalence;
  return out;
}

}  // namespace segre
