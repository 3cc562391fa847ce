#include "segre/json_io.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace segre {

namespace {

nlohmann::json num_json(const Int& x) {
  // JSON numbers only up to what fits losslessly; strings beyond.
  if (x >= std::numeric_limits<long long>::min() &&
      x <= std::numeric_limits<long long>::max())
    return x.convert_to<long long>();
  return to_str(x);
}

nlohmann::json rat_json(const Rat& x) {
  if (denominator(x) == 1) return num_json(numerator(x));
  return to_str(x);
}

nlohmann::json ivec_json(const IVec& v) {
  nlohmann::json a = nlohmann::json::array();
  for (const Int& x : v) a.push_back(num_json(x));
  return a;
}

nlohmann::json qvec_json(const QVec& v) {
  nlohmann::json a = nlohmann::json::array();
  for (const Rat& x : v) a.push_back(rat_json(x));
  return a;
}

nlohmann::json index_set_json(const std::vector<int>& dirs) {
  nlohmann::json a = nlohmann::json::array();
  for (int d : dirs) a.push_back(d + 1);  // 1-based, matching x1..xn
  return a;
}

std::string rat_coeff_str(const Rat& r) { return to_str(r); }

}  // namespace

std::vector<std::string> default_vars(int n) {
  std::vector<std::string> v(n);
  for (int i = 0; i < n; ++i) v[i] = "X" + std::to_string(i + 1);
  return v;
}

nlohmann::json polyhedron_json(const NewtonPolyhedron& poly) {
  nlohmann::json out;
  out["n"] = poly.n;
  out["facets"] = nlohmann::json::array();
  for (const auto& f : poly.facets)
    out["facets"].push_back(
        {{"normal", ivec_json(f.normal)}, {"offset", num_json(f.offset)}});
  out["vertices"] = nlohmann::json::array();
  for (const auto& v : poly.vertices) out["vertices"].push_back(ivec_json(v));
  out["compact_faces"] = nlohmann::json::array();
  for (const auto& f : compact_faces(poly)) {
    nlohmann::json verts = nlohmann::json::array();
    for (int id : f.vertex_ids) verts.push_back(ivec_json(poly.vertices[id]));
    out["compact_faces"].push_back(
        {{"verts", verts}, {"U", index_set_json(f.extensions)}});
  }
  return out;
}

nlohmann::json cells_json(const CellSet& cells) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Cell& c : cells.cells) {
    nlohmann::json simplex = nlohmann::json::array();
    for (const QVec& v : c.simplex) simplex.push_back(qvec_json(v));
    arr.push_back({{"simplex", simplex},
                   {"extensions", index_set_json(c.extensions)},
                   {"engine", c.engine},
                   {"degenerate", c.degenerate}});
  }
  return {{"cells", arr}};
}

std::string term_str(const ClassTerm& t,
                     const std::vector<std::string>& vars) {
  std::ostringstream os;
  Poly num = Poly::monomial(static_cast<int>(vars.size()), t.numer_exp,
                            t.coeff);
  os << num.str(vars);
  if (!t.denom.empty()) {
    os << " / [";
    for (std::size_t i = 0; i < t.denom.size(); ++i) {
      if (i) os << "*";
      os << "(" << Poly::one_plus_linear(t.denom[i]).str(vars) << ")";
    }
    os << "]";
  }
  return os.str();
}

std::string expr_str(const ClassExpr& e, const std::vector<std::string>& vars) {
  if (e.terms.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < e.terms.size(); ++i) {
    if (i) os << " + ";
    os << term_str(e.terms[i], vars);
  }
  return os.str();
}

std::string closed_form_str(const ClosedForm& cf,
                            const std::vector<std::string>& vars) {
  std::ostringstream os;
  os << "(" << cf.numerator.str(vars) << ")";
  if (!cf.denominator.empty()) {
    os << " / [";
    bool first = true;
    for (const auto& [v, mult] : cf.denominator) {
      if (!first) os << "*";
      first = false;
      os << "(" << Poly::one_plus_linear(v).str(vars) << ")";
      if (mult > 1) os << "^" << mult;
    }
    os << "]";
  }
  return os.str();
}

namespace {

std::string h_term(const Rat& c, int pow, bool leading) {
  std::ostringstream os;
  Rat a = c;
  if (leading) {
    if (a < 0) {
      os << "- ";
      a = -a;
    }
  } else {
    os << (a < 0 ? " - " : " + ");
    if (a < 0) a = -a;
  }
  if (a != 1 || pow == 0) os << a;
  if (pow >= 1) {
    os << "H";
    if (pow > 1) os << "^" << pow;
  }
  return os.str();
}

}  // namespace

std::string series_ascending_str(const TruncatedSeries& s) {
  std::vector<Rat> c = s.h_coeffs();
  std::ostringstream os;
  bool first = true;
  for (int j = 0; j <= s.max_degree; ++j) {
    if (c[j] == 0) continue;
    os << h_term(c[j], j, first);
    first = false;
  }
  return first ? "0" : os.str();
}

std::string series_descending_str(const TruncatedSeries& s) {
  std::vector<Rat> c = s.h_coeffs();
  std::ostringstream os;
  bool first = true;
  for (int j = s.max_degree; j >= 0; --j) {
    if (c[j] == 0) continue;
    os << h_term(c[j], j, first);
    first = false;
  }
  return first ? "0" : os.str();
}

std::string series_bracket_str(const TruncatedSeries& s, int ambient_dim) {
  std::vector<Rat> c = s.h_coeffs();
  std::ostringstream os;
  bool first = true;
  for (int j = 0; j <= s.max_degree; ++j) {
    if (c[j] == 0) continue;
    Rat a = c[j];
    if (first) {
      if (a < 0) {
        os << "- ";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    if (a != 1) os << a;
    os << "[P^" << (ambient_dim - j) << "]";
  }
  return first ? "0" : os.str();
}

nlohmann::json excess_json(const ExcessResult& ex) {
  return {{"equivalence", rat_json(ex.equivalence)},
          {"bezout", num_json(ex.bezout)},
          {"excess", rat_json(ex.excess)}};
}

nlohmann::json output_json(const SegreOutput& out) {
  nlohmann::json j;
  j["ideal"] = {{"n", out.spec.n}, {"generators", nlohmann::json::array()}};
  for (const IVec& g : out.spec.generators)
    j["ideal"]["generators"].push_back(ivec_json(g));
  j["ideal"]["unit"] = out.spec.unit_ideal;
  j["minimal_generators"] = nlohmann::json::array();
  for (const IVec& g : out.minimal.generators)
    j["minimal_generators"].push_back(ivec_json(g));
  j["conjectural"] = out.conjectural;

  std::vector<std::string> vars = default_vars(out.spec.n);
  j["class"] = expr_str(out.class_expr, vars);
  j["cells"] = nlohmann::json::array();
  for (const auto& [cell, term] : out.breakdown)
    j["cells"].push_back({{"term", term_str(term, vars)},
                          {"engine", cell.engine},
                          {"provenance", cell.provenance}});
  if (out.specialized) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const Rat& c : out.specialized->h_coeffs()) coeffs.push_back(rat_json(c));
    j["series"] = {{"H_coeffs", coeffs}};
  }
  if (out.closed) {
    nlohmann::json dens = nlohmann::json::array();
    std::vector<std::string> h = {"H"};
    for (const auto& [v, mult] : out.closed->denominator) {
      std::string f = "(" + Poly::one_plus_linear(v).str(h) + ")";
      if (mult > 1) f += "^" + std::to_string(mult);
      dens.push_back(f);
    }
    j["closed_form"] = {{"num", out.closed->numerator.str(h)},
                        {"den_factors", dens}};
  }
  return j;
}

nlohmann::json report_json(const OracleReport& report) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : report.checks)
    arr.push_back({{"name", c.name},
                   {"status", c.pass ? "pass" : "fail"},
                   {"lhs", c.lhs},
                   {"rhs", c.rhs},
                   {"tolerance", c.tolerance}});
  return {{"checks", arr}, {"all_pass", report.all_pass()}};
}

std::string report_table(const OracleReport& report) {
  std::size_t w = 4;
  for (const auto& c : report.checks) w = std::max(w, c.name.size());
  std::ostringstream os;
  for (const auto& c : report.checks) {
    os << (c.pass ? "PASS  " : "FAIL  ") << c.name;
    os << std::string(w - c.name.size() + 2, ' ');
    os << c.lhs << " vs " << c.rhs << "  (tol " << c.tolerance << ")\n";
  }
  os << (report.all_pass() ? "all checks passed" : "CHECK FAILURES PRESENT")
     << "\n";
  return os.str();
}

}  // namespace segre
