#include "segre/json_io.hpp"
#include "segre/oracles.hpp"
#include "segre/segre.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace segre;

struct CommonArgs {
  std::string ideal;
  std::string ideal_file;
  std::string engine = "fan";
  std::string degrees;
  int ambient_dim = 0;
  int truncate = 0;
  std::string format = "text";
  std::string grid_step = "1/4";
  std::string box_margin = "2";
  double tol = 1e-6;
  int jobs = 1;
  bool verify = false;
};

void add_common(CLI::App* cmd, CommonArgs& a) {
  cmd->add_option("--ideal", a.ideal, "ideal as text, e.g. \"x1^2*x2^6,x1^7\"");
  cmd->add_option("--ideal-file", a.ideal_file, "file with the ideal text");
  cmd->add_option("--engine", a.engine, "fan | staircase | both")
      ->check(CLI::IsMember({"fan", "staircase", "both"}));
  cmd->add_option("--degrees", a.degrees, "comma-separated degree list");
  cmd->add_option("--ambient-dim", a.ambient_dim, "ambient projective dim");
  cmd->add_option("--truncate", a.truncate, "series truncation order");
  cmd->add_option("--format", a.format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--grid-step", a.grid_step, "tiling grid step (rational)");
  cmd->add_option("--box-margin", a.box_margin, "tiling box margin (rational)");
  cmd->add_option("--tol", a.tol, "quadrature relative tolerance");
  cmd->add_option("--jobs", a.jobs, "worker threads for verification");
  cmd->add_flag("--verify", a.verify,
                "also run the oracle cross-checks; nonzero exit on failure");
}

Rat parse_rat(const std::string& s) {
  if (auto slash = s.find('/'); slash != std::string::npos)
    return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
  return Rat(Int(s));
}

int run_cross_checks(const MonomialIdealSpec& spec, const CommonArgs& a) {
  CrossCheckOptions opt;
  opt.grid_step = parse_rat(a.grid_step);
  opt.box_margin = parse_rat(a.box_margin);
  opt.quad_rel_tol = a.tol;
  opt.jobs = a.jobs;
  OracleReport report = cross_check(spec, opt);
  if (a.format == "json") {
    nlohmann::json j = report_json(report);
    if (!spec.unit_ideal)
      j["polyhedron"] = polyhedron_json(build_polyhedron(minimalize(spec)));
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << report_table(report);
  }
  return report.all_pass() ? 0 : 1;
}

MonomialIdealSpec load_ideal(const CommonArgs& a) {
  std::string text = a.ideal;
  if (!a.ideal_file.empty()) {
    std::ifstream in(a.ideal_file);
    if (!in) throw ParseError("cannot open ideal file " + a.ideal_file);
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  if (text.empty()) throw ParseError("no ideal given (--ideal or --ideal-file)");
  return parse_ideal(text);
}

std::vector<Int> parse_degree_list(const std::string& s) {
  std::vector<Int> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, ',')) {
    if (cur.empty()) continue;
    out.emplace_back(cur);
  }
  return out;
}

Engine parse_engine(const std::string& s) {
  if (s == "staircase") return Engine::Staircase;
  if (s == "both") return Engine::Both;
  return Engine::Fan;
}

SegreOutput run_pipeline(const MonomialIdealSpec& spec, const CommonArgs& a,
                         const std::vector<Int>& degrees, int ambient) {
  SegreOptions opt;
  opt.engine = parse_engine(a.engine);
  opt.degrees = degrees;
  opt.ambient_dim = ambient;
  if (a.truncate > 0) opt.truncate = a.truncate;
  return compute_segre(spec, opt);
}

void print_text_output(const SegreOutput& out, int ambient) {
  std::vector<std::string> vars = default_vars(out.spec.n);
  std::cout << "class = " << expr_str(out.class_expr, vars) << "\n";
  for (const auto& [cell, term] : out.breakdown)
    std::cout << "  cell " << cell.provenance << ": " << term_str(term, vars)
              << "\n";
  if (out.specialized) {
    std::cout << "s(S, P^" << ambient
              << ") = " << series_ascending_str(*out.specialized) << "\n";
    std::cout << "     = " << series_bracket_str(*out.specialized, ambient)
              << "\n";
    std::cout << "Segre class : " << series_descending_str(*out.specialized)
              << "\n";
  }
  if (out.closed)
    std::cout << "closed form = " << closed_form_str(*out.closed, {"H"})
              << "\n";
  if (out.conjectural)
    std::cout << "note: n > 2, result is conjectural (Conjecture 1)\n";
}

int cmd_compute(const CommonArgs& a) {
  MonomialIdealSpec spec = load_ideal(a);
  std::vector<Int> degrees = a.degrees.empty()
                                 ? std::vector<Int>(spec.n, 1)
                                 : parse_degree_list(a.degrees);
  int ambient = a.ambient_dim > 0 ? a.ambient_dim : spec.n;
  SegreOutput out = run_pipeline(spec, a, degrees, ambient);
  if (a.format == "json") {
    std::cout << output_json(out).dump(2) << "\n";
  } else {
    print_text_output(out, ambient);
  }
  if (a.verify) return run_cross_checks(spec, a);
  return 0;
}

int cmd_decompose(const CommonArgs& a) {
  MonomialIdealSpec spec = load_ideal(a);
  if (spec.unit_ideal) {
    std::cout << nlohmann::json({{"unit", true}, {"cells", nlohmann::json::array()}})
                     .dump(2)
              << "\n";
    return 0;
  }
  MonomialIdealSpec minimal = minimalize(spec);
  NewtonPolyhedron poly = build_polyhedron(minimal);
  CellSet cells = parse_engine(a.engine) == Engine::Staircase
                      ? decompose_staircase(minimal)
                      : decompose_fan(poly);
  nlohmann::json j = polyhedron_json(poly);
  j.update(cells_json(cells));
  std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_excess(const CommonArgs& a) {
  MonomialIdealSpec spec = load_ideal(a);
  if (a.degrees.empty())
    throw ParseError("excess requires --degrees (hypersurface degrees)");
  std::vector<Int> cutting = parse_degree_list(a.degrees);
  int ambient = a.ambient_dim > 0 ? a.ambient_dim
                                  : static_cast<int>(cutting.size());
  if (ambient != static_cast<int>(cutting.size()))
    throw ParseError("degrees length must equal ambient dimension");
  // X_i are hyperplane classes (degree 1); --degrees carries the degrees
  // of the hypersurfaces cutting out the subscheme.
  SegreOutput out = run_pipeline(spec, a, std::vector<Int>(spec.n, 1), ambient);
  ExcessResult ex = excess(*out.specialized, cutting);
  if (a.format == "json") {
    nlohmann::json j = output_json(out);
    j["excess"] = excess_json(ex);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "s(S, P^" << ambient
              << ") = " << series_ascending_str(*out.specialized) << "\n";
    std::cout << "equivalence = " << ex.equivalence << "\n";
    std::cout << "bezout      = " << ex.bezout << "\n";
    std::cout << "excess      = " << ex.excess
              << "  (bezout - equivalence; the opposite orientation is "
              << (ex.equivalence - Rat(ex.bezout)) << ")\n";
    if (out.conjectural)
      std::cout << "note: n > 2, result is conjectural (Conjecture 1)\n";
  }
  return 0;
}

int cmd_verify(const CommonArgs& a) {
  return run_cross_checks(load_ideal(a), a);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"segre: push-forward Segre classes of monomial subschemes "
               "from Newton regions, in exact arithmetic"};
  app.require_subcommand(1);

  CommonArgs compute_args, decompose_args, excess_args, verify_args;
  CLI::App* compute = app.add_subcommand(
      "compute", "compute the class, series, and closed form");
  add_common(compute, compute_args);
  CLI::App* decompose = app.add_subcommand(
      "decompose", "emit the polyhedron, faces, and cells as JSON");
  add_common(decompose, decompose_args);
  CLI::App* excess_cmd = app.add_subcommand(
      "excess", "excess-intersection numbers for given hypersurface degrees");
  add_common(excess_cmd, excess_args);
  CLI::App* verify = app.add_subcommand(
      "verify", "run the independent oracle checks; nonzero exit on failure");
  add_common(verify, verify_args);

  try {
    app.parse(argc, argv);
    if (compute->parsed()) return cmd_compute(compute_args);
    if (decompose->parsed()) return cmd_decompose(decompose_args);
    if (excess_cmd->parsed()) return cmd_excess(excess_args);
    if (verify->parsed()) return cmd_verify(verify_args);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
