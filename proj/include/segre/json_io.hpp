#pragma once

#include "segre/oracles.hpp"
#include "segre/segre.hpp"

#include <json.hpp>

#include <string>

namespace segre {

// All JSON uses 1-based variable indices in extension/U sets, matching the
// x1..xn input grammar.

nlohmann::json polyhedron_json(const NewtonPolyhedron& poly);
nlohmann::json cells_json(const CellSet& cells);
nlohmann::json output_json(const SegreOutput& out);
nlohmann::json report_json(const OracleReport& report);
nlohmann::json excess_json(const ExcessResult& ex);

std::string term_str(const ClassTerm& t, const std::vector<std::string>& vars);
std::string expr_str(const ClassExpr& e, const std::vector<std::string>& vars);
std::string closed_form_str(const ClosedForm& cf,
                            const std::vector<std::string>& vars);
std::string series_ascending_str(const TruncatedSeries& s);
std::string series_descending_str(const TruncatedSeries& s);
std::string series_bracket_str(const TruncatedSeries& s, int ambient_dim);
std::vector<std::string> default_vars(int n);

std::string report_table(const OracleReport& report);

}  // namespace segre
