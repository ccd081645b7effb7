#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "tnineq/det_expr.hpp"
#include "tnineq/harness.hpp"
#include "tnineq/matrix.hpp"
#include "tnineq/multiplicative.hpp"

namespace tnineq {

// Wire formats (all coefficients and entries are exact rational strings):
//   expression:    {"n", "relation": "geq0"|"eq0"|"none",
//                   "terms": [{"coeff": "p/q",
//                              "minors": [{"rows": [...], "cols": [...]}]}]}
//   factorization: {"n", "factors": [{"kind": "lower"|"upper", "k", "w"}
//                                    | {"kind": "diag", "d": [...]}]}
//   matrix:        {"n", "entries": ["p/q", ...]}  (row-major)
//   query:         {"n", "P1": [...], ..., "J2": [...], "direction": "le"}
//   op:            {"axis": "row"|"col", "u", "v"}

nlohmann::json expr_to_json(const DetExpr& e);
DetExpr expr_from_json(const nlohmann::json& j);

nlohmann::json factorization_to_json(const BidiagFactorization& f);
BidiagFactorization factorization_from_json(const nlohmann::json& j);

nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j);

nlohmann::json query_to_json(const SmallestMultQuery& q);
/// Accepts direction "le" (as stored) or "ge" (sides swapped on load).
SmallestMultQuery query_from_json(const nlohmann::json& j);

nlohmann::json op_to_json(const OpSpec& op);
OpSpec op_from_json(const nlohmann::json& j);
nlohmann::json ops_to_json(std::span<const OpSpec> ops);

/// Parses "R1,2;C3,4" into operation specs.
std::vector<OpSpec> parse_op_string(const std::string& text);

nlohmann::json verdict_to_json(const Verdict& v);
nlohmann::json report_to_json(const VerifyReport& r);

}  // namespace tnineq
