#pragma once

// JSON wire formats shared by the command line tool and the tests.
// Doubles are written with 12 significant digits.

#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "schurnorm/core.hpp"
#include "schurnorm/flow.hpp"
#include "schurnorm/gamma2.hpp"
#include "schurnorm/graphs.hpp"
#include "schurnorm/symmetry.hpp"
#include "schurnorm/tpatterns.hpp"

namespace schurnorm::json_io {

using Json = nlohmann::ordered_json;

/// Round to 12 significant digits.
double round12(double x);

/// Parses text; syntax errors become InvalidInput with "source:line:column".
Json parse_document(const std::string& text, const std::string& source = "<input>");
Json read_file(const std::string& path);

// {"rows": r, "cols": c, "data": [[re, im], ...]} row-major; a bare number is a real entry.
Json to_json(const DenseMatrix& m);
DenseMatrix matrix_from_json(const Json& j);
NonnegMatrix nonneg_from_json(const Json& j);

// {"rows": r, "cols": c, "entries": [[i, j], ...]}
Json to_json(const Pattern& p);
Pattern pattern_from_json(const Json& j);

// {"x": [[[re, im], ...], ...], "y": ..., "bound": b}
Json to_json(const gamma2::HaagerupVectors& h);
gamma2::HaagerupVectors haagerup_from_json(const Json& j);

// {"B": matrix, "bound": b}
Json to_json(const gamma2::Witness& w);
gamma2::Witness witness_from_json(const Json& j);

// {"value", "tol", "upper": Haagerup vectors, "lower": witness}
Json to_json(const gamma2::NormReport& r);
gamma2::NormReport norm_report_from_json(const Json& j);

// {"kind": "decomposition", "row_bound", "col_bound", "row_count_bound", "col_count_bound", "row_part", "col_part"}
Json to_json(const flow::PatternDecomposition& d);
flow::PatternDecomposition pattern_decomposition_from_json(const Json& j);
Json to_json(const flow::MatrixDecomposition& d);
flow::MatrixDecomposition matrix_decomposition_from_json(const Json& j);

// {"kind": "cut", "R": [...], "C": [...], "mass", "slack"}
Json to_json(const flow::CutCertificate& c);
flow::CutCertificate cut_from_json(const Json& j);

Json to_json(const flow::Interval& i);  // [lower, upper]

// {"points": n, "generators": [[...], ...]}
Json to_json(const symmetry::GroupAction& g);
symmetry::GroupAction action_from_json(const Json& j);

// [[re, im], ...]
std::vector<cplx> coeffs_from_json(const Json& j);
Json coeffs_to_json(const std::vector<cplx>& c);

// {"num": "...", "den": "..."}
Json to_json(const graphs::Rational& q);
graphs::Rational rational_from_json(const Json& j);

// {"values": [...]}
Json to_json(const tpatterns::DiagonalSet& s);
tpatterns::DiagonalSet diagonal_set_from_json(const Json& j);

// {"signs": [...], "sup_norm": x, "seed": n, "grid_points": g, "trials": t}
Json to_json(const tpatterns::FlatSignResult& r);
tpatterns::FlatSignResult flat_signs_from_json(const Json& j);

Json to_json(const tpatterns::LacunaryReport& r);
Json to_json(const graphs::SchemeReport& r);

/// Comma separated integers such as "1,2,4" or "0..7".
std::vector<std::int64_t> parse_int_list(const std::string& text);

/// Comma separated k:re[:im] coefficients, e.g. "0:1,3:0.5:-2".
std::map<std::int64_t, cplx> parse_coeff_list(const std::string& text);

}  // namespace schurnorm::json_io
