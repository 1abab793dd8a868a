#include "schurnorm/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace schurnorm::json_io {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw Error(ErrorKind::InvalidInput, msg); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) fail(std::string("expected an object with field '") + key + "'");
  const auto it = j.find(key);
  if (it == j.end()) fail(std::string("missing field '") + key + "'");
  return *it;
}

double number(const Json& v, const char* what) {
  if (!v.is_number()) fail(std::string(what) + " must be a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) fail(std::string(what) + " must be finite");
  return x;
}

std::size_t index(const Json& v, const char* what) {
  if (!v.is_number_integer() || (v.is_number_integer() && !v.is_number_unsigned() && v.get<std::int64_t>() < 0))
    fail(std::string(what) + " must be a nonnegative integer");
  return v.get<std::size_t>();
}

std::int64_t integer(const Json& v, const char* what) {
  if (!v.is_number_integer()) fail(std::string(what) + " must be an integer");
  return v.get<std::int64_t>();
}

const Json& array(const Json& v, const char* what) {
  if (!v.is_array()) fail(std::string(what) + " must be an array");
  return v;
}

cplx scalar_from_json(const Json& v) {
  if (v.is_number()) return {number(v, "matrix entry"), 0.0};
  if (v.is_array() && v.size() == 2) return {number(v[0], "real part"), number(v[1], "imaginary part")};
  fail("a complex entry must be a number or [re, im]");
}

Json scalar_to_json(cplx z) { return Json::array({round12(z.real()), round12(z.imag())}); }

std::pair<std::size_t, std::size_t> shape(const Json& j) {
  const std::size_t rows = index(field(j, "rows"), "rows");
  const std::size_t cols = index(field(j, "cols"), "cols");
  return {rows, cols};
}

std::vector<std::size_t> index_list(const Json& j, const char* what) {
  std::vector<std::size_t> out;
  for (const Json& v : array(j, what)) out.push_back(index(v, what));
  return out;
}

Json vectors_to_json(const std::vector<std::vector<cplx>>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(coeffs_to_json(v));
  return out;
}

std::vector<std::vector<cplx>> vectors_from_json(const Json& j, const char* what) {
  std::vector<std::vector<cplx>> out;
  for (const Json& v : array(j, what)) out.push_back(coeffs_from_json(v));
  return out;
}

std::int64_t parse_int(const std::string& token) {
  std::size_t used = 0;
  std::int64_t value = 0;
  try {
    value = std::stoll(token, &used);
  } catch (const std::exception&) {
    fail("not an integer: '" + token + "'");
  }
  if (used != token.size()) fail("not an integer: '" + token + "'");
  return value;
}

double parse_double(const std::string& token) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(token, &used);
  } catch (const std::exception&) {
    fail("not a number: '" + token + "'");
  }
  if (used != token.size() || !std::isfinite(value)) fail("not a finite number: '" + token + "'");
  return value;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    out.push_back(b == std::string::npos ? std::string() : item.substr(b, e - b + 1));
  }
  return out;
}

}  // namespace

double round12(double x) {
  if (!std::isfinite(x) || x == 0.0) return x == 0.0 ? 0.0 : x;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

Json parse_document(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    // byte offset -> line and column
    const std::size_t pos = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    std::size_t line = 1, col = 1;
    for (std::size_t k = 0; k < pos; ++k) {
      if (text[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    const std::size_t line_start = text.rfind('\n', pos == 0 ? 0 : pos - 1);
    const std::size_t from = line_start == std::string::npos || pos == 0 ? 0 : line_start + 1;
    const std::size_t to = text.find('\n', from);
    std::ostringstream msg;
    msg << source << ":" << line << ":" << col << ": malformed JSON near '"
        << text.substr(from, (to == std::string::npos ? text.size() : to) - from) << "'";
    throw Error(ErrorKind::InvalidInput, msg.str());
  } catch (const nlohmann::json::exception& e) {
    // number overflow and similar errors carry no position
    throw Error(ErrorKind::InvalidInput, source + ": " + e.what());
  }
}

Json read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str(), path);
}

Json to_json(const DenseMatrix& m) {
  Json data = Json::array();
  for (cplx z : m.data()) data.push_back(scalar_to_json(z));
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

DenseMatrix matrix_from_json(const Json& j) {
  const auto [rows, cols] = shape(j);
  if (rows == 0 || cols == 0) fail("matrix dimensions must be positive");
  const Json& data = array(field(j, "data"), "data");
  if (data.size() != rows * cols) {
    std::ostringstream msg;
    msg << "data has " << data.size() << " entries, expected rows*cols = " << rows * cols;
    fail(msg.str());
  }
  std::vector<cplx> values;
  values.reserve(data.size());
  for (const Json& v : data) values.push_back(scalar_from_json(v));
  return DenseMatrix(rows, cols, std::move(values));
}

NonnegMatrix nonneg_from_json(const Json& j) { return NonnegMatrix(matrix_from_json(j)); }

Json to_json(const Pattern& p) {
  Json entries = Json::array();
  for (const Entry& e : p.entries()) entries.push_back(Json::array({e.row, e.col}));
  return Json{{"rows", p.n_rows()}, {"cols", p.n_cols()}, {"entries", std::move(entries)}};
}

Pattern pattern_from_json(const Json& j) {
  const auto [rows, cols] = shape(j);
  std::vector<Entry> entries;
  for (const Json& e : array(field(j, "entries"), "entries")) {
    if (!e.is_array() || e.size() != 2) fail("each pattern entry must be [i, j]");
    entries.push_back({index(e[0], "row index"), index(e[1], "column index")});
  }
  return Pattern(rows, cols, std::move(entries));
}

Json to_json(const gamma2::HaagerupVectors& h) {
  return Json{{"x", vectors_to_json(h.x)}, {"y", vectors_to_json(h.y)}, {"bound", round12(h.bound)}};
}

gamma2::HaagerupVectors haagerup_from_json(const Json& j) {
  gamma2::HaagerupVectors h;
  h.x = vectors_from_json(field(j, "x"), "x");
  h.y = vectors_from_json(field(j, "y"), "y");
  h.bound = number(field(j, "bound"), "bound");
  return h;
}

Json to_json(const gamma2::Witness& w) {
  return Json{{"B", to_json(w.test)}, {"bound", round12(w.bound)}};
}

gamma2::Witness witness_from_json(const Json& j) {
  return {matrix_from_json(field(j, "B")), number(field(j, "bound"), "bound")};
}

Json to_json(const gamma2::NormReport& r) {
  return Json{{"value", round12(r.value)},
              {"tol", round12(r.tol)},
              {"upper", to_json(r.upper)},
              {"lower", to_json(r.lower)}};
}

gamma2::NormReport norm_report_from_json(const Json& j) {
  gamma2::NormReport r;
  r.value = number(field(j, "value"), "value");
  r.tol = number(field(j, "tol"), "tol");
  r.upper = haagerup_from_json(field(j, "upper"));
  r.lower = witness_from_json(field(j, "lower"));
  return r;
}

Json to_json(const flow::PatternDecomposition& d) {
  return Json{{"kind", "decomposition"},
              {"row_bound", round12(d.row_bound)},
              {"col_bound", round12(d.col_bound)},
              {"row_count_bound", d.row_count_bound},
              {"col_count_bound", d.col_count_bound},
              {"row_part", to_json(d.row_part)},
              {"col_part", to_json(d.col_part)}};
}

flow::PatternDecomposition pattern_decomposition_from_json(const Json& j) {
  flow::PatternDecomposition d{pattern_from_json(field(j, "row_part")), pattern_from_json(field(j, "col_part"))};
  d.row_count_bound = index(field(j, "row_count_bound"), "row_count_bound");
  d.col_count_bound = index(field(j, "col_count_bound"), "col_count_bound");
  d.row_bound = number(field(j, "row_bound"), "row_bound");
  d.col_bound = number(field(j, "col_bound"), "col_bound");
  return d;
}

Json to_json(const flow::MatrixDecomposition& d) {
  return Json{{"kind", "decomposition"},
              {"row_bound", round12(d.row_bound)},
              {"col_bound", round12(d.col_bound)},
              {"row_part", to_json(d.row_part.matrix())},
              {"col_part", to_json(d.col_part.matrix())}};
}

flow::MatrixDecomposition matrix_decomposition_from_json(const Json& j) {
  flow::MatrixDecomposition d{nonneg_from_json(field(j, "row_part")), nonneg_from_json(field(j, "col_part"))};
  d.row_bound = number(field(j, "row_bound"), "row_bound");
  d.col_bound = number(field(j, "col_bound"), "col_bound");
  return d;
}

Json to_json(const flow::CutCertificate& c) {
  return Json{{"kind", "cut"}, {"R", c.rows}, {"C", c.cols}, {"mass", round12(c.mass)}, {"slack", round12(c.slack)}};
}

flow::CutCertificate cut_from_json(const Json& j) {
  flow::CutCertificate c;
  c.rows = index_list(field(j, "R"), "R");
  c.cols = index_list(field(j, "C"), "C");
  c.mass = number(field(j, "mass"), "mass");
  c.slack = number(field(j, "slack"), "slack");
  return c;
}

Json to_json(const flow::Interval& i) { return Json::array({round12(i.lower), round12(i.upper)}); }

Json to_json(const symmetry::GroupAction& g) {
  return Json{{"points", g.n_points()}, {"generators", g.generators()}};
}

symmetry::GroupAction action_from_json(const Json& j) {
  const std::size_t n = index(field(j, "points"), "points");
  std::vector<symmetry::Permutation> gens;
  for (const Json& g : array(field(j, "generators"), "generators")) gens.push_back(index_list(g, "generator"));
  return symmetry::GroupAction(n, std::move(gens));
}

std::vector<cplx> coeffs_from_json(const Json& j) {
  std::vector<cplx> out;
  for (const Json& v : array(j, "coefficients")) out.push_back(scalar_from_json(v));
  return out;
}

Json coeffs_to_json(const std::vector<cplx>& c) {
  Json out = Json::array();
  for (cplx z : c) out.push_back(scalar_to_json(z));
  return out;
}

Json to_json(const graphs::Rational& q) {
  return Json{{"num", boost::multiprecision::numerator(q).str()}, {"den", boost::multiprecision::denominator(q).str()}};
}

graphs::Rational rational_from_json(const Json& j) {
  const Json& num = field(j, "num");
  const Json& den = field(j, "den");
  if (!num.is_string() || !den.is_string()) fail("rational num/den must be decimal strings");
  try {
    const graphs::BigInt n(num.get<std::string>());
    const graphs::BigInt d(den.get<std::string>());
    if (d <= 0) fail("rational denominator must be positive");
    return graphs::Rational(n, d);
  } catch (const std::runtime_error& e) {
    if (dynamic_cast<const Error*>(&e)) throw;
    fail("rational num/den must be decimal strings");
  }
}

Json to_json(const tpatterns::DiagonalSet& s) { return Json{{"values", s.values()}}; }

tpatterns::DiagonalSet diagonal_set_from_json(const Json& j) {
  std::vector<std::int64_t> values;
  for (const Json& v : array(field(j, "values"), "values")) values.push_back(integer(v, "diagonal index"));
  return tpatterns::DiagonalSet(std::move(values));
}

Json to_json(const tpatterns::FlatSignResult& r) {
  return Json{{"signs", r.signs},
              {"sup_norm", round12(r.sup_norm)},
              {"seed", r.seed},
              {"grid_points", r.grid_points},
              {"trials", r.trials}};
}

tpatterns::FlatSignResult flat_signs_from_json(const Json& j) {
  tpatterns::FlatSignResult r;
  for (const Json& v : array(field(j, "signs"), "signs")) {
    const std::int64_t s = integer(v, "sign");
    if (s != 1 && s != -1) fail("signs must be +1 or -1");
    r.signs.push_back(static_cast<int>(s));
  }
  r.sup_norm = number(field(j, "sup_norm"), "sup_norm");
  r.seed = field(j, "seed").get<std::uint64_t>();
  if (j.contains("grid_points")) r.grid_points = index(j["grid_points"], "grid_points");
  if (j.contains("trials")) r.trials = index(j["trials"], "trials");
  return r;
}

Json to_json(const tpatterns::LacunaryReport& r) {
  Json counts = Json::array();
  for (const auto& [k, a] : r.dyadic_counts) counts.push_back(Json::array({k, a}));
  return Json{{"dyadic_counts", std::move(counts)}, {"max_count", r.max_count}, {"pieces", r.pieces}};
}

Json to_json(const graphs::SchemeReport& r) {
  return Json{{"v", r.v},
              {"n", r.n},
              {"vertices", r.vertices},
              {"commutative", r.commutative},
              {"structure_constants", r.structure_constants},
              {"eigenspaces", r.eigenspaces},
              {"multiplicities", r.multiplicities},
              {"violations", r.violations},
              {"ok", r.ok()}};
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::vector<std::int64_t> out;
  for (const std::string& item : split(text, ',')) {
    if (item.empty()) fail("empty item in list '" + text + "'");
    const auto dots = item.find("..");
    if (dots == std::string::npos) {
      out.push_back(parse_int(item));
      continue;
    }
    const std::int64_t lo = parse_int(item.substr(0, dots));
    const std::int64_t hi = parse_int(item.substr(dots + 2));
    if (hi < lo) fail("empty range '" + item + "'");
    if (hi - lo > 10'000'000) fail("range '" + item + "' is too long");
    for (std::int64_t x = lo; x <= hi; ++x) out.push_back(x);
  }
  return out;
}

std::map<std::int64_t, cplx> parse_coeff_list(const std::string& text) {
  std::map<std::int64_t, cplx> out;
  for (const std::string& item : split(text, ',')) {
    if (item.empty()) fail("empty item in list '" + text + "'");
    const std::vector<std::string> parts = split(item, ':');
    if (parts.size() < 2 || parts.size() > 3) fail("coefficient '" + item + "' must look like k:re or k:re:im");
    const std::int64_t k = parse_int(parts[0]);
    const cplx z{parse_double(parts[1]), parts.size() == 3 ? parse_double(parts[2]) : 0.0};
    out[k] += z;
  }
  return out;
}

}  // namespace schurnorm::json_io
