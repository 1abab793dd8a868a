#include "schurnorm/cli.hpp"

#include <cmath>
#include <functional>
#include <optional>

#include "CLI11.hpp"

#include "schurnorm/json_io.hpp"

namespace schurnorm::cli {

namespace {

using json_io::Json;
using json_io::round12;
using json_io::to_json;

constexpr const char* kSchemas = R"(File formats (all indices 0-based):
  matrix   {"rows": R, "cols": C, "data": [[re, im], ...]}   row-major, R*C entries;
           a bare number is accepted for a real entry.  NaN/Inf rejected.
  pattern  {"rows": R, "cols": C, "entries": [[i, j], ...]}
  action   {"points": n, "generators": [[p_0, ..., p_{n-1}], ...]}   permutations of 0..n-1
  coeffs   [[re, im], ...]  one per orbit, in discovery order (orbit of (0,0) first),
           or {"coeffs": [...]}
Outputs:
  norm report    {"value", "tol", "upper": {"x", "y", "bound"}, "lower": {"B": matrix, "bound"}}
  decomposition  {"kind": "decomposition", "row_bound", "col_bound", "row_part", "col_part"}
  cut            {"kind": "cut", "R": [...], "C": [...], "mass", "slack"}
  rational       {"num": "...", "den": "..."}  decimal strings
  flat signs     {"signs": [+-1, ...], "sup_norm", "seed", "grid_points", "trials"}
Sets are comma separated integers with optional ranges, e.g. "1,2,4" or "0..7".
Toeplitz l2 coefficients are k:re[:im] items, e.g. "0:1,2:0.5:-1".
Exit codes: 0 success, 2 invalid input, 3 solver did not converge.)";

void emit(std::ostream& out, const Json& doc) { out << doc.dump(2) << '\n'; }

DenseMatrix load_matrix(const std::string& path) { return json_io::matrix_from_json(json_io::read_file(path)); }
Pattern load_pattern(const std::string& path) { return json_io::pattern_from_json(json_io::read_file(path)); }

Json eigen_summary(const std::vector<double>& evals, double tol) {
  // distinct eigenvalues with multiplicities, descending
  Json out = Json::array();
  std::size_t k = 0;
  while (k < evals.size()) {
    std::size_t run = 1;
    while (k + run < evals.size() && std::abs(evals[k] - evals[k + run]) <= tol) ++run;
    double mean = 0.0;
    for (std::size_t t = 0; t < run; ++t) mean += evals[k + t];
    out.push_back(Json{{"value", round12(mean / static_cast<double>(run))}, {"multiplicity", run}});
    k += run;
  }
  return out;
}

Json big_to_json(const graphs::BigInt& b) {
  if (b <= graphs::BigInt(std::numeric_limits<std::int64_t>::max())) return b.convert_to<std::int64_t>();
  return b.str();
}

tpatterns::DiagonalSet parse_set(const std::string& text) {
  return tpatterns::DiagonalSet(json_io::parse_int_list(text));
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Schur multiplier norms, pattern decompositions and related exact values"};
  app.footer(kSchemas);
  app.require_subcommand(1);
  std::function<void()> action;

  // norm
  std::string matrix_path, pattern_path;
  double tol = 1e-6;
  auto* norm = app.add_subcommand("norm", "Schur multiplier norm with upper and lower certificates");
  norm->add_option("--matrix", matrix_path, "matrix JSON file")->required();
  norm->add_option("--tol", tol, "certificate tolerance (>= 1e-8)")->capture_default_str();
  norm->callback([&] {
    action = [&] {
      if (!(tol >= 1e-8)) throw Error(ErrorKind::InvalidInput, "--tol must be at least 1e-8");
      emit(out, to_json(gamma2::schur_norm(load_matrix(matrix_path), tol)));
    };
  });

  // decompose
  std::optional<double> row_bound, col_bound;
  bool optimal = false;
  auto* dec = app.add_subcommand("decompose", "Split into row-bounded and column-bounded parts, or report a cut");
  auto* dec_pattern = dec->add_option("--pattern", pattern_path, "pattern JSON file");
  auto* dec_matrix = dec->add_option("--matrix", matrix_path, "nonnegative matrix JSON file");
  dec_pattern->excludes(dec_matrix);
  auto* rb = dec->add_option("--row-bound", row_bound, "M: row count bound (pattern) or squared row norm bound");
  auto* cb = dec->add_option("--col-bound", col_bound, "N: column count bound (pattern) or squared column norm bound");
  auto* opt = dec->add_flag("--optimal", optimal, "search the smallest symmetric bound");
  opt->excludes(rb)->excludes(cb);
  dec->callback([&] {
    action = [&] {
      if (pattern_path.empty() == matrix_path.empty())
        throw Error(ErrorKind::InvalidInput, "give exactly one of --pattern or --matrix");
      if (!optimal && (!row_bound || !col_bound))
        throw Error(ErrorKind::InvalidInput, "give --row-bound and --col-bound, or --optimal");
      if (!pattern_path.empty()) {
        const Pattern p = load_pattern(pattern_path);
        if (optimal) {
          const flow::OptimalBound best = flow::optimal_bound(p);
          emit(out, Json{{"m", best.m}, {"decomposition", to_json(best.decomposition)}});
          return;
        }
        auto as_count = [](double x, const char* name) {
          if (!(x >= 0.0) || x != std::floor(x) || x > 1e15)
            throw Error(ErrorKind::InvalidInput, std::string(name) + " must be a nonnegative integer for patterns");
          return static_cast<std::size_t>(x);
        };
        const auto result = flow::decompose(p, as_count(*row_bound, "--row-bound"), as_count(*col_bound, "--col-bound"));
        std::visit([&](const auto& r) { emit(out, to_json(r)); }, result);
        return;
      }
      const NonnegMatrix a(load_matrix(matrix_path));
      if (optimal) {
        const flow::MatrixBound best = flow::matrix_bound_interval(a);
        const double level = best.m_value * best.m_value;
        Json doc{{"m", round12(best.m_value)}, {"interval", to_json(best.interval)}};
        const auto result = flow::decompose(a, level, level);
        if (const auto* d = std::get_if<flow::MatrixDecomposition>(&result)) doc["decomposition"] = to_json(*d);
        emit(out, doc);
        return;
      }
      const auto result = flow::decompose(a, *row_bound, *col_bound);
      std::visit([&](const auto& r) { emit(out, to_json(r)); }, result);
    };
  });

  // bound-interval
  auto* bi = app.add_subcommand("bound-interval", "Bracket the Schur bound of a pattern or nonnegative matrix");
  auto* bi_pattern = bi->add_option("--pattern", pattern_path, "pattern JSON file");
  bi->add_option("--matrix", matrix_path, "nonnegative matrix JSON file")->excludes(bi_pattern);
  bi->callback([&] {
    action = [&] {
      if (pattern_path.empty() == matrix_path.empty())
        throw Error(ErrorKind::InvalidInput, "give exactly one of --pattern or --matrix");
      if (!pattern_path.empty()) {
        const std::size_t m = flow::optimal_bound(load_pattern(pattern_path)).m;
        emit(out, Json{{"m", m}, {"interval", to_json(flow::schur_bound_interval(m))}});
      } else {
        const flow::MatrixBound b = flow::matrix_bound_interval(NonnegMatrix(load_matrix(matrix_path)));
        emit(out, Json{{"m", round12(b.m_value)}, {"interval", to_json(b.interval)}});
      }
    };
  });

  // symmetric
  std::string action_path, coeffs_path;
  auto* sym = app.add_subcommand("symmetric", "Exact norm of a commutant element, (1/n) Tr|T|");
  sym->add_option("--action", action_path, "group action JSON file")->required();
  sym->add_option("--coeffs", coeffs_path, "orbit coefficients JSON file")->required();
  sym->callback([&] {
    action = [&] {
      const symmetry::GroupAction g = json_io::action_from_json(json_io::read_file(action_path));
      Json cj = json_io::read_file(coeffs_path);
      if (cj.is_object() && cj.contains("coeffs")) cj = Json(cj["coeffs"]);
      const std::vector<cplx> coeffs = json_io::coeffs_from_json(cj);
      const symmetry::OrbitStructure orbits = symmetry::orbit_structure(g);
      const DenseMatrix t = symmetry::commutant_element(orbits, coeffs);
      emit(out, Json{{"norm", round12(symmetry::mathias_norm(t))},
                     {"orbits", orbits.n_orbits},
                     {"row_sums", orbits.row_sums},
                     {"matrix", to_json(t)}});
    };
  });

  // kneser
  std::size_t kn = 1;
  bool exact = false;
  auto* kne = app.add_subcommand("kneser", "Schur norm and spectrum of the Kneser graph K(2n+1, n)");
  kne->add_option("--n", kn, "n >= 1")->required();
  kne->add_flag("--exact", exact, "print the norm as an exact rational");
  kne->callback([&] {
    action = [&] {
      const graphs::Rational q = graphs::kneser_schur_norm(kn);
      Json eig = Json::array();
      const auto values = graphs::kneser_eigenvalues(kn);
      const auto dims = graphs::scheme_eigen_dims(2 * kn + 1, kn);
      for (std::size_t i = 0; i < values.size(); ++i)
        eig.push_back(Json{{"value", values[i]}, {"multiplicity", big_to_json(dims[i])}});
      Json doc;
      doc["n"] = kn;
      doc["norm"] = exact ? to_json(q) : Json(round12(graphs::to_double(q)));
      doc["norm_value"] = round12(graphs::to_double(q));
      doc["vertices"] = big_to_json(graphs::binomial(2 * kn + 1, kn));
      doc["eigenvalues"] = std::move(eig);
      doc["log_bound"] = round12(0.5 * std::log(2.0 * static_cast<double>(kn) + 3.0));
      emit(out, doc);
    };
  });

  // johnson
  graphs::JohnsonSpec js;
  auto* joh = app.add_subcommand("johnson", "Adjacency matrix and spectrum of J(v, n, i)");
  joh->add_option("--v", js.v, "ground set size")->required();
  joh->add_option("--n", js.n, "subset size, 1 <= n <= v/2")->required();
  joh->add_option("--i", js.i, "intersection size, 0 <= i <= n")->required();
  joh->callback([&] {
    action = [&] {
      const DenseMatrix adj = graphs::johnson_adjacency(js);
      const std::vector<double> evals = hermitian_eig(adj).eigenvalues;
      emit(out, Json{{"v", js.v},
                     {"n", js.n},
                     {"i", js.i},
                     {"degree", big_to_json(graphs::johnson_degree(js))},
                     {"spectrum", eigen_summary(evals, 1e-6)},
                     {"adjacency", to_json(adj)}});
    };
  });

  // hankel
  std::string set_text;
  std::size_t grid = 0, budget = tpatterns::kDefaultDyadicBudget;
  auto* han = app.add_subcommand("hankel", "Classify the Hankel pattern {i + j in S} on a grid");
  han->add_option("--set", set_text, "diagonal set S of positive integers")->required();
  han->add_option("--grid", grid, "grid size, at least 2 max(S)")->required();
  han->add_option("--budget", budget, "largest dyadic count still classified bounded")->capture_default_str();
  han->callback([&] {
    action = [&] {
      const tpatterns::HankelReport r = tpatterns::hankel_classify(parse_set(set_text), grid, budget);
      emit(out, Json{{"grid", r.grid},
                     {"bounded", r.bounded},
                     {"lacunary", to_json(r.lacunary)},
                     {"m", r.m},
                     {"interval", to_json(r.interval)},
                     {"witness",
                      Json{{"k", r.witness.k},
                           {"corner", r.witness.corner},
                           {"corner_entries", r.witness.corner_entries},
                           {"a_k", r.witness.a_k},
                           {"m_lower", r.witness.m_lower}}},
                     {"decomposition", to_json(r.decomposition)}});
    };
  });

  // toeplitz
  std::string l2_text;
  auto* toe = app.add_subcommand("toeplitz", "Schur bound interval of the Toeplitz pattern {i - j in S}");
  toe->add_option("--set", set_text, "diagonal set S");
  toe->add_option("--l2", l2_text, "coefficients k:re[:im] for the l2 interval");
  toe->callback([&] {
    action = [&] {
      if (set_text.empty() && l2_text.empty()) throw Error(ErrorKind::InvalidInput, "give --set and/or --l2");
      Json doc;
      if (!set_text.empty()) {
        const tpatterns::DiagonalSet s = parse_set(set_text);
        doc["size"] = s.size();
        doc["interval"] = to_json(tpatterns::toeplitz_bound_interval(s));
      }
      if (!l2_text.empty()) doc["l2_interval"] = to_json(tpatterns::toeplitz_l2_interval(json_io::parse_coeff_list(l2_text)));
      emit(out, doc);
    };
  });

  // flat-signs
  std::size_t trials = 1000, grid_points = 0;
  std::uint64_t seed = 1;
  auto* fs = app.add_subcommand("flat-signs", "Random search for signs with a small sup norm");
  fs->add_option("--set", set_text, "frequency set S")->required();
  fs->add_option("--trials", trials, "number of random sign draws")->capture_default_str();
  fs->add_option("--seed", seed, "random seed")->capture_default_str();
  fs->add_option("--grid", grid_points, "sampling grid (default 16 |S|)");
  fs->callback([&] {
    action = [&] {
      const tpatterns::DiagonalSet s = parse_set(set_text);
      const tpatterns::FlatSignResult r = tpatterns::flat_sign_search(s, trials, grid_points, seed);
      Json doc = to_json(r);
      const double threshold = std::sqrt(2.0 * static_cast<double>(s.size()));
      doc["threshold"] = round12(threshold);
      doc["meets_threshold"] = r.sup_norm <= threshold + 1e-12;
      emit(out, doc);
    };
  });

  // verify-scheme
  std::size_t sv = 0, sn = 0;
  auto* vs = app.add_subcommand("verify-scheme", "Exact checks of the Johnson scheme J(v, n)");
  vs->add_option("--v", sv, "ground set size")->required();
  vs->add_option("--n", sn, "subset size, 1 <= n <= v/2")->required();
  vs->callback([&] { action = [&] { emit(out, to_json(graphs::verify_scheme(sv, sn))); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalidInput;
  }

  try {
    if (action) action();
    return kExitOk;
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return e.kind() == ErrorKind::NoConvergence ? kExitNoConvergence : kExitInvalidInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"schurnorm"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace schurnorm::cli
