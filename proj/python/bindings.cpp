#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "schurnorm/flow.hpp"
#include "schurnorm/gamma2.hpp"
#include "schurnorm/graphs.hpp"
#include "schurnorm/symmetry.hpp"
#include "schurnorm/tpatterns.hpp"

namespace py = pybind11;
using namespace schurnorm;

namespace {

using CArray = py::array_t<cplx, py::array::c_style | py::array::forcecast>;
using DArray = py::array_t<double, py::array::c_style | py::array::forcecast>;

DenseMatrix to_matrix(const CArray& a) {
  if (a.ndim() != 2) throw Error(ErrorKind::ShapeMismatch, "expected a 2-d array");
  const auto r = static_cast<std::size_t>(a.shape(0));
  const auto c = static_cast<std::size_t>(a.shape(1));
  return DenseMatrix(r, c, std::vector<cplx>(a.data(), a.data() + r * c));
}

CArray to_array(const DenseMatrix& m) {
  CArray out({m.rows(), m.cols()});
  std::copy(m.data().begin(), m.data().end(), out.mutable_data());
  return out;
}

NonnegMatrix to_nonneg(const DArray& a) {
  if (a.ndim() != 2) throw Error(ErrorKind::ShapeMismatch, "expected a 2-d array");
  const auto r = static_cast<std::size_t>(a.shape(0));
  const auto c = static_cast<std::size_t>(a.shape(1));
  return NonnegMatrix(r, c, std::span<const double>(a.data(), r * c));
}

CArray vectors(const std::vector<std::vector<cplx>>& v) {
  const std::size_t n = v.size();
  const std::size_t d = n ? v.front().size() : 0;
  CArray out({n, d});
  for (std::size_t i = 0; i < n; ++i) std::copy(v[i].begin(), v[i].end(), out.mutable_data() + i * d);
  return out;
}

Pattern to_pattern(std::size_t rows, std::size_t cols, const std::vector<std::pair<std::size_t, std::size_t>>& e) {
  std::vector<Entry> entries;
  for (auto [i, j] : e) entries.push_back({i, j});
  return Pattern(rows, cols, entries);
}

std::vector<std::pair<std::size_t, std::size_t>> entries_of(const Pattern& p) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const Entry& e : p.entries()) out.emplace_back(e.row, e.col);
  return out;
}

py::object fraction(const graphs::Rational& q) {
  static py::handle cls = py::object(py::module_::import("fractions").attr("Fraction")).release();
  const py::object num = py::int_(py::str(boost::multiprecision::numerator(q).str()));
  const py::object den = py::int_(py::str(boost::multiprecision::denominator(q).str()));
  return cls(num, den);
}

py::dict cut_dict(const flow::CutCertificate& c) {
  py::dict d;
  d["kind"] = "cut";
  d["rows"] = c.rows;
  d["cols"] = c.cols;
  d["mass"] = c.mass;
  d["slack"] = c.slack;
  return d;
}

py::dict decomposition_dict(const flow::PatternDecomposition& d) {
  py::dict out;
  out["kind"] = "decomposition";
  out["row_part"] = entries_of(d.row_part);
  out["col_part"] = entries_of(d.col_part);
  out["row_count_bound"] = d.row_count_bound;
  out["col_count_bound"] = d.col_count_bound;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Schur multiplier norms, bounded patterns and their certificates";

  // ValueError subclass carrying the error kind as .kind; kept alive for the process
  static PyObject* error_type = PyErr_NewException("schurnorm._core.SchurnormError", PyExc_ValueError, nullptr);
  m.add_object("SchurnormError", py::handle(error_type));
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::handle(error_type)(py::str(e.what()));
      exc.attr("kind") = to_string(e.kind());
      PyErr_SetObject(error_type, exc.ptr());
    }
  });

  m.def(
      "schur_norm",
      [](const CArray& s, double tol) {
        const DenseMatrix mat = to_matrix(s);
        gamma2::NormReport r;
        {
          py::gil_scoped_release release;
          r = gamma2::schur_norm(mat, tol);
        }
        py::dict out;
        out["value"] = r.value;
        out["tol"] = r.tol;
        out["x"] = vectors(r.upper.x);
        out["y"] = vectors(r.upper.y);
        out["upper"] = r.upper.bound;
        out["B"] = to_array(r.lower.test);
        out["lower"] = r.lower.bound;
        return out;
      },
      py::arg("s"), py::arg("tol") = 1e-6,
      "Schur multiplier norm with Haagerup vectors (x, y) and a test matrix B.");

  m.def("upper_bound_polar", [](const CArray& t) { return gamma2::upper_bound_polar(to_matrix(t)); });
  m.def("lower_bound_witness",
        [](const CArray& s, const CArray& b) { return gamma2::lower_bound_witness(to_matrix(s), to_matrix(b)).bound; });
  m.def("bignorm_bounds", [](const DArray& a) {
    const gamma2::BigNormBounds b = gamma2::bignorm_bounds(to_nonneg(a));
    return py::dict(py::arg("alpha") = b.alpha, py::arg("alpha_lower") = b.alpha_lower,
                    py::arg("z_witness") = b.z_witness);
  });

  m.def(
      "decompose",
      [](std::size_t rows, std::size_t cols, const std::vector<std::pair<std::size_t, std::size_t>>& entries,
         std::size_t row_bound, std::size_t col_bound) -> py::dict {
        const auto res = flow::decompose(to_pattern(rows, cols, entries), row_bound, col_bound);
        if (const auto* d = std::get_if<flow::PatternDecomposition>(&res)) return decomposition_dict(*d);
        return cut_dict(std::get<flow::CutCertificate>(res));
      },
      py::arg("rows"), py::arg("cols"), py::arg("entries"), py::arg("row_bound"), py::arg("col_bound"));
  m.def(
      "optimal_bound",
      [](std::size_t rows, std::size_t cols, const std::vector<std::pair<std::size_t, std::size_t>>& entries) {
        const Pattern p = to_pattern(rows, cols, entries);
        const flow::OptimalBound b = flow::optimal_bound(p);
        const flow::Interval i = flow::schur_bound_interval(b.m);
        py::dict out = decomposition_dict(b.decomposition);
        out["m"] = b.m;
        out["interval"] = py::make_tuple(i.lower, i.upper);
        return out;
      },
      py::arg("rows"), py::arg("cols"), py::arg("entries"));
  m.def("matrix_bound_interval", [](const DArray& a) {
    const flow::MatrixBound b = flow::matrix_bound_interval(to_nonneg(a));
    return py::make_tuple(b.m_value, py::make_tuple(b.interval.lower, b.interval.upper));
  });

  m.def("mathias_norm", [](const CArray& t) { return symmetry::mathias_norm(to_matrix(t)); });
  m.def(
      "commutant_norm",
      [](std::size_t n, const std::vector<symmetry::Permutation>& gens, const std::vector<cplx>& coeffs) {
        return symmetry::commutant_norm(symmetry::GroupAction(n, gens), coeffs);
      },
      py::arg("n_points"), py::arg("generators"), py::arg("coeffs"));
  m.def("orbit_count", [](std::size_t n, const std::vector<symmetry::Permutation>& gens) {
    return symmetry::orbit_structure(symmetry::GroupAction(n, gens)).n_orbits;
  });
  m.def("cyclic_example_norm", &symmetry::cyclic_example_norm);
  m.def("sign_matrix_norm", &symmetry::sign_matrix_norm);

  m.def("kneser_schur_norm", [](std::size_t n) { return fraction(graphs::kneser_schur_norm(n)); });
  m.def("kneser_eigenvalues", &graphs::kneser_eigenvalues);
  m.def("johnson_adjacency", [](std::size_t v, std::size_t n, std::size_t i) {
    return to_array(graphs::johnson_adjacency({v, n, i}));
  });
  m.def("verify_scheme", [](std::size_t v, std::size_t n) {
    const graphs::SchemeReport r = graphs::verify_scheme(v, n);
    return py::dict(py::arg("ok") = r.ok(), py::arg("eigenspaces") = r.eigenspaces,
                    py::arg("multiplicities") = r.multiplicities, py::arg("violations") = r.violations);
  });

  m.def("lacunary_decompose", [](const std::vector<std::int64_t>& s) {
    const tpatterns::LacunaryReport r = tpatterns::lacunary_decompose(tpatterns::DiagonalSet(s));
    return py::dict(py::arg("dyadic_counts") = r.dyadic_counts, py::arg("max_count") = r.max_count,
                    py::arg("pieces") = r.pieces);
  });
  m.def(
      "hankel_classify",
      [](const std::vector<std::int64_t>& s, std::size_t grid, std::size_t budget) {
        const tpatterns::HankelReport r = tpatterns::hankel_classify(tpatterns::DiagonalSet(s), grid, budget);
        return py::dict(py::arg("bounded") = r.bounded, py::arg("m") = r.m,
                        py::arg("max_count") = r.lacunary.max_count,
                        py::arg("interval") = py::make_tuple(r.interval.lower, r.interval.upper),
                        py::arg("m_lower") = r.witness.m_lower);
      },
      py::arg("s"), py::arg("grid"), py::arg("budget") = tpatterns::kDefaultDyadicBudget);
  m.def(
      "flat_sign_search",
      [](const std::vector<std::int64_t>& s, std::size_t trials, std::size_t grid, std::uint64_t seed) {
        const tpatterns::FlatSignResult r = tpatterns::flat_sign_search(tpatterns::DiagonalSet(s), trials, grid, seed);
        return py::dict(py::arg("signs") = r.signs, py::arg("sup_norm") = r.sup_norm,
                        py::arg("grid_points") = r.grid_points);
      },
      py::arg("s"), py::arg("trials"), py::arg("grid") = 0, py::arg("seed") = 0);
}
