#include "schurnorm/core.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "schurnorm/detail/jacobi.hpp"

namespace schurnorm {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NotTransitive: return "NotTransitive";
    case ErrorKind::DiagonalNotScalar: return "DiagonalNotScalar";
    case ErrorKind::NotFeasible: return "NotFeasible";
    case ErrorKind::ZeroTest: return "ZeroTest";
    case ErrorKind::EmptyMatrix: return "EmptyMatrix";
    case ErrorKind::EmptySet: return "EmptySet";
  }
  return "Unknown";
}

// ---------------------------------------------------------------- Pattern

Pattern::Pattern(std::size_t n_rows, std::size_t n_cols, std::vector<Entry> entries)
    : n_rows_(n_rows), n_cols_(n_cols), entries_(std::move(entries)) {
  for (const Entry& e : entries_) {
    if (e.row >= n_rows_ || e.col >= n_cols_)
      throw Error(ErrorKind::InvalidInput,
                  "pattern entry (" + std::to_string(e.row) + "," + std::to_string(e.col) +
                      ") outside " + std::to_string(n_rows_) + "x" + std::to_string(n_cols_) +
                      " grid");
  }
  std::sort(entries_.begin(), entries_.end());
  if (std::adjacent_find(entries_.begin(), entries_.end()) != entries_.end())
    throw Error(ErrorKind::InvalidInput, "pattern contains duplicate entries");
}

bool Pattern::contains(std::size_t i, std::size_t j) const {
  return std::binary_search(entries_.begin(), entries_.end(), Entry{i, j});
}

std::vector<std::size_t> Pattern::row_counts() const {
  std::vector<std::size_t> counts(n_rows_, 0);
  for (const Entry& e : entries_) ++counts[e.row];
  return counts;
}

std::vector<std::size_t> Pattern::col_counts() const {
  std::vector<std::size_t> counts(n_cols_, 0);
  for (const Entry& e : entries_) ++counts[e.col];
  return counts;
}

// ---------------------------------------------------------------- DenseMatrix

DenseMatrix::DenseMatrix(std::size_t n_rows, std::size_t n_cols)
    : rows_(n_rows), cols_(n_cols), data_(n_rows * n_cols) {}

DenseMatrix::DenseMatrix(std::size_t n_rows, std::size_t n_cols, std::vector<cplx> data)
    : rows_(n_rows), cols_(n_cols), data_(std::move(data)) {
  if (data_.size() != rows_ * cols_)
    throw Error(ErrorKind::ShapeMismatch, "matrix data length does not match shape");
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

DenseMatrix DenseMatrix::ones(std::size_t n_rows, std::size_t n_cols) {
  return DenseMatrix(n_rows, n_cols, std::vector<cplx>(n_rows * n_cols, cplx{1.0}));
}

DenseMatrix DenseMatrix::from_real(std::size_t n_rows, std::size_t n_cols,
                                   std::span<const double> values) {
  if (values.size() != n_rows * n_cols)
    throw Error(ErrorKind::ShapeMismatch, "matrix data length does not match shape");
  return DenseMatrix(n_rows, n_cols, std::vector<cplx>(values.begin(), values.end()));
}

DenseMatrix DenseMatrix::diagonal(std::span<const cplx> values) {
  DenseMatrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

DenseMatrix DenseMatrix::adjoint() const {
  DenseMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

DenseMatrix DenseMatrix::conj() const {
  DenseMatrix out(*this);
  for (cplx& z : out.data_) z = std::conj(z);
  return out;
}

DenseMatrix DenseMatrix::transpose() const {
  DenseMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

bool DenseMatrix::is_real() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](cplx z) { return z.imag() == 0.0; });
}

bool DenseMatrix::all_finite() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](cplx z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
  });
}

DenseMatrix& DenseMatrix::operator+=(const DenseMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw Error(ErrorKind::ShapeMismatch, "matrix sum of different shapes");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

DenseMatrix& DenseMatrix::operator-=(const DenseMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw Error(ErrorKind::ShapeMismatch, "matrix difference of different shapes");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
  return *this;
}

DenseMatrix& DenseMatrix::operator*=(cplx scale) {
  for (cplx& z : data_) z *= scale;
  return *this;
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorKind::ShapeMismatch, "matrix product shape mismatch");
  DenseMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx{}) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

// ---------------------------------------------------------------- NonnegMatrix

NonnegMatrix::NonnegMatrix(DenseMatrix m) : m_(std::move(m)) {
  for (cplx z : m_.data()) {
    if (z.imag() != 0.0 || !(z.real() >= 0.0) || !std::isfinite(z.real()))
      throw Error(ErrorKind::InvalidInput, "nonnegative matrix needs finite real entries >= 0");
  }
}

NonnegMatrix::NonnegMatrix(std::size_t n_rows, std::size_t n_cols, std::span<const double> values)
    : NonnegMatrix(DenseMatrix::from_real(n_rows, n_cols, values)) {}

// ---------------------------------------------------------------- linear algebra

double frobenius_norm(const DenseMatrix& m) {
  double s = 0.0;
  for (cplx z : m.data()) s += std::norm(z);
  return std::sqrt(s);
}

double max_abs_entry(const DenseMatrix& m) {
  double s = 0.0;
  for (cplx z : m.data()) s = std::max(s, std::abs(z));
  return s;
}

cplx trace(const DenseMatrix& m) {
  cplx s{};
  for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) s += m(i, i);
  return s;
}

EigenDecomposition hermitian_eig(const DenseMatrix& t) {
  if (!t.square()) throw Error(ErrorKind::NotHermitian, "hermitian_eig needs a square matrix");
  const std::size_t n = t.rows();
  const double scale = frobenius_norm(t);
  if (frobenius_norm(t - t.adjoint()) > tolerances::hermitian_rel * scale)
    throw Error(ErrorKind::NotHermitian, "matrix is not Hermitian");

  EigenDecomposition out;
  bool ok = false;
  if (t.is_real()) {
    std::vector<double> a(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a[i * n + j] = 0.5 * (t(i, j).real() + t(j, i).real());
    std::vector<double> v;
    ok = detail::jacobi_eigen(a, n, out.eigenvalues, v, tolerances::jacobi_max_sweeps);
    out.eigenvectors = DenseMatrix(n, n, std::vector<cplx>(v.begin(), v.end()));
  } else {
    std::vector<cplx> a(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a[i * n + j] = 0.5 * (t(i, j) + std::conj(t(j, i)));
    std::vector<cplx> v;
    ok = detail::jacobi_eigen(a, n, out.eigenvalues, v, tolerances::jacobi_max_sweeps);
    out.eigenvectors = DenseMatrix(n, n, std::move(v));
  }
  if (!ok) throw Error(ErrorKind::NoConvergence, "Jacobi sweep budget exhausted");
  return out;
}

PolarDecomposition polar_absolute(const DenseMatrix& t) {
  if (!t.square()) throw Error(ErrorKind::ShapeMismatch, "polar_absolute needs a square matrix");
  const std::size_t n = t.rows();
  PolarDecomposition out{DenseMatrix(n, n), DenseMatrix(n, n)};
  if (n == 0) return out;

  // Dilation [[0, T], [T^*, 0]] has eigenpairs (+-sigma, (u; +-v) / sqrt 2).
  // Its eigenvalues are accurate to eps ||T|| in absolute terms, so zero
  // singular values stay near zero instead of becoming sqrt(eps) ||T||.
  DenseMatrix dil(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      dil(i, n + j) = t(i, j);
      dil(n + j, i) = std::conj(t(i, j));
    }
  const EigenDecomposition eig = hermitian_eig(dil);
  const double cutoff = 1e-12 * std::max(eig.eigenvalues.front(), 0.0);

  for (std::size_t k = 0; k < n; ++k) {
    const double sigma = eig.eigenvalues[k];
    if (sigma <= cutoff) break;
    std::vector<cplx> u(n), v(n);
    double nu = 0.0, nv = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      u[i] = eig.eigenvectors(i, k);
      v[i] = eig.eigenvectors(n + i, k);
      nu += std::norm(u[i]);
      nv += std::norm(v[i]);
    }
    nu = std::sqrt(nu);
    nv = std::sqrt(nv);
    for (std::size_t i = 0; i < n; ++i) {
      u[i] /= nu;
      v[i] /= nv;
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const cplx vv = v[i] * std::conj(v[j]);
        out.abs(i, j) += sigma * vv;
        out.isometry(i, j) += u[i] * std::conj(v[j]);
      }
  }
  return out;
}

double operator_norm(const DenseMatrix& t) {
  if (t.rows() == 0 || t.cols() == 0) return 0.0;
  const DenseMatrix gram = t.rows() >= t.cols() ? t.adjoint() * t : t * t.adjoint();
  const double scale = frobenius_norm(gram);
  if (scale == 0.0) return 0.0;
  DenseMatrix sym = gram;
  // exact Hermitian symmetry before eigensolving
  for (std::size_t i = 0; i < sym.rows(); ++i)
    for (std::size_t j = i; j < sym.cols(); ++j) {
      const cplx avg = 0.5 * (gram(i, j) + std::conj(gram(j, i)));
      sym(i, j) = avg;
      sym(j, i) = std::conj(avg);
    }
  return std::sqrt(std::max(0.0, hermitian_eig(sym).eigenvalues.front()));
}

DenseMatrix diag_expectation(const DenseMatrix& t) {
  if (!t.square()) throw Error(ErrorKind::ShapeMismatch, "diag_expectation needs a square matrix");
  DenseMatrix out(t.rows(), t.cols());
  for (std::size_t i = 0; i < t.rows(); ++i) out(i, i) = t(i, i);
  return out;
}

DenseMatrix schur_product(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(ErrorKind::ShapeMismatch, "schur_product needs equal shapes");
  DenseMatrix out(a.rows(), a.cols());
  for (std::size_t k = 0; k < out.data().size(); ++k) out.data()[k] = a.data()[k] * b.data()[k];
  return out;
}

}  // namespace schurnorm
