#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace schurnorm {

using cplx = std::complex<double>;

enum class ErrorKind {
  InvalidInput,
  ShapeMismatch,
  NotHermitian,
  NoConvergence,
  TooLarge,
  NotTransitive,
  DiagonalNotScalar,
  NotFeasible,
  ZeroTest,
  EmptyMatrix,
  EmptySet,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Tolerances shared across modules; the acceptance suite pins against these.
namespace tolerances {
inline constexpr double hermitian_rel = 1e-12;
inline constexpr double eig_reconstruction = 1e-10;
inline constexpr int jacobi_max_sweeps = 100;
inline constexpr double polar_reconstruction = 1e-9;
inline constexpr double decomposition_slack = 1e-9;
inline constexpr double certificate_min_slack = 1e-9;
inline constexpr double bisection = 1e-6;
inline constexpr double haagerup_reproduction = 1e-6;
inline constexpr double min_norm_tol = 1e-8;
inline constexpr double scalar_diagonal_rel = 1e-8;
inline constexpr double lacunary_ratio_slack = 1e-12;
}  // namespace tolerances

struct Entry {
  std::size_t row = 0;
  std::size_t col = 0;
  friend auto operator<=>(const Entry&, const Entry&) = default;
};

/// A finite set of (row, col) positions inside an n_rows x n_cols grid.
/// Entries are kept sorted and duplicate-free.
class Pattern {
 public:
  Pattern(std::size_t n_rows, std::size_t n_cols, std::vector<Entry> entries = {});

  std::size_t n_rows() const noexcept { return n_rows_; }
  std::size_t n_cols() const noexcept { return n_cols_; }
  const std::vector<Entry>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  bool contains(std::size_t i, std::size_t j) const;

  std::vector<std::size_t> row_counts() const;
  std::vector<std::size_t> col_counts() const;

  friend bool operator==(const Pattern&, const Pattern&) = default;

 private:
  std::size_t n_rows_;
  std::size_t n_cols_;
  std::vector<Entry> entries_;
};

/// Dense complex matrix, row-major.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t n_rows, std::size_t n_cols);
  DenseMatrix(std::size_t n_rows, std::size_t n_cols, std::vector<cplx> data);

  static DenseMatrix identity(std::size_t n);
  static DenseMatrix ones(std::size_t n_rows, std::size_t n_cols);
  static DenseMatrix from_real(std::size_t n_rows, std::size_t n_cols,
                               std::span<const double> values);
  static DenseMatrix diagonal(std::span<const cplx> values);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const cplx> data() const noexcept { return data_; }
  std::span<cplx> data() noexcept { return data_; }

  DenseMatrix adjoint() const;
  DenseMatrix conj() const;
  DenseMatrix transpose() const;
  bool is_real() const noexcept;
  bool all_finite() const noexcept;

  DenseMatrix& operator+=(const DenseMatrix& other);
  DenseMatrix& operator-=(const DenseMatrix& other);
  DenseMatrix& operator*=(cplx scale);

  friend DenseMatrix operator+(DenseMatrix a, const DenseMatrix& b) { return a += b; }
  friend DenseMatrix operator-(DenseMatrix a, const DenseMatrix& b) { return a -= b; }
  friend DenseMatrix operator*(DenseMatrix a, cplx s) { return a *= s; }
  friend DenseMatrix operator*(cplx s, DenseMatrix a) { return a *= s; }
  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> data_;
};

/// DenseMatrix restricted to real nonnegative entries.
class NonnegMatrix {
 public:
  explicit NonnegMatrix(DenseMatrix m);
  NonnegMatrix(std::size_t n_rows, std::size_t n_cols, std::span<const double> values);

  std::size_t rows() const noexcept { return m_.rows(); }
  std::size_t cols() const noexcept { return m_.cols(); }
  double operator()(std::size_t i, std::size_t j) const { return m_(i, j).real(); }
  const DenseMatrix& matrix() const noexcept { return m_; }

 private:
  DenseMatrix m_;
};

struct EigenDecomposition {
  std::vector<double> eigenvalues;  // descending
  DenseMatrix eigenvectors;         // columns
};

struct PolarDecomposition {
  DenseMatrix abs;       // (T*T)^{1/2}
  DenseMatrix isometry;  // T = isometry * abs
};

double frobenius_norm(const DenseMatrix& m);
double max_abs_entry(const DenseMatrix& m);
cplx trace(const DenseMatrix& m);

/// Eigen-decomposition of a Hermitian matrix by cyclic complex Jacobi rotations.
/// Throws NotHermitian / NoConvergence.
EigenDecomposition hermitian_eig(const DenseMatrix& t);

/// T = W |T| with |T| = (T*T)^{1/2}.
PolarDecomposition polar_absolute(const DenseMatrix& t);

/// Largest singular value.
double operator_norm(const DenseMatrix& t);

DenseMatrix diag_expectation(const DenseMatrix& t);

DenseMatrix schur_product(const DenseMatrix& a, const DenseMatrix& b);

}  // namespace schurnorm
