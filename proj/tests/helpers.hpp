#pragma once

#include <cmath>
#include <random>

#include "schurnorm/core.hpp"

namespace testing {

using schurnorm::cplx;
using schurnorm::DenseMatrix;

inline DenseMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, bool complex = true) {
  std::normal_distribution<double> g;
  DenseMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = cplx(g(rng), complex ? g(rng) : 0.0);
  return m;
}

inline DenseMatrix random_hermitian(std::mt19937_64& rng, std::size_t n, bool complex = true) {
  const DenseMatrix a = random_matrix(rng, n, n, complex);
  return (a + a.adjoint()) * cplx(0.5);
}

// Gram-Schmidt on a Gaussian matrix.
inline DenseMatrix random_unitary(std::mt19937_64& rng, std::size_t n) {
  DenseMatrix q = random_matrix(rng, n, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < j; ++k) {
      cplx dot = 0.0;
      for (std::size_t i = 0; i < n; ++i) dot += std::conj(q(i, k)) * q(i, j);
      for (std::size_t i = 0; i < n; ++i) q(i, j) -= dot * q(i, k);
    }
    double norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) norm += std::norm(q(i, j));
    norm = std::sqrt(norm);
    for (std::size_t i = 0; i < n; ++i) q(i, j) /= norm;
  }
  return q;
}

inline double max_diff(const DenseMatrix& a, const DenseMatrix& b) {
  double d = 0.0;
  for (std::size_t k = 0; k < a.data().size(); ++k) d = std::max(d, std::abs(a.data()[k] - b.data()[k]));
  return d;
}

inline DenseMatrix real_matrix(std::size_t r, std::size_t c, std::initializer_list<double> values) {
  DenseMatrix m(r, c);
  std::size_t k = 0;
  for (double v : values) m.data()[k++] = v;
  return m;
}

}  // namespace testing
