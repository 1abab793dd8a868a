#pragma once

// Cyclic Jacobi eigensolver shared by the complex (DenseMatrix) front end and
// the real symmetric kernels of the semidefinite solver.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numeric>
#include <vector>

namespace schurnorm::detail {

inline double conj_of(double x) { return x; }
inline std::complex<double> conj_of(std::complex<double> x) { return std::conj(x); }

inline double abs2(double x) { return x * x; }
inline double abs2(std::complex<double> x) { return std::norm(x); }

inline double real_of(double x) { return x; }
inline double real_of(std::complex<double> x) { return x.real(); }

/// Diagonalizes the n x n Hermitian matrix `a` (row-major, overwritten).
/// On success `evals` holds the eigenvalues in descending order and `evecs`
/// (row-major, eigenvectors in columns) the matching orthonormal basis.
/// Returns false if the sweep budget is exhausted.
template <typename T>
bool jacobi_eigen(std::vector<T>& a, std::size_t n, std::vector<double>& evals,
                  std::vector<T>& evecs, int max_sweeps) {
  evecs.assign(n * n, T{});
  for (std::size_t i = 0; i < n; ++i) evecs[i * n + i] = T{1};
  auto at = [&](std::size_t i, std::size_t j) -> T& { return a[i * n + j]; };

  double frob2 = 0.0;
  for (const T& x : a) frob2 += abs2(x);
  const double target = 1e-30 * frob2;

  bool converged = (n <= 1) || frob2 == 0.0;
  for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += abs2(at(p, q));
    if (off <= target) {
      converged = true;
      break;
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double g = std::sqrt(abs2(at(p, q)));
        if (g == 0.0) continue;
        const double app = real_of(at(p, p));
        const double aqq = real_of(at(q, q));
        // negligible against both diagonal entries: drop it
        const double guard = 100.0 * g;
        if (sweep > 3 && std::abs(app) + guard == std::abs(app) &&
            std::abs(aqq) + guard == std::abs(aqq)) {
          at(p, q) = T{};
          at(q, p) = T{};
          continue;
        }
        const T w = at(p, q) / g;  // unit phase
        const T wc = conj_of(w);
        for (std::size_t r = 0; r < n; ++r) at(r, q) *= wc;
        for (std::size_t r = 0; r < n; ++r) at(q, r) *= w;
        for (std::size_t r = 0; r < n; ++r) evecs[r * n + q] *= wc;

        const double theta = (aqq - app) / (2.0 * g);
        double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        if (theta < 0.0) t = -t;
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        for (std::size_t r = 0; r < n; ++r) {
          const T rp = at(r, p);
          const T rq = at(r, q);
          at(r, p) = c * rp - s * rq;
          at(r, q) = s * rp + c * rq;
        }
        for (std::size_t r = 0; r < n; ++r) {
          const T pr = at(p, r);
          const T qr = at(q, r);
          at(p, r) = c * pr - s * qr;
          at(q, r) = s * pr + c * qr;
        }
        for (std::size_t r = 0; r < n; ++r) {
          T& vp = evecs[r * n + p];
          T& vq = evecs[r * n + q];
          const T rp = vp;
          const T rq = vq;
          vp = c * rp - s * rq;
          vq = s * rp + c * rq;
        }
        at(p, q) = T{};
        at(q, p) = T{};
        at(p, p) = T{real_of(at(p, p))};
        at(q, q) = T{real_of(at(q, q))};
      }
    }
  }
  if (!converged) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += abs2(at(p, q));
    converged = off <= target;
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return real_of(at(x, x)) > real_of(at(y, y));
  });
  evals.resize(n);
  std::vector<T> sorted(n * n);
  for (std::size_t k = 0; k < n; ++k) {
    evals[k] = real_of(at(order[k], order[k]));
    for (std::size_t r = 0; r < n; ++r) sorted[r * n + k] = evecs[r * n + order[k]];
  }
  evecs.swap(sorted);
  return converged;
}

}  // namespace schurnorm::detail
