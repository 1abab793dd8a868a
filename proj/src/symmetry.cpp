#include "schurnorm/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numbers>
#include <string>

namespace schurnorm::symmetry {

GroupAction::GroupAction(std::size_t n_points, std::vector<Permutation> generators)
    : n_points_(n_points), generators_(std::move(generators)) {
  if (n_points_ == 0) throw Error(ErrorKind::InvalidInput, "group action needs at least one point");
  for (const Permutation& g : generators_) {
    if (g.size() != n_points_)
      throw Error(ErrorKind::InvalidInput, "generator length differs from the number of points");
    std::vector<bool> hit(n_points_, false);
    for (std::size_t x : g) {
      if (x >= n_points_ || hit[x]) throw Error(ErrorKind::InvalidInput, "generator is not a bijection");
      hit[x] = true;
    }
  }
  std::vector<bool> seen(n_points_, false);
  std::deque<std::size_t> queue{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!queue.empty()) {
    const std::size_t x = queue.front();
    queue.pop_front();
    for (const Permutation& g : generators_)
      if (!seen[g[x]]) {
        seen[g[x]] = true;
        ++count;
        queue.push_back(g[x]);
      }
  }
  if (count != n_points_)
    throw Error(ErrorKind::NotTransitive,
                "action is not transitive: orbit of point 0 has " + std::to_string(count) + " of " +
                    std::to_string(n_points_) + " points");
}

GroupAction GroupAction::symmetric(std::size_t n) {
  std::vector<Permutation> gens;
  if (n > 1) {
    Permutation swap(n), cycle(n);
    for (std::size_t i = 0; i < n; ++i) {
      swap[i] = i;
      cycle[i] = (i + 1) % n;
    }
    std::swap(swap[0], swap[1]);
    gens = {swap, cycle};
  }
  return GroupAction(n, std::move(gens));
}

GroupAction GroupAction::cyclic(std::size_t n) {
  std::vector<Permutation> gens;
  if (n > 1) {
    Permutation cycle(n);
    for (std::size_t i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
    gens = {cycle};
  }
  return GroupAction(n, std::move(gens));
}

OrbitStructure orbit_structure(const GroupAction& g) {
  const std::size_t n = g.n_points();
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  OrbitStructure out;
  out.n_points = n;
  out.orbit_index.assign(n * n, unset);
  for (std::size_t start = 0; start < n * n; ++start) {
    if (out.orbit_index[start] != unset) continue;
    const std::size_t id = out.n_orbits++;
    out.orbit_index[start] = id;
    std::deque<std::size_t> queue{start};
    while (!queue.empty()) {
      const std::size_t pair = queue.front();
      queue.pop_front();
      const std::size_t i = pair / n, j = pair % n;
      for (const Permutation& p : g.generators()) {
        const std::size_t image = p[i] * n + p[j];
        if (out.orbit_index[image] == unset) {
          out.orbit_index[image] = id;
          queue.push_back(image);
        }
      }
    }
  }
  out.diagonal_orbit = out.orbit_index[0];
  out.basis.assign(out.n_orbits, DenseMatrix(n, n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.basis[out.orbit_of(i, j)](i, j) = 1.0;
  out.row_sums.assign(out.n_orbits, 0);
  for (std::size_t k = 0; k < out.n_orbits; ++k) {
    std::size_t first = 0;
    for (std::size_t j = 0; j < n; ++j) first += out.orbit_of(0, j) == k ? 1 : 0;
    for (std::size_t i = 1; i < n; ++i) {
      std::size_t r = 0;
      for (std::size_t j = 0; j < n; ++j) r += out.orbit_of(i, j) == k ? 1 : 0;
      if (r != first) throw Error(ErrorKind::NotTransitive, "orbit basis has non-constant row sums");
    }
    out.row_sums[k] = first;
  }
  return out;
}

double mathias_norm(const DenseMatrix& t) {
  if (!t.square()) throw Error(ErrorKind::ShapeMismatch, "mathias_norm needs a square matrix");
  const std::size_t n = t.rows();
  const DenseMatrix abs_t = polar_absolute(t).abs;
  const DenseMatrix abs_ts = polar_absolute(t.adjoint()).abs;
  const double tol = tolerances::scalar_diagonal_rel * std::max(operator_norm(t), 1e-300);
  for (std::size_t i = 1; i < n; ++i) {
    if (std::abs(abs_t(i, i) - abs_t(0, 0)) > tol || std::abs(abs_ts(i, i) - abs_ts(0, 0)) > tol)
      throw Error(ErrorKind::DiagonalNotScalar, "Delta(|T|) or Delta(|T*|) is not scalar");
  }
  return trace(abs_t).real() / static_cast<double>(n);
}

DenseMatrix commutant_element(const OrbitStructure& orbits, const std::vector<cplx>& coeffs) {
  if (coeffs.size() != orbits.n_orbits)
    throw Error(ErrorKind::ShapeMismatch, "need one coefficient per orbit");
  const std::size_t n = orbits.n_points;
  DenseMatrix t(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t(i, j) = coeffs[orbits.orbit_of(i, j)];
  return t;
}

double commutant_norm(const GroupAction& g, const std::vector<cplx>& coeffs) {
  return mathias_norm(commutant_element(orbit_structure(g), coeffs));
}

double cyclic_example_norm(std::size_t n) {
  if (n < 3) throw Error(ErrorKind::InvalidInput, "cyclic_example_norm needs n >= 3");
  const double nn = static_cast<double>(n);
  const double x = std::numbers::pi / (2.0 * nn);
  return n % 2 == 0 ? 2.0 * std::cos(x) / (nn * std::sin(x)) : 2.0 / (nn * std::sin(x));
}

double sign_matrix_norm(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidInput, "sign_matrix_norm needs n >= 1");
  const double nn = static_cast<double>(n);
  double s = 0.0;
  for (std::size_t j = 1; j <= n / 2; ++j)
    s += 1.0 / std::tan((2.0 * static_cast<double>(j) - 1.0) * std::numbers::pi / (2.0 * nn));
  return 2.0 / nn * s;
}

DenseMatrix sign_matrix(std::size_t n) {
  DenseMatrix s(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) s(i, j) = i > j ? 1.0 : (i < j ? -1.0 : 0.0);
  return s;
}

DenseMatrix cycle_matrix(std::size_t n) {
  DenseMatrix u(n, n);
  for (std::size_t k = 0; k < n; ++k) u((k + 1) % n, k) = 1.0;
  return u;
}

DenseMatrix permutation_matrix(const Permutation& p) {
  DenseMatrix m(p.size(), p.size());
  for (std::size_t k = 0; k < p.size(); ++k) m(p[k], k) = 1.0;
  return m;
}

}  // namespace schurnorm::symmetry
