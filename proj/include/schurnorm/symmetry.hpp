#pragma once

// Exact Schur norms for matrices in the commutant of a transitive
// permutation action.

#include <cstddef>
#include <vector>

#include "schurnorm/core.hpp"

namespace schurnorm::symmetry {

using Permutation = std::vector<std::size_t>;

/// Permutation group given by generators, acting transitively on {0..n-1}.
class GroupAction {
 public:
  /// Throws InvalidInput for non-bijections and NotTransitive otherwise.
  GroupAction(std::size_t n_points, std::vector<Permutation> generators);

  std::size_t n_points() const noexcept { return n_points_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }

  static GroupAction symmetric(std::size_t n);
  static GroupAction cyclic(std::size_t n);

 private:
  std::size_t n_points_;
  std::vector<Permutation> generators_;
};

struct OrbitStructure {
  std::size_t n_points = 0;
  std::vector<std::size_t> orbit_index;  // n_points^2, row-major pair (i, j)
  std::size_t n_orbits = 0;
  std::vector<DenseMatrix> basis;        // 0/1 indicator of each orbit
  std::vector<std::size_t> row_sums;     // constant row sum of each basis matrix
  std::size_t diagonal_orbit = 0;

  std::size_t orbit_of(std::size_t i, std::size_t j) const { return orbit_index[i * n_points + j]; }
};

/// Orbits of G on X x X in discovery order (row-major scan, orbit of (0,0) first).
OrbitStructure orbit_structure(const GroupAction& g);

/// (1/n) Tr|T|, valid when Delta(|T|) and Delta(|T^*|) are scalar.
/// Throws DiagonalNotScalar otherwise.
double mathias_norm(const DenseMatrix& t);

/// sum_k coeffs_k T_k assembled from the orbit basis.
DenseMatrix commutant_element(const OrbitStructure& orbits, const std::vector<cplx>& coeffs);

double commutant_norm(const GroupAction& g, const std::vector<cplx>& coeffs);

/// Closed form for ||U + I||_m with U the n-cycle.
double cyclic_example_norm(std::size_t n);

/// Closed form for the Schur norm of [sgn(i - j)].
double sign_matrix_norm(std::size_t n);

/// The n x n matrix with entries sgn(i - j).
DenseMatrix sign_matrix(std::size_t n);

/// Cyclic shift U e_k = e_{k+1 mod n}.
DenseMatrix cycle_matrix(std::size_t n);

DenseMatrix permutation_matrix(const Permutation& p);

}  // namespace schurnorm::symmetry
