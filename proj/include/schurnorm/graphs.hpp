#pragma once

// Johnson and Kneser graphs, the Johnson scheme eigenstructure and the exact
// Schur norm of the Kneser adjacency matrix.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "schurnorm/core.hpp"

namespace schurnorm::graphs {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// J(v, n, i): n-subsets of a v-set, adjacent when they meet in i points.
struct JohnsonSpec {
  std::size_t v = 0;
  std::size_t n = 0;
  std::size_t i = 0;

  /// Throws InvalidInput unless 1 <= n <= v/2 and i <= n.
  void validate() const;
};

BigInt binomial(std::size_t n, std::size_t k);

/// All n-subsets of {0..v-1} in colexicographic order.
std::vector<std::vector<std::size_t>> colex_subsets(std::size_t v, std::size_t n);

/// Colexicographic rank of a sorted subset: sum_k C(a_k, k+1).
std::size_t colex_rank(const std::vector<std::size_t>& subset);

/// 0/1 adjacency of J(v, n, i).  Throws TooLarge above 4096 vertices.
DenseMatrix johnson_adjacency(const JohnsonSpec& spec);

/// Kneser graph K(2n+1, n).
DenseMatrix kneser_adjacency(std::size_t n);

/// Regular degree C(n, i) C(v - n, n - i) of J(v, n, i).
BigInt johnson_degree(const JohnsonSpec& spec);

/// dim W_i = C(v, i) - C(v, i - 1) for i = 0..n.
std::vector<BigInt> scheme_eigen_dims(std::size_t v, std::size_t n);

/// Eigenvalue (-1)^i (n + 1 - i) of K(2n+1, n) on W_i, i = 0..n.
std::vector<std::int64_t> kneser_eigenvalues(std::size_t n);

/// 2^{2n} / C(2n+1, n), checked against prod_{i=1}^{n} (1 + 1/(2i+1)).
Rational kneser_schur_norm(std::size_t n);

/// (4)(6)...(2n+2) / ((3)(5)...(2n+1)) = prod_{i=1}^{n} (1 + 1/(2i+1)).
Rational kneser_product_form(std::size_t n);

/// Structure constant a_ijk of the Johnson scheme J(v, n).
BigInt structure_constant(std::size_t v, std::size_t n, std::size_t i, std::size_t j, std::size_t k);

struct SchemeReport {
  std::size_t v = 0;
  std::size_t n = 0;
  std::size_t vertices = 0;
  bool commutative = false;
  bool structure_constants = false;
  std::size_t eigenspaces = 0;           // distinct eigenvalues of a generic element
  std::vector<std::size_t> multiplicities;  // sizes of those eigenspaces, descending
  std::vector<std::string> violations;

  bool ok() const noexcept { return violations.empty(); }
};

/// Exact checks of the Johnson scheme identities.  Throws TooLarge above 512 vertices.
SchemeReport verify_scheme(std::size_t v, std::size_t n);

double to_double(const Rational& q);

}  // namespace schurnorm::graphs
