#pragma once

// Schur multiplier norm of an explicit matrix, with certificates that can be
// re-checked using only the core operations.

#include <cstddef>
#include <vector>

#include "schurnorm/core.hpp"

namespace schurnorm::gamma2 {

/// Vectors with <x_i, y_j> = x_i^* y_j = s_ij.  Certifies ||S||_m <= bound.
struct HaagerupVectors {
  std::vector<std::vector<cplx>> x;
  std::vector<std::vector<cplx>> y;
  double bound = 0.0;  // max_i |x_i| * max_j |y_j|
};

/// Test operator B.  Certifies ||S||_m >= bound = ||S o B|| / ||B||.
struct Witness {
  DenseMatrix test;
  double bound = 0.0;
};

struct NormReport {
  double value = 0.0;
  double tol = 0.0;
  HaagerupVectors upper;
  Witness lower;
};

struct SolverOptions {
  int max_iterations = 200;
  double gap_tol = 1e-11;  // relative primal-dual gap on the normalized problem
};

/// Optimal PSD completion [[A, S], [S^*, B]] with diag(A), diag(B) <= level.
struct Completion {
  double level = 0.0;
  DenseMatrix block;   // (r + c) x (r + c) Hermitian, off-diagonal blocks S, S^*
  DenseMatrix dual;    // trace-one PSD dual matrix with diagonal diagonal blocks
  double dual_value = 0.0;
};

/// Solves min t s.t. the block matrix with diagonals <= t is PSD.
/// Throws NoConvergence when the interior-point iteration stalls.
Completion solve_completion(const DenseMatrix& s, const SolverOptions& opts = {});

/// Full norm computation with both certificates.  tol >= 1e-8, dims <= 128.
NormReport schur_norm(const DenseMatrix& s, double tol = 1e-6, const SolverOptions& opts = {});

/// Factor the PSD completion at `level` into Haagerup vectors.
/// Throws NotFeasible if no completion at that level exists.
HaagerupVectors extract_haagerup(const DenseMatrix& s, double level);

/// Vectors from a given PSD block matrix (off-diagonal block must equal S).
HaagerupVectors haagerup_from_block(const DenseMatrix& block, std::size_t n_rows);

/// ||Delta(|T^*|)||^{1/2} ||Delta(|T|)||^{1/2}.
double upper_bound_polar(const DenseMatrix& t);

/// ||S o B|| / ||B||.  Throws ZeroTest when B = 0.
Witness lower_bound_witness(const DenseMatrix& s, const DenseMatrix& b);

/// Witness from diagonal weights u, v: B = conj(W) with W the polar factor of
/// diag(u) S diag(v), improved by alternating singular-vector updates.
Witness weighted_witness(const DenseMatrix& s, std::vector<double> u, std::vector<double> v,
                         int refine_steps = 30);

struct BigNormBounds {
  double alpha = 0.0;
  double alpha_lower = 0.0;  // (1/2) sqrt(alpha / 3)
  double z_witness = 0.0;    // <u, Z v>, at least sqrt(alpha / 2)
};

/// Quantities of the large-norm construction for a square nonnegative matrix.
/// Throws EmptyMatrix when every entry is zero.
BigNormBounds bignorm_bounds(const NonnegMatrix& a);

/// Certificate checks that use only core operations.
double haagerup_reproduction_error(const DenseMatrix& s, const HaagerupVectors& h);
double haagerup_bound(const HaagerupVectors& h);
double witness_bound(const DenseMatrix& s, const Witness& w);

}  // namespace schurnorm::gamma2
