#pragma once

// Hankel and Toeplitz patterns: lacunary structure, boundedness diagnostics,
// l2 intervals and flat sign choices for trigonometric polynomials.

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "schurnorm/core.hpp"
#include "schurnorm/flow.hpp"

namespace schurnorm::tpatterns {

/// Sorted, duplicate-free set of diagonal indices.
class DiagonalSet {
 public:
  DiagonalSet() = default;
  explicit DiagonalSet(std::vector<std::int64_t> values);  // sorts and removes duplicates

  const std::vector<std::int64_t>& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }

  friend bool operator==(const DiagonalSet&, const DiagonalSet&) = default;

 private:
  std::vector<std::int64_t> values_;
};

/// Dyadic index k with s in (2^{k-1}, 2^k]; s >= 1.
int dyadic_index(std::int64_t s);

struct LacunaryReport {
  std::map<int, std::size_t> dyadic_counts;  // k -> a_k (nonzero counts only)
  std::size_t max_count = 0;                 // L
  std::vector<std::vector<std::int64_t>> pieces;
};

/// Splits S into at most 2L sets, each with consecutive ratios above 2.
/// Throws InvalidInput on values below 1.
LacunaryReport lacunary_decompose(const DiagonalSet& s);

enum class PatternKind { Hankel, Toeplitz };

/// grid x grid truncation: Hankel (i + j in S) or Toeplitz (i - j in S).
Pattern pattern_builder(const DiagonalSet& s, std::size_t grid, PatternKind kind);

/// Rectangle argument on the 2^k x 2^k corner: m >= ceil(count / 2^{k+1}) >= a_k / 4.
struct RectangleWitness {
  int k = 0;
  std::size_t corner = 0;          // min(2^k, grid)
  std::size_t corner_entries = 0;
  std::size_t a_k = 0;
  std::size_t m_lower = 0;
};

struct HankelReport {
  bool bounded = true;
  LacunaryReport lacunary;
  std::size_t m = 0;
  flow::PatternDecomposition decomposition;
  flow::Interval interval;
  RectangleWitness witness;
  std::size_t grid = 0;
};

inline constexpr std::size_t kDefaultDyadicBudget = 4;

/// Classifies H(S) on a grid x grid corner.  bounded means L <= dyadic_budget.
/// Throws InvalidInput on values below 1 or grid < 2 max(S).
HankelReport hankel_classify(const DiagonalSet& s, std::size_t grid,
                             std::size_t dyadic_budget = kDefaultDyadicBudget);

/// (max(1, sqrt|S|/4), sqrt|S|), or (0, 0) for empty S.
flow::Interval toeplitz_bound_interval(const DiagonalSet& s);

/// (||a||_2 / sqrt 2, ||a||_2) for a Toeplitz multiplier with diagonal coefficients a.
flow::Interval toeplitz_l2_interval(const std::map<std::int64_t, cplx>& a);

struct FlatSignResult {
  std::vector<int> signs;   // aligned with the sorted values of S
  double sup_norm = 0.0;    // refined sampled sup of |sum eps_k e^{i s_k theta}|
  std::uint64_t seed = 0;
  std::size_t grid_points = 0;  // effective sampling grid
  std::size_t trials = 0;
};

/// Effective grid: max(grid_points, 2 (max S - min S + 1)).
std::size_t effective_grid(const DiagonalSet& s, std::size_t grid_points);

/// Sampled sup of |f_eps| on a uniform grid, refined x4 around the argmax.
double sampled_sup(const DiagonalSet& s, const std::vector<int>& signs, std::size_t grid_points);

/// Random search over signs.  grid_points = 0 selects 16 |S|.
/// Throws EmptySet for empty S and InvalidInput for trials = 0 or grid_points < 16 |S|.
FlatSignResult flat_sign_search(const DiagonalSet& s, std::size_t trials, std::size_t grid_points,
                                std::uint64_t rng_seed);

}  // namespace schurnorm::tpatterns
