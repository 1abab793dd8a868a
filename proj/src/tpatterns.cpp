#include "schurnorm/tpatterns.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <string>

namespace schurnorm::tpatterns {

DiagonalSet::DiagonalSet(std::vector<std::int64_t> values) : values_(std::move(values)) {
  std::sort(values_.begin(), values_.end());
  values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
}

int dyadic_index(std::int64_t s) {
  if (s < 1) throw Error(ErrorKind::InvalidInput, "dyadic intervals need values >= 1");
  return static_cast<int>(std::bit_width(static_cast<std::uint64_t>(s - 1)));
}

namespace {

void require_positive(const DiagonalSet& s) {
  if (!s.empty() && s.values().front() < 1)
    throw Error(ErrorKind::InvalidInput, "Hankel diagonals must be >= 1, got " + std::to_string(s.values().front()));
}

// Entries (i, j) with i + j = s inside the c x c corner.
std::size_t antidiagonal_in_corner(std::int64_t s, std::size_t c) {
  const auto cc = static_cast<std::int64_t>(c);
  if (s < 0 || s > 2 * cc - 2) return 0;
  return static_cast<std::size_t>(s <= cc - 1 ? s + 1 : 2 * cc - 1 - s);
}

}  // namespace

LacunaryReport lacunary_decompose(const DiagonalSet& s) {
  require_positive(s);
  LacunaryReport report;
  for (std::int64_t x : s.values()) ++report.dyadic_counts[dyadic_index(x)];
  for (const auto& [k, count] : report.dyadic_counts) report.max_count = std::max(report.max_count, count);

  // Class (k mod 2) L + r, r the position inside the dyadic interval: at most
  // one element from every second interval, so consecutive ratios exceed 2.
  const std::size_t l = report.max_count;
  std::vector<std::vector<std::int64_t>> classes(2 * l);
  int current_k = -1;
  std::size_t r = 0;
  for (std::int64_t x : s.values()) {
    const int k = dyadic_index(x);
    r = k == current_k ? r + 1 : 0;
    current_k = k;
    classes[static_cast<std::size_t>(k % 2) * l + r].push_back(x);
  }
  for (auto& c : classes)
    if (!c.empty()) report.pieces.push_back(std::move(c));
  return report;
}

Pattern pattern_builder(const DiagonalSet& s, std::size_t grid, PatternKind kind) {
  if (grid == 0) throw Error(ErrorKind::InvalidInput, "grid must be at least 1");
  std::vector<Entry> entries;
  const auto g = static_cast<std::int64_t>(grid);
  for (std::int64_t d : s.values())
    for (std::int64_t i = 0; i < g; ++i) {
      const std::int64_t j = kind == PatternKind::Hankel ? d - i : i - d;
      if (j >= 0 && j < g) entries.push_back({static_cast<std::size_t>(i), static_cast<std::size_t>(j)});
    }
  return Pattern(grid, grid, std::move(entries));
}

HankelReport hankel_classify(const DiagonalSet& s, std::size_t grid, std::size_t dyadic_budget) {
  require_positive(s);
  if (!s.empty() && grid < 2 * static_cast<std::size_t>(s.values().back()))
    throw Error(ErrorKind::InvalidInput, "grid must be at least 2 max(S)");

  LacunaryReport lacunary = lacunary_decompose(s);
  const bool bounded = lacunary.max_count <= dyadic_budget;
  flow::OptimalBound best = flow::optimal_bound(pattern_builder(s, grid, PatternKind::Hankel));

  RectangleWitness witness;
  for (const auto& [k, a_k] : lacunary.dyadic_counts) {
    const std::size_t corner = std::min<std::size_t>(std::size_t{1} << k, grid);
    std::size_t count = 0;
    for (std::int64_t x : s.values()) count += antidiagonal_in_corner(x, corner);
    const std::size_t m_lower = (count + 2 * corner - 1) / (2 * corner);
    if (witness.corner == 0 || m_lower > witness.m_lower) witness = {k, corner, count, a_k, m_lower};
  }
  return HankelReport{bounded,
                      std::move(lacunary),
                      best.m,
                      std::move(best.decomposition),
                      flow::schur_bound_interval(best.m),
                      witness,
                      grid};
}

flow::Interval toeplitz_bound_interval(const DiagonalSet& s) {
  if (s.empty()) return {0.0, 0.0};
  const double root = std::sqrt(static_cast<double>(s.size()));
  return {std::max(1.0, root / 4.0), root};
}

flow::Interval toeplitz_l2_interval(const std::map<std::int64_t, cplx>& a) {
  double sq = 0.0;
  for (const auto& [k, z] : a) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw Error(ErrorKind::InvalidInput, "Toeplitz coefficients must be finite");
    sq += std::norm(z);
  }
  const double norm = std::sqrt(sq);
  return {norm / std::numbers::sqrt2, norm};
}

std::size_t effective_grid(const DiagonalSet& s, std::size_t grid_points) {
  if (s.empty()) return grid_points;
  const auto span = static_cast<std::size_t>(s.values().back() - s.values().front());
  return std::max(grid_points, 2 * (span + 1));
}

namespace {

// Unit roots and reduced exponents for evaluation on the N-point grid.
struct GridEvaluator {
  std::size_t n_grid;
  std::vector<cplx> roots;
  std::vector<std::uint64_t> exps;

  GridEvaluator(const DiagonalSet& s, std::size_t n) : n_grid(n), roots(n) {
    for (std::size_t t = 0; t < n; ++t)
      roots[t] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(t) / static_cast<double>(n));
    const auto nn = static_cast<std::int64_t>(n);
    for (std::int64_t x : s.values()) exps.push_back(static_cast<std::uint64_t>(((x % nn) + nn) % nn));
  }

  // max_t |f(theta_t)| and its argmax
  std::pair<double, std::size_t> sup(const std::vector<int>& signs) const {
    double best = -1.0;
    std::size_t arg = 0;
    for (std::size_t t = 0; t < n_grid; ++t) {
      cplx f{0.0, 0.0};
      for (std::size_t k = 0; k < exps.size(); ++k) {
        const cplx w = roots[(exps[k] * t) % n_grid];
        f += signs[k] > 0 ? w : -w;
      }
      const double a = std::norm(f);
      if (a > best) {
        best = a;
        arg = t;
      }
    }
    return {std::sqrt(best), arg};
  }
};

double refine(const DiagonalSet& s, const std::vector<int>& signs, std::size_t n, std::size_t arg, double base) {
  double best = base;
  for (int u = -3; u <= 3; ++u) {
    if (u == 0) continue;
    const double theta = 2.0 * std::numbers::pi * (static_cast<double>(arg) + u / 4.0) / static_cast<double>(n);
    cplx f{0.0, 0.0};
    for (std::size_t k = 0; k < s.size(); ++k)
      f += static_cast<double>(signs[k]) * std::polar(1.0, static_cast<double>(s.values()[k]) * theta);
    best = std::max(best, std::abs(f));
  }
  return best;
}

}  // namespace

double sampled_sup(const DiagonalSet& s, const std::vector<int>& signs, std::size_t grid_points) {
  if (s.empty()) throw Error(ErrorKind::EmptySet, "sign search needs a nonempty set");
  if (signs.size() != s.size()) throw Error(ErrorKind::ShapeMismatch, "one sign per element required");
  const std::size_t n = effective_grid(s, std::max(grid_points, 16 * s.size()));
  const GridEvaluator eval(s, n);
  const auto [value, arg] = eval.sup(signs);
  return refine(s, signs, n, arg, value);
}

FlatSignResult flat_sign_search(const DiagonalSet& s, std::size_t trials, std::size_t grid_points,
                                std::uint64_t rng_seed) {
  if (s.empty()) throw Error(ErrorKind::EmptySet, "sign search needs a nonempty set");
  if (trials == 0) throw Error(ErrorKind::InvalidInput, "trials must be at least 1");
  if (grid_points == 0) grid_points = 16 * s.size();
  if (grid_points < 16 * s.size()) throw Error(ErrorKind::InvalidInput, "grid_points must be at least 16 |S|");

  const std::size_t n = effective_grid(s, grid_points);
  const GridEvaluator eval(s, n);
  std::mt19937_64 rng(rng_seed);
  const std::size_t words = (s.size() + 63) / 64;

  std::vector<int> signs(s.size()), best_signs;
  double best = std::numeric_limits<double>::infinity();
  std::size_t best_arg = 0;
  std::vector<std::uint64_t> bits(words);
  for (std::size_t trial = 0; trial < trials; ++trial) {
    for (auto& w : bits) w = rng();
    for (std::size_t k = 0; k < s.size(); ++k) signs[k] = (bits[k / 64] >> (k % 64)) & 1U ? 1 : -1;
    const auto [value, arg] = eval.sup(signs);
    if (value < best) {
      best = value;
      best_arg = arg;
      best_signs = signs;
    }
  }
  FlatSignResult out;
  out.signs = best_signs;
  out.sup_norm = refine(s, best_signs, n, best_arg, best);
  out.seed = rng_seed;
  out.grid_points = n;
  out.trials = trials;
  return out;
}

}  // namespace schurnorm::tpatterns
