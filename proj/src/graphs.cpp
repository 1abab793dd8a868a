#include "schurnorm/graphs.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace schurnorm::graphs {

namespace {

constexpr std::size_t kMaxAdjacencyVertices = 4096;
constexpr std::size_t kMaxSchemeVertices = 512;

std::size_t checked_vertex_count(std::size_t v, std::size_t n, std::size_t limit) {
  const BigInt count = binomial(v, n);
  if (count > limit) {
    std::ostringstream msg;
    msg << "C(" << v << "," << n << ") = " << count << " exceeds the limit of " << limit << " vertices";
    throw Error(ErrorKind::TooLarge, msg.str());
  }
  return count.convert_to<std::size_t>();
}

std::size_t intersection_size(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  std::size_t count = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      ++count;
      ++ia;
      ++ib;
    }
  }
  return count;
}

// Integer matrix of pairwise intersection sizes.
std::vector<std::size_t> intersection_table(const std::vector<std::vector<std::size_t>>& subsets) {
  const std::size_t n = subsets.size();
  std::vector<std::size_t> t(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) t[a * n + b] = t[b * n + a] = intersection_size(subsets[a], subsets[b]);
  return t;
}

using IntMatrix = std::vector<std::int64_t>;

IntMatrix int_mul(const IntMatrix& x, const IntMatrix& y, std::size_t n) {
  IntMatrix out(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const std::int64_t xik = x[i * n + k];
      if (xik == 0) continue;
      for (std::size_t j = 0; j < n; ++j) out[i * n + j] += xik * y[k * n + j];
    }
  return out;
}

}  // namespace

void JohnsonSpec::validate() const {
  if (n < 1 || 2 * n > v) throw Error(ErrorKind::InvalidInput, "Johnson graph needs 1 <= n <= v/2");
  if (i > n) throw Error(ErrorKind::InvalidInput, "Johnson graph needs 0 <= i <= n");
}

BigInt binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (std::size_t j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

std::vector<std::vector<std::size_t>> colex_subsets(std::size_t v, std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  if (n > v) return out;
  std::vector<std::size_t> c(n);
  for (std::size_t k = 0; k < n; ++k) c[k] = k;
  while (true) {
    out.push_back(c);
    // lowest position that can advance without colliding with its successor
    std::size_t j = 0;
    while (j < n && c[j] + 1 == (j + 1 < n ? c[j + 1] : v)) ++j;
    if (j == n) break;
    ++c[j];
    for (std::size_t k = 0; k < j; ++k) c[k] = k;
  }
  return out;
}

std::size_t colex_rank(const std::vector<std::size_t>& subset) {
  std::size_t rank = 0;
  for (std::size_t k = 0; k < subset.size(); ++k) rank += binomial(subset[k], k + 1).convert_to<std::size_t>();
  return rank;
}

DenseMatrix johnson_adjacency(const JohnsonSpec& spec) {
  spec.validate();
  const std::size_t count = checked_vertex_count(spec.v, spec.n, kMaxAdjacencyVertices);
  const auto subsets = colex_subsets(spec.v, spec.n);
  DenseMatrix adj(count, count);
  for (std::size_t a = 0; a < count; ++a)
    for (std::size_t b = a; b < count; ++b)
      if (intersection_size(subsets[a], subsets[b]) == spec.i) adj(a, b) = adj(b, a) = 1.0;
  return adj;
}

DenseMatrix kneser_adjacency(std::size_t n) { return johnson_adjacency({2 * n + 1, n, 0}); }

BigInt johnson_degree(const JohnsonSpec& spec) {
  spec.validate();
  return binomial(spec.n, spec.i) * binomial(spec.v - spec.n, spec.n - spec.i);
}

std::vector<BigInt> scheme_eigen_dims(std::size_t v, std::size_t n) {
  JohnsonSpec{v, n, 0}.validate();
  std::vector<BigInt> dims;
  for (std::size_t i = 0; i <= n; ++i) dims.push_back(binomial(v, i) - (i == 0 ? BigInt(0) : binomial(v, i - 1)));
  return dims;
}

std::vector<std::int64_t> kneser_eigenvalues(std::size_t n) {
  if (n < 1) throw Error(ErrorKind::InvalidInput, "Kneser graph K(2n+1, n) needs n >= 1");
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i <= n; ++i) {
    const auto mag = static_cast<std::int64_t>(n + 1 - i);
    out.push_back(i % 2 == 0 ? mag : -mag);
  }
  return out;
}

Rational kneser_product_form(std::size_t n) {
  Rational p = 1;
  for (std::size_t i = 1; i <= n; ++i) p *= Rational(BigInt(2 * i + 2), BigInt(2 * i + 1));
  return p;
}

Rational kneser_schur_norm(std::size_t n) {
  if (n < 1) throw Error(ErrorKind::InvalidInput, "Kneser graph K(2n+1, n) needs n >= 1");
  const Rational value(BigInt(1) << (2 * n), binomial(2 * n + 1, n));
  if (value != kneser_product_form(n)) throw std::logic_error("Kneser norm disagrees with its product form");
  return value;
}

BigInt structure_constant(std::size_t v, std::size_t n, std::size_t i, std::size_t j, std::size_t k) {
  // A, B with |A & B| = k; count n-sets C with |A & C| = i, |B & C| = j by x = |A & B & C|.
  if (i > n || j > n || k > n || v < 2 * n) return 0;
  BigInt total = 0;
  const std::size_t outside = v - 2 * n + k;
  for (std::size_t x = 0; x <= std::min({k, i, j}); ++x) {
    if (i + j > n + x) continue;
    total += binomial(k, x) * binomial(n - k, i - x) * binomial(n - k, j - x) * binomial(outside, n - i - j + x);
  }
  return total;
}

SchemeReport verify_scheme(std::size_t v, std::size_t n) {
  JohnsonSpec{v, n, 0}.validate();
  const std::size_t count = checked_vertex_count(v, n, kMaxSchemeVertices);
  SchemeReport report;
  report.v = v;
  report.n = n;
  report.vertices = count;

  const auto inter = intersection_table(colex_subsets(v, n));
  std::vector<IntMatrix> t(n + 1, IntMatrix(count * count, 0));
  for (std::size_t e = 0; e < count * count; ++e) t[inter[e]][e] = 1;

  report.commutative = true;
  report.structure_constants = true;
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = i; j <= n; ++j) {
      const IntMatrix ij = int_mul(t[i], t[j], count);
      const IntMatrix ji = int_mul(t[j], t[i], count);
      if (ij != ji) {
        report.commutative = false;
        report.violations.push_back("T_" + std::to_string(i) + " T_" + std::to_string(j) + " != T_" +
                                    std::to_string(j) + " T_" + std::to_string(i));
      }
      std::vector<std::int64_t> a(n + 1);
      for (std::size_t k = 0; k <= n; ++k) a[k] = structure_constant(v, n, i, j, k).convert_to<std::int64_t>();
      bool match = true;
      for (std::size_t e = 0; e < count * count && match; ++e) match = ij[e] == a[inter[e]];
      if (!match) {
        report.structure_constants = false;
        report.violations.push_back("T_" + std::to_string(i) + " T_" + std::to_string(j) +
                                    " differs from sum_k a_ijk T_k");
      }
    }

  // A generic element of the algebra separates its joint eigenspaces.
  DenseMatrix generic(count, count);
  for (std::size_t e = 0; e < count * count; ++e)
    generic.data()[e] = std::sqrt(2.0 * static_cast<double>(inter[e]) + 3.0);
  const std::vector<double> evals = hermitian_eig(generic).eigenvalues;
  const double gap = 1e-6 * std::max(1.0, std::abs(evals.front()));
  std::size_t run = 1;
  for (std::size_t k = 1; k <= evals.size(); ++k) {
    if (k == evals.size() || evals[k - 1] - evals[k] > gap) {
      report.multiplicities.push_back(run);
      run = 1;
    } else {
      ++run;
    }
  }
  report.eigenspaces = report.multiplicities.size();
  std::sort(report.multiplicities.begin(), report.multiplicities.end(), std::greater<>());
  if (report.eigenspaces != n + 1)
    report.violations.push_back("found " + std::to_string(report.eigenspaces) + " joint eigenspaces, expected " +
                                std::to_string(n + 1));
  std::vector<std::size_t> dims;
  for (const BigInt& d : scheme_eigen_dims(v, n)) dims.push_back(d.convert_to<std::size_t>());
  std::sort(dims.begin(), dims.end(), std::greater<>());
  if (dims != report.multiplicities) report.violations.push_back("eigenspace dimensions differ from C(v,i) - C(v,i-1)");
  return report;
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

}  // namespace schurnorm::graphs
