#pragma once

// Row-bounded + column-bounded splits of patterns and nonnegative matrices,
// decided by a max-flow / min-cut computation.

#include <cstddef>
#include <cstdint>
#include <utility>
#include <variant>
#include <vector>

#include "schurnorm/core.hpp"

namespace schurnorm::flow {

struct PatternDecomposition {
  Pattern row_part;
  Pattern col_part;
  std::size_t row_count_bound = 0;  // at most this many entries per row of row_part
  std::size_t col_count_bound = 0;
  double row_bound = 0.0;  // l2 bound, sqrt(row_count_bound)
  double col_bound = 0.0;
};

/// Entries satisfy row_part(i,j)^2 + col_part(i,j)^2 = a(i,j)^2.
struct MatrixDecomposition {
  NonnegMatrix row_part;
  NonnegMatrix col_part;
  double row_bound = 0.0;  // sqrt(M)
  double col_bound = 0.0;  // sqrt(N)
};

/// A rectangle R x C whose squared mass exceeds M|R| + N|C|.
struct CutCertificate {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  double mass = 0.0;
  double slack = 0.0;
};

using PatternResult = std::variant<PatternDecomposition, CutCertificate>;
using MatrixResult = std::variant<MatrixDecomposition, CutCertificate>;

PatternResult decompose(const Pattern& p, std::size_t row_count_bound, std::size_t col_count_bound);
MatrixResult decompose(const NonnegMatrix& a, double m_bound, double n_bound);

struct OptimalBound {
  std::size_t m = 0;
  PatternDecomposition decomposition;
};

/// Smallest m for which p splits into parts row/column bounded by m.
OptimalBound optimal_bound(const Pattern& p);

struct Interval {
  double lower = 0.0;
  double upper = 0.0;
};

/// Bracket on the Schur bound of p from its optimal m.
Interval schur_bound_interval(const Pattern& p);

/// Same bracket from a known optimal m: (max(1, sqrt(m)/4), 2 sqrt(m)), or (0, 0) for m = 0.
Interval schur_bound_interval(std::size_t m);

struct MatrixBound {
  double m_value = 0.0;  // optimal row/column l2 bound M
  Interval interval;     // (M/4, 2M)
};

/// Bisection on flow feasibility for the optimal M of a nonnegative matrix.
MatrixBound matrix_bound_interval(const NonnegMatrix& a);

/// Exhaustive least integer >= sup |P cap RxC| / (|R| + |C|).
/// Requires n_rows + n_cols <= 14.
std::size_t brute_force_best_m(const Pattern& p);

// Self-validation used by tests, the CLI and the acceptance suite.
bool validate(const Pattern& p, const PatternDecomposition& d);
bool validate(const NonnegMatrix& a, const MatrixDecomposition& d);
bool validate(const Pattern& p, std::size_t m, std::size_t n, const CutCertificate& c);
bool validate(const NonnegMatrix& a, double m, double n, const CutCertificate& c);

/// Dinic max-flow on 64-bit integer capacities.
class MaxFlow {
 public:
  explicit MaxFlow(std::size_t n_nodes);
  /// Returns the edge index (for reading its flow later).
  std::size_t add_edge(std::size_t from, std::size_t to, std::int64_t capacity);
  std::int64_t run(std::size_t source, std::size_t sink);
  std::int64_t flow_on(std::size_t edge) const;
  /// Nodes reachable from the source in the residual graph after run().
  std::vector<bool> source_side(std::size_t source) const;

 private:
  struct Edge {
    std::size_t to;
    std::int64_t cap;
    std::int64_t original;
  };
  bool bfs(std::size_t s, std::size_t t);
  std::int64_t dfs(std::size_t v, std::size_t t, std::int64_t pushed);

  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<int> level_;
  std::vector<std::size_t> it_;
};

}  // namespace schurnorm::flow
