#include "schurnorm/flow.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <deque>
#include <limits>
#include <numeric>
#include <optional>

namespace schurnorm::flow {

// ---------------------------------------------------------------- MaxFlow (Dinic)

MaxFlow::MaxFlow(std::size_t n_nodes) : adj_(n_nodes), level_(n_nodes), it_(n_nodes) {}

std::size_t MaxFlow::add_edge(std::size_t from, std::size_t to, std::int64_t capacity) {
  const std::size_t id = edges_.size();
  edges_.push_back({to, capacity, capacity});
  adj_[from].push_back(id);
  edges_.push_back({from, 0, 0});
  adj_[to].push_back(id + 1);
  return id;
}

bool MaxFlow::bfs(std::size_t s, std::size_t t) {
  std::fill(level_.begin(), level_.end(), -1);
  std::deque<std::size_t> queue{s};
  level_[s] = 0;
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t id : adj_[v]) {
      const Edge& e = edges_[id];
      if (e.cap > 0 && level_[e.to] < 0) {
        level_[e.to] = level_[v] + 1;
        queue.push_back(e.to);
      }
    }
  }
  return level_[t] >= 0;
}

std::int64_t MaxFlow::dfs(std::size_t v, std::size_t t, std::int64_t pushed) {
  if (v == t) return pushed;
  for (std::size_t& i = it_[v]; i < adj_[v].size(); ++i) {
    const std::size_t id = adj_[v][i];
    Edge& e = edges_[id];
    if (e.cap <= 0 || level_[e.to] != level_[v] + 1) continue;
    const std::int64_t got = dfs(e.to, t, std::min(pushed, e.cap));
    if (got > 0) {
      e.cap -= got;
      edges_[id ^ 1].cap += got;
      return got;
    }
  }
  return 0;
}

std::int64_t MaxFlow::run(std::size_t source, std::size_t sink) {
  std::int64_t total = 0;
  while (bfs(source, sink)) {
    std::fill(it_.begin(), it_.end(), 0);
    while (std::int64_t f = dfs(source, sink, std::numeric_limits<std::int64_t>::max())) total += f;
  }
  return total;
}

std::int64_t MaxFlow::flow_on(std::size_t edge) const {
  return edges_[edge].original - edges_[edge].cap;
}

std::vector<bool> MaxFlow::source_side(std::size_t source) const {
  std::vector<bool> seen(adj_.size(), false);
  std::deque<std::size_t> queue{source};
  seen[source] = true;
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t id : adj_[v]) {
      const Edge& e = edges_[id];
      if (e.cap > 0 && !seen[e.to]) {
        seen[e.to] = true;
        queue.push_back(e.to);
      }
    }
  }
  return seen;
}

// ---------------------------------------------------------------- split engine

namespace {

struct WeightedEntry {
  std::size_t row;
  std::size_t col;
  double weight;  // squared entry (1 for patterns)
};

enum class Side { Row, Col };

struct SplitResult {
  bool feasible = false;
  std::vector<double> row_share;  // per entry, squared mass given to the row part
  CutCertificate cut;
};

double leq_slack(double bound) { return 1e-12 * std::max(1.0, std::abs(bound)); }

// Greedily drops rows/columns from a violated rectangle while it stays violated.
void shrink_certificate(const std::vector<WeightedEntry>& entries, std::size_t n_rows,
                        std::size_t n_cols, double m, double n, double min_slack,
                        CutCertificate& cert) {
  std::vector<bool> in_r(n_rows, false), in_c(n_cols, false);
  for (std::size_t i : cert.rows) in_r[i] = true;
  for (std::size_t j : cert.cols) in_c[j] = true;
  std::vector<std::vector<std::size_t>> by_row(n_rows), by_col(n_cols);
  std::vector<double> row_mass(n_rows, 0.0), col_mass(n_cols, 0.0);
  for (std::size_t k = 0; k < entries.size(); ++k) {
    const auto& e = entries[k];
    by_row[e.row].push_back(k);
    by_col[e.col].push_back(k);
    if (in_r[e.row] && in_c[e.col]) {
      row_mass[e.row] += e.weight;
      col_mass[e.col] += e.weight;
    }
  }
  double slack = cert.slack;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = n_rows; i-- > 0;) {
      if (!in_r[i]) continue;
      const double next = slack - row_mass[i] + m;
      if (next > min_slack) {
        in_r[i] = false;
        slack = next;
        changed = true;
        for (std::size_t k : by_row[i])
          if (in_c[entries[k].col]) col_mass[entries[k].col] -= entries[k].weight;
      }
    }
    for (std::size_t j = n_cols; j-- > 0;) {
      if (!in_c[j]) continue;
      const double next = slack - col_mass[j] + n;
      if (next > min_slack) {
        in_c[j] = false;
        slack = next;
        changed = true;
        for (std::size_t k : by_col[j])
          if (in_r[entries[k].row]) row_mass[entries[k].row] -= entries[k].weight;
      }
    }
  }
  cert.rows.clear();
  cert.cols.clear();
  double mass = 0.0;
  for (std::size_t i = 0; i < n_rows; ++i)
    if (in_r[i]) cert.rows.push_back(i);
  for (std::size_t j = 0; j < n_cols; ++j)
    if (in_c[j]) cert.cols.push_back(j);
  for (const auto& e : entries)
    if (in_r[e.row] && in_c[e.col]) mass += e.weight;
  cert.mass = mass;
  cert.slack = mass - m * static_cast<double>(cert.rows.size()) -
               n * static_cast<double>(cert.cols.size());
}

SplitResult split(const std::vector<WeightedEntry>& entries, std::size_t n_rows,
                  std::size_t n_cols, double m, double n, bool integral) {
  SplitResult out;
  out.row_share.assign(entries.size(), 0.0);

  std::vector<std::vector<std::size_t>> by_row(n_rows), by_col(n_cols);
  std::vector<double> row_sum(n_rows, 0.0), col_sum(n_cols, 0.0);
  for (std::size_t k = 0; k < entries.size(); ++k) {
    by_row[entries[k].row].push_back(k);
    by_col[entries[k].col].push_back(k);
    row_sum[entries[k].row] += entries[k].weight;
    col_sum[entries[k].col] += entries[k].weight;
  }

  // Strip rows whose remaining mass fits under M (all of it to the row part)
  // and columns under N (all to the column part) until none are left.
  std::vector<bool> row_active(n_rows, true), col_active(n_cols, true);
  std::vector<bool> entry_active(entries.size(), true);
  std::deque<std::pair<bool, std::size_t>> work;
  for (std::size_t i = 0; i < n_rows; ++i) work.emplace_back(true, i);
  for (std::size_t j = 0; j < n_cols; ++j) work.emplace_back(false, j);
  while (!work.empty()) {
    const auto [is_row, idx] = work.front();
    work.pop_front();
    if (is_row) {
      if (!row_active[idx] || row_sum[idx] > m + leq_slack(m)) continue;
      row_active[idx] = false;
      for (std::size_t k : by_row[idx]) {
        if (!entry_active[k]) continue;
        entry_active[k] = false;
        out.row_share[k] = entries[k].weight;
        col_sum[entries[k].col] -= entries[k].weight;
        work.emplace_back(false, entries[k].col);
      }
    } else {
      if (!col_active[idx] || col_sum[idx] > n + leq_slack(n)) continue;
      col_active[idx] = false;
      for (std::size_t k : by_col[idx]) {
        if (!entry_active[k]) continue;
        entry_active[k] = false;
        out.row_share[k] = 0.0;
        row_sum[entries[k].row] -= entries[k].weight;
        work.emplace_back(true, entries[k].row);
      }
    }
  }

  std::vector<std::size_t> rows, cols;
  for (std::size_t i = 0; i < n_rows; ++i)
    if (row_active[i]) rows.push_back(i);
  for (std::size_t j = 0; j < n_cols; ++j)
    if (col_active[j]) cols.push_back(j);
  if (rows.empty() || cols.empty()) {
    out.feasible = true;
    return out;
  }

  // Exact column sums over the reduced problem.
  std::vector<double> v(n_cols, 0.0);
  double total = 0.0;
  for (std::size_t k = 0; k < entries.size(); ++k)
    if (entry_active[k]) {
      v[entries[k].col] += entries[k].weight;
      total += entries[k].weight;
    }

  double scale = 1.0;
  if (!integral) {
    const double biggest = std::max({total, m * static_cast<double>(rows.size()), 1.0});
    scale = std::min(1e9, std::ldexp(1.0, 60) / biggest);
  }
  auto to_units = [&](double x) { return static_cast<std::int64_t>(std::llround(x * scale)); };

  std::vector<std::size_t> row_node(n_rows), col_node(n_cols);
  const std::size_t source = 0;
  std::size_t next = 1;
  for (std::size_t i : rows) row_node[i] = next++;
  for (std::size_t j : cols) col_node[j] = next++;
  const std::size_t sink = next++;

  MaxFlow net(next);
  for (std::size_t i : rows) net.add_edge(source, row_node[i], to_units(m));
  std::vector<std::optional<std::size_t>> edge_of(entries.size());
  for (std::size_t k = 0; k < entries.size(); ++k)
    if (entry_active[k])
      edge_of[k] = net.add_edge(row_node[entries[k].row], col_node[entries[k].col],
                                to_units(entries[k].weight));
  std::int64_t demand = 0;
  for (std::size_t j : cols) {
    const std::int64_t cap = to_units(v[j] - n);
    demand += cap;
    net.add_edge(col_node[j], sink, cap);
  }
  const std::int64_t flow = net.run(source, sink);

  // rounding noise allowance for real capacities
  const std::int64_t allowance =
      integral ? 0 : static_cast<std::int64_t>(entries.size() + rows.size() + cols.size());
  auto fill_from_flow = [&] {
    for (std::size_t k = 0; k < entries.size(); ++k) {
      if (!edge_of[k]) continue;
      const std::int64_t f = net.flow_on(*edge_of[k]);
      out.row_share[k] = integral ? static_cast<double>(f)
                                  : std::clamp(static_cast<double>(f) / scale, 0.0,
                                               entries[k].weight);
    }
  };

  if (demand - flow <= allowance) {
    out.feasible = true;
    fill_from_flow();
    return out;
  }

  // Violated rectangle: rows and columns on the sink side of the min cut.
  const std::vector<bool> reach = net.source_side(source);
  CutCertificate cert;
  for (std::size_t i : rows)
    if (!reach[row_node[i]]) cert.rows.push_back(i);
  for (std::size_t j : cols)
    if (!reach[col_node[j]]) cert.cols.push_back(j);
  std::vector<bool> in_r(n_rows, false), in_c(n_cols, false);
  for (std::size_t i : cert.rows) in_r[i] = true;
  for (std::size_t j : cert.cols) in_c[j] = true;
  for (const auto& e : entries)
    if (in_r[e.row] && in_c[e.col]) cert.mass += e.weight;
  cert.slack = cert.mass - m * static_cast<double>(cert.rows.size()) -
               n * static_cast<double>(cert.cols.size());
  const double min_slack = integral ? 0.5 : tolerances::certificate_min_slack;
  if (cert.slack > min_slack) {
    shrink_certificate(entries, n_rows, n_cols, m, n, min_slack, cert);
    out.cut = std::move(cert);
    out.feasible = false;
    return out;
  }
  // Within rounding of the boundary: the flow itself is the answer.
  out.feasible = true;
  fill_from_flow();
  return out;
}

}  // namespace

// ---------------------------------------------------------------- decompose

PatternResult decompose(const Pattern& p, std::size_t row_count_bound,
                        std::size_t col_count_bound) {
  std::vector<WeightedEntry> entries;
  entries.reserve(p.size());
  for (const Entry& e : p.entries()) entries.push_back({e.row, e.col, 1.0});
  SplitResult r = split(entries, p.n_rows(), p.n_cols(), static_cast<double>(row_count_bound),
                        static_cast<double>(col_count_bound), true);
  if (!r.feasible) return r.cut;
  std::vector<Entry> row_entries, col_entries;
  for (std::size_t k = 0; k < entries.size(); ++k)
    (r.row_share[k] > 0.5 ? row_entries : col_entries).push_back(p.entries()[k]);
  return PatternDecomposition{Pattern(p.n_rows(), p.n_cols(), std::move(row_entries)),
                              Pattern(p.n_rows(), p.n_cols(), std::move(col_entries)),
                              row_count_bound,
                              col_count_bound,
                              std::sqrt(static_cast<double>(row_count_bound)),
                              std::sqrt(static_cast<double>(col_count_bound))};
}

MatrixResult decompose(const NonnegMatrix& a, double m_bound, double n_bound) {
  if (!(m_bound >= 0.0) || !(n_bound >= 0.0) || !std::isfinite(m_bound) || !std::isfinite(n_bound))
    throw Error(ErrorKind::InvalidInput, "decompose bounds must be finite and >= 0");
  std::vector<WeightedEntry> entries;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j) > 0.0) entries.push_back({i, j, a(i, j) * a(i, j)});
  SplitResult r = split(entries, a.rows(), a.cols(), m_bound, n_bound, false);
  if (!r.feasible) return r.cut;
  std::vector<double> row_vals(a.rows() * a.cols(), 0.0), col_vals(a.rows() * a.cols(), 0.0);
  for (std::size_t k = 0; k < entries.size(); ++k) {
    const auto& e = entries[k];
    const double b = r.row_share[k];
    row_vals[e.row * a.cols() + e.col] = std::sqrt(b);
    col_vals[e.row * a.cols() + e.col] = std::sqrt(std::max(0.0, e.weight - b));
  }
  return MatrixDecomposition{NonnegMatrix(a.rows(), a.cols(), row_vals),
                             NonnegMatrix(a.rows(), a.cols(), col_vals), std::sqrt(m_bound),
                             std::sqrt(n_bound)};
}

// ---------------------------------------------------------------- bounds

OptimalBound optimal_bound(const Pattern& p) {
  if (p.empty())
    return {0, PatternDecomposition{Pattern(p.n_rows(), p.n_cols()),
                                    Pattern(p.n_rows(), p.n_cols()), 0, 0, 0.0, 0.0}};
  const auto rc = p.row_counts();
  const auto cc = p.col_counts();
  std::size_t hi = std::min(*std::max_element(rc.begin(), rc.end()),
                            *std::max_element(cc.begin(), cc.end()));
  std::size_t lo = 0;  // infeasible for a nonempty pattern
  PatternDecomposition best = std::get<PatternDecomposition>(decompose(p, hi, hi));
  while (hi - lo > 1) {
    const std::size_t mid = lo + (hi - lo) / 2;
    PatternResult r = decompose(p, mid, mid);
    if (auto* d = std::get_if<PatternDecomposition>(&r)) {
      hi = mid;
      best = std::move(*d);
    } else {
      lo = mid;
    }
  }
  return {hi, std::move(best)};
}

Interval schur_bound_interval(std::size_t m) {
  if (m == 0) return {0.0, 0.0};
  const double root = std::sqrt(static_cast<double>(m));
  return {std::max(1.0, root / 4.0), 2.0 * root};
}

Interval schur_bound_interval(const Pattern& p) { return schur_bound_interval(optimal_bound(p).m); }

MatrixBound matrix_bound_interval(const NonnegMatrix& a) {
  double max_row = 0.0, max_col = 0.0;
  std::vector<double> col(a.cols(), 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      row += a(i, j) * a(i, j);
      col[j] += a(i, j) * a(i, j);
    }
    max_row = std::max(max_row, row);
  }
  for (double c : col) max_col = std::max(max_col, c);
  double hi = std::min(max_row, max_col);
  if (hi == 0.0) return {0.0, {0.0, 0.0}};
  double lo = 0.0;
  auto feasible = [&](double level) {
    return std::holds_alternative<MatrixDecomposition>(decompose(a, level, level));
  };
  while (std::sqrt(hi) - std::sqrt(lo) > 0.1 * tolerances::bisection * std::max(1.0, std::sqrt(hi))) {
    const double mid = 0.5 * (lo + hi);
    (feasible(mid) ? hi : lo) = mid;
  }
  const double m_value = std::sqrt(hi);
  return {m_value, {m_value / 4.0, 2.0 * m_value}};
}

std::size_t brute_force_best_m(const Pattern& p) {
  const std::size_t nr = p.n_rows();
  const std::size_t nc = p.n_cols();
  if (nr + nc > 14)
    throw Error(ErrorKind::TooLarge, "brute_force_best_m needs n_rows + n_cols <= 14");
  std::vector<unsigned> row_mask(nr, 0u);
  for (const Entry& e : p.entries()) row_mask[e.row] |= 1u << e.col;
  std::size_t best = 0;
  for (unsigned r = 0; r < (1u << nr); ++r) {
    for (unsigned c = 0; c < (1u << nc); ++c) {
      const std::size_t size = static_cast<std::size_t>(std::popcount(r) + std::popcount(c));
      if (size == 0) continue;
      std::size_t count = 0;
      for (std::size_t i = 0; i < nr; ++i)
        if (r & (1u << i)) count += static_cast<std::size_t>(std::popcount(row_mask[i] & c));
      best = std::max(best, (count + size - 1) / size);
    }
  }
  return best;
}

// ---------------------------------------------------------------- validation

bool validate(const Pattern& p, const PatternDecomposition& d) {
  if (d.row_part.n_rows() != p.n_rows() || d.row_part.n_cols() != p.n_cols()) return false;
  if (d.col_part.n_rows() != p.n_rows() || d.col_part.n_cols() != p.n_cols()) return false;
  std::vector<Entry> merged;
  std::merge(d.row_part.entries().begin(), d.row_part.entries().end(),
             d.col_part.entries().begin(), d.col_part.entries().end(), std::back_inserter(merged));
  if (merged != p.entries()) return false;  // also rules out overlap
  for (std::size_t c : d.row_part.row_counts())
    if (c > d.row_count_bound) return false;
  for (std::size_t c : d.col_part.col_counts())
    if (c > d.col_count_bound) return false;
  return true;
}

bool validate(const NonnegMatrix& a, const MatrixDecomposition& d) {
  const double tol = tolerances::decomposition_slack;
  if (d.row_part.rows() != a.rows() || d.row_part.cols() != a.cols()) return false;
  if (d.col_part.rows() != a.rows() || d.col_part.cols() != a.cols()) return false;
  std::vector<double> col_norm(a.cols(), 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    double row_norm = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const double b = d.row_part(i, j), c = d.col_part(i, j), x = a(i, j);
      if (std::abs(b * b + c * c - x * x) > tol * std::max(1.0, x * x)) return false;
      row_norm += b * b;
      col_norm[j] += c * c;
    }
    if (std::sqrt(row_norm) > d.row_bound + tol * std::max(1.0, d.row_bound)) return false;
  }
  for (double c : col_norm)
    if (std::sqrt(c) > d.col_bound + tol * std::max(1.0, d.col_bound)) return false;
  return true;
}

namespace {
template <typename Weight>
bool validate_cut(std::size_t n_rows, std::size_t n_cols, Weight weight, double m, double n,
                  const CutCertificate& c, double min_slack) {
  std::vector<bool> in_r(n_rows, false), in_c(n_cols, false);
  for (std::size_t i : c.rows) {
    if (i >= n_rows || in_r[i]) return false;
    in_r[i] = true;
  }
  for (std::size_t j : c.cols) {
    if (j >= n_cols || in_c[j]) return false;
    in_c[j] = true;
  }
  double mass = 0.0;
  for (std::size_t i : c.rows)
    for (std::size_t j : c.cols) mass += weight(i, j);
  const double slack =
      mass - m * static_cast<double>(c.rows.size()) - n * static_cast<double>(c.cols.size());
  const double tol = 1e-9 * std::max(1.0, mass);
  return std::abs(mass - c.mass) <= tol && std::abs(slack - c.slack) <= tol && slack > min_slack;
}
}  // namespace

bool validate(const Pattern& p, std::size_t m, std::size_t n, const CutCertificate& c) {
  return validate_cut(
      p.n_rows(), p.n_cols(),
      [&](std::size_t i, std::size_t j) { return p.contains(i, j) ? 1.0 : 0.0; },
      static_cast<double>(m), static_cast<double>(n), c, 0.5);
}

bool validate(const NonnegMatrix& a, double m, double n, const CutCertificate& c) {
  return validate_cut(
      a.rows(), a.cols(), [&](std::size_t i, std::size_t j) { return a(i, j) * a(i, j); }, m, n,
      c, tolerances::certificate_min_slack);
}

}  // namespace schurnorm::flow
