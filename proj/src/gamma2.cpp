#include "schurnorm/gamma2.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "schurnorm/detail/jacobi.hpp"

namespace schurnorm::gamma2 {

namespace {

// ------------------------------------------------------------ real dense kernels

struct RMat {
  std::size_t n = 0;
  std::vector<double> a;
  explicit RMat(std::size_t dim = 0, double diag = 0.0) : n(dim), a(dim * dim, 0.0) {
    for (std::size_t i = 0; i < n; ++i) a[i * n + i] = diag;
  }
  double& operator()(std::size_t i, std::size_t j) { return a[i * n + j]; }
  double operator()(std::size_t i, std::size_t j) const { return a[i * n + j]; }
};

RMat mul(const RMat& x, const RMat& y) {
  RMat out(x.n);
  const std::size_t n = x.n;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const double xik = x(i, k);
      if (xik == 0.0) continue;
      const double* yr = &y.a[k * n];
      double* orow = &out.a[i * n];
      for (std::size_t j = 0; j < n; ++j) orow[j] += xik * yr[j];
    }
  return out;
}

void symmetrize(RMat& x) {
  for (std::size_t i = 0; i < x.n; ++i)
    for (std::size_t j = i + 1; j < x.n; ++j) {
      const double avg = 0.5 * (x(i, j) + x(j, i));
      x(i, j) = avg;
      x(j, i) = avg;
    }
}

double inner(const RMat& x, const RMat& y) {
  double s = 0.0;
  for (std::size_t k = 0; k < x.a.size(); ++k) s += x.a[k] * y.a[k];
  return s;
}

// Lower Cholesky factor; false if not positive definite.
bool cholesky(const RMat& x, RMat& l) {
  const std::size_t n = x.n;
  l = RMat(n);
  for (std::size_t j = 0; j < n; ++j) {
    double d = x(j, j);
    for (std::size_t k = 0; k < j; ++k) d -= l(j, k) * l(j, k);
    if (!(d > 0.0)) return false;
    const double ljj = std::sqrt(d);
    l(j, j) = ljj;
    for (std::size_t i = j + 1; i < n; ++i) {
      double s = x(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
      l(i, j) = s / ljj;
    }
  }
  return true;
}

// In-place solve L w = b for each column of b.
void forward_solve_columns(const RMat& l, RMat& b) {
  const std::size_t n = l.n;
  for (std::size_t col = 0; col < n; ++col)
    for (std::size_t i = 0; i < n; ++i) {
      double s = b(i, col);
      for (std::size_t k = 0; k < i; ++k) s -= l(i, k) * b(k, col);
      b(i, col) = s / l(i, i);
    }
}

RMat transpose(const RMat& x) {
  RMat t(x.n);
  for (std::size_t i = 0; i < x.n; ++i)
    for (std::size_t j = 0; j < x.n; ++j) t(j, i) = x(i, j);
  return t;
}

RMat inverse_from_cholesky(const RMat& l) {
  RMat linv(l.n, 1.0);
  forward_solve_columns(l, linv);
  return mul(transpose(linv), linv);
}

// Largest alpha with X + alpha dX still PSD (X = L L^T), capped at cap.
double max_step(const RMat& l, const RMat& dx, double cap) {
  RMat w = dx;
  forward_solve_columns(l, w);
  w = transpose(w);
  forward_solve_columns(l, w);
  symmetrize(w);
  std::vector<double> evals, evecs;
  detail::jacobi_eigen(w.a, w.n, evals, evecs, tolerances::jacobi_max_sweeps);
  const double lmin = evals.empty() ? 0.0 : evals.back();
  return lmin < 0.0 ? std::min(cap, -1.0 / lmin) : cap;
}

// Cholesky factor of the dense SPD system matrix, regularizing if needed.
RMat spd_factor(const std::vector<double>& m, std::size_t n) {
  double maxdiag = 0.0;
  for (std::size_t i = 0; i < n; ++i) maxdiag = std::max(maxdiag, m[i * n + i]);
  RMat mm(n);
  mm.a = m;
  RMat l;
  double reg = 0.0;
  while (!cholesky(mm, l)) {
    reg = reg == 0.0 ? 1e-14 * std::max(1.0, maxdiag) : reg * 10.0;
    if (reg > 1e-2 * std::max(1.0, maxdiag))
      throw Error(ErrorKind::NoConvergence, "Schur complement system is singular");
    mm.a = m;
    for (std::size_t i = 0; i < n; ++i) mm(i, i) += reg;
  }
  return l;
}

std::vector<double> spd_solve(const RMat& l, std::vector<double> rhs) {
  const std::size_t n = l.n;
  for (std::size_t i = 0; i < n; ++i) {
    double s = rhs[i];
    for (std::size_t k = 0; k < i; ++k) s -= l(i, k) * rhs[k];
    rhs[i] = s / l(i, i);
  }
  for (std::size_t i = n; i-- > 0;) {
    double s = rhs[i];
    for (std::size_t k = i + 1; k < n; ++k) s -= l(k, i) * rhs[k];
    rhs[i] = s / l(i, i);
  }
  return rhs;
}

// ------------------------------------------------------------ the LMI

struct Triplet {
  std::size_t i, j;
  double v;
};

enum class VarKind { Level, Real, Imag };

struct Variable {
  VarKind kind;
  std::size_t p = 0, q = 0;  // block-local pair, in global block coordinates
  std::vector<Triplet> nz;
};

// Z(y) = F0 + sum_k y_k F_k over real symmetric d x d matrices, where Z is
// the (possibly realified) block matrix [[tI + A_off, S], [S^*, tI + B_off]].
struct Lmi {
  std::size_t rows = 0, cols = 0, block = 0, d = 0;
  bool complex_mode = false;
  RMat f0;
  std::vector<Variable> vars;

  void place(std::vector<Triplet>& nz, std::size_t i, std::size_t j, cplx z) const {
    if (z.real() != 0.0) {
      nz.push_back({i, j, z.real()});
      if (complex_mode) nz.push_back({i + block, j + block, z.real()});
    }
    if (complex_mode && z.imag() != 0.0) {
      nz.push_back({i, j + block, -z.imag()});
      nz.push_back({i + block, j, z.imag()});
    }
  }
};

Lmi build_lmi(const DenseMatrix& s) {
  Lmi lmi;
  lmi.rows = s.rows();
  lmi.cols = s.cols();
  lmi.block = lmi.rows + lmi.cols;
  lmi.complex_mode = !s.is_real();
  lmi.d = lmi.complex_mode ? 2 * lmi.block : lmi.block;
  lmi.f0 = RMat(lmi.d);

  std::vector<Triplet> f0;
  for (std::size_t i = 0; i < lmi.rows; ++i)
    for (std::size_t j = 0; j < lmi.cols; ++j) {
      lmi.place(f0, i, lmi.rows + j, s(i, j));
      lmi.place(f0, lmi.rows + j, i, std::conj(s(i, j)));
    }
  for (const Triplet& t : f0) lmi.f0(t.i, t.j) += t.v;

  Variable level{VarKind::Level, 0, 0, {}};
  for (std::size_t i = 0; i < lmi.d; ++i) level.nz.push_back({i, i, 1.0});
  lmi.vars.push_back(std::move(level));

  auto add_pairs = [&](std::size_t begin, std::size_t end) {
    for (std::size_t p = begin; p < end; ++p)
      for (std::size_t q = p + 1; q < end; ++q) {
        Variable re{VarKind::Real, p, q, {}};
        lmi.place(re.nz, p, q, 1.0);
        lmi.place(re.nz, q, p, 1.0);
        lmi.vars.push_back(std::move(re));
        if (lmi.complex_mode) {
          Variable im{VarKind::Imag, p, q, {}};
          lmi.place(im.nz, p, q, cplx{0.0, 1.0});
          lmi.place(im.nz, q, p, cplx{0.0, -1.0});
          lmi.vars.push_back(std::move(im));
        }
      }
  };
  add_pairs(0, lmi.rows);
  add_pairs(lmi.rows, lmi.block);
  return lmi;
}

double apply_form(const std::vector<Triplet>& nz, const RMat& w) {
  double s = 0.0;
  for (const Triplet& t : nz) s += t.v * w(t.i, t.j);
  return s;
}

RMat slack_matrix(const Lmi& lmi, const std::vector<double>& y) {
  RMat z = lmi.f0;
  for (std::size_t k = 0; k < lmi.vars.size(); ++k)
    for (const Triplet& t : lmi.vars[k].nz) z(t.i, t.j) += y[k] * t.v;
  return z;
}

// Complex Hermitian block matrix from a realified symmetric one.
DenseMatrix complexify(const Lmi& lmi, const RMat& x) {
  const std::size_t n = lmi.block;
  DenseMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (lmi.complex_mode) {
        const double re = 0.5 * (x(i, j) + x(i + n, j + n));
        const double im = 0.5 * (x(i + n, j) - x(i, j + n));
        out(i, j) = cplx{re, im};
      } else {
        out(i, j) = x(i, j);
      }
    }
  return out;
}

// ------------------------------------------------------------ complex factorization

// Semidefinite Cholesky G = L L^*; false if G is not (numerically) PSD.
bool psd_cholesky(const DenseMatrix& g, DenseMatrix& l) {
  const std::size_t n = g.rows();
  const double scale = std::max(1.0, max_abs_entry(g));
  const double eps = 1e-12 * scale;
  l = DenseMatrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    double d = g(j, j).real();
    for (std::size_t k = 0; k < j; ++k) d -= std::norm(l(j, k));
    if (d > eps) {
      const double ljj = std::sqrt(d);
      l(j, j) = ljj;
      for (std::size_t i = j + 1; i < n; ++i) {
        cplx s = g(i, j);
        for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * std::conj(l(j, k));
        l(i, j) = s / ljj;
      }
    } else {
      if (d < -eps) return false;
      for (std::size_t i = j + 1; i < n; ++i) {
        cplx s = g(i, j);
        for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * std::conj(l(j, k));
        if (std::abs(s) > 1e-9 * scale) return false;
      }
    }
  }
  return true;
}

double vec_norm(const std::vector<cplx>& x) {
  double s = 0.0;
  for (cplx z : x) s += std::norm(z);
  return std::sqrt(s);
}

void check_dims(const DenseMatrix& s) {
  if (s.rows() == 0 || s.cols() == 0) throw Error(ErrorKind::InvalidInput, "empty matrix");
  if (s.rows() > 128 || s.cols() > 128)
    throw Error(ErrorKind::TooLarge, "schur_norm supports dimensions up to 128");
  if (!s.all_finite()) throw Error(ErrorKind::InvalidInput, "matrix has non-finite entries");
}

}  // namespace

// ------------------------------------------------------------ interior point

Completion solve_completion(const DenseMatrix& s, const SolverOptions& opts) {
  check_dims(s);
  const double scale = max_abs_entry(s);
  const std::size_t nblock = s.rows() + s.cols();
  if (scale == 0.0) {
    Completion c{0.0, DenseMatrix(nblock, nblock), DenseMatrix(nblock, nblock), 0.0};
    for (std::size_t i = 0; i < nblock; ++i) c.dual(i, i) = 1.0 / static_cast<double>(nblock);
    return c;
  }
  const Lmi lmi = build_lmi(s * cplx{1.0 / scale});
  const std::size_t d = lmi.d;
  const std::size_t m = lmi.vars.size();
  const double dd = static_cast<double>(d);

  std::vector<double> cost(m, 0.0);
  cost[0] = 1.0;
  std::vector<double> y(m, 0.0);
  y[0] = 1.0 + std::sqrt(inner(lmi.f0, lmi.f0));
  RMat x(d, 1.0 / dd);
  RMat z = slack_matrix(lmi, y);

  // F_k X F_l Zinv traces, via sparse triplets.
  auto schur_matrix = [&](const RMat& xm, const RMat& zi) {
    std::vector<double> mat(m * m, 0.0);
    for (std::size_t k = 0; k < m; ++k)
      for (std::size_t l = k; l < m; ++l) {
        double acc = 0.0;
        for (const Triplet& a : lmi.vars[k].nz)
          for (const Triplet& b : lmi.vars[l].nz) acc += a.v * b.v * xm(a.j, b.i) * zi(b.j, a.i);
        mat[k * m + l] = acc;
        mat[l * m + k] = acc;
      }
    return mat;
  };

  bool converged = false;
  RMat prev_x = x, prev_z = z;
  std::vector<double> prev_y = y;
  double prev_gap = std::numeric_limits<double>::infinity();
  double pobj = inner(lmi.f0, x), dobj = -y[0];
  for (int iter = 0; iter < opts.max_iterations; ++iter) {
    RMat lz, lx;
    const bool interior = cholesky(z, lz) && cholesky(x, lx);
    std::vector<double> rp(m);
    for (std::size_t k = 0; k < m; ++k) rp[k] = cost[k] - apply_form(lmi.vars[k].nz, x);
    RMat rd = slack_matrix(lmi, y);
    for (std::size_t k = 0; k < rd.a.size(); ++k) rd.a[k] -= z.a[k];

    pobj = inner(lmi.f0, x);
    dobj = -y[0];
    double rp_norm = 0.0;
    for (double r : rp) rp_norm += r * r;
    rp_norm = std::sqrt(rp_norm);
    const double rd_norm = std::sqrt(inner(rd, rd));
    const double gap = inner(x, z);
    const double gap_scale = std::max(1.0, std::abs(dobj));
    if (gap <= opts.gap_tol * gap_scale && rp_norm <= 1e-10 && rd_norm <= 1e-10) {
      converged = true;
      break;
    }
    if (!interior) {
      // Rounding pushed an iterate to the boundary; accept it if already close.
      if (prev_gap <= 1e-8 * gap_scale && rp_norm <= 1e-8 && rd_norm <= 1e-8) {
        x = prev_x;
        z = prev_z;
        y = prev_y;
        pobj = inner(lmi.f0, x);
        dobj = -y[0];
        converged = true;
        break;
      }
      throw Error(ErrorKind::NoConvergence, "iterate left the PSD cone");
    }
    prev_x = x;
    prev_z = z;
    prev_y = y;
    prev_gap = gap;
    const RMat zi = inverse_from_cholesky(lz);
    const double mu = inner(x, z) / dd;

    const RMat mat_factor = spd_factor(schur_matrix(x, zi), m);
    const RMat xrdzi = mul(mul(x, rd), zi);

    auto direction = [&](const RMat& rc, std::vector<double>& dy, RMat& dx, RMat& dz) {
      RMat h = rc;
      for (std::size_t k = 0; k < h.a.size(); ++k) h.a[k] -= xrdzi.a[k];
      std::vector<double> rhs(m);
      for (std::size_t k = 0; k < m; ++k) rhs[k] = apply_form(lmi.vars[k].nz, h) - rp[k];
      dy = spd_solve(mat_factor, rhs);
      dz = rd;
      for (std::size_t k = 0; k < m; ++k)
        for (const Triplet& t : lmi.vars[k].nz) dz(t.i, t.j) += dy[k] * t.v;
      dx = mul(mul(x, dz), zi);
      for (std::size_t k = 0; k < dx.a.size(); ++k) dx.a[k] = rc.a[k] - dx.a[k];
      symmetrize(dx);
    };

    // predictor
    RMat rc_aff = x;
    for (double& v : rc_aff.a) v = -v;
    std::vector<double> dy_a;
    RMat dx_a, dz_a;
    direction(rc_aff, dy_a, dx_a, dz_a);
    const double ap_a = max_step(lx, dx_a, 1.0);
    const double ad_a = max_step(lz, dz_a, 1.0);
    RMat xa = x, za = z;
    for (std::size_t k = 0; k < xa.a.size(); ++k) {
      xa.a[k] += ap_a * dx_a.a[k];
      za.a[k] += ad_a * dz_a.a[k];
    }
    const double mu_aff = inner(xa, za) / dd;
    const double sigma = std::pow(std::clamp(mu_aff / mu, 0.0, 1.0), 3.0);

    // corrector
    RMat rc = mul(mul(dx_a, dz_a), zi);
    for (std::size_t k = 0; k < rc.a.size(); ++k) rc.a[k] = sigma * mu * zi.a[k] - x.a[k] - rc.a[k];
    std::vector<double> dy;
    RMat dx, dz;
    direction(rc, dy, dx, dz);
    const double ap = std::min(1.0, 0.98 * max_step(lx, dx, 1e30));
    const double ad = std::min(1.0, 0.98 * max_step(lz, dz, 1e30));
    for (std::size_t k = 0; k < x.a.size(); ++k) {
      x.a[k] += ap * dx.a[k];
      z.a[k] += ad * dz.a[k];
    }
    for (std::size_t k = 0; k < m; ++k) y[k] += ad * dy[k];
  }
  if (!converged) {
    std::ostringstream msg;
    msg << "interior-point iteration stalled; bracket [" << -pobj * scale << ", " << -dobj * scale
        << "]";
    throw Error(ErrorKind::NoConvergence, msg.str());
  }

  Completion out;
  out.level = y[0] * scale;
  out.block = complexify(lmi, slack_matrix(lmi, y)) * cplx{scale};
  // exact off-diagonal blocks and level diagonal
  for (std::size_t i = 0; i < s.rows(); ++i)
    for (std::size_t j = 0; j < s.cols(); ++j) {
      out.block(i, s.rows() + j) = s(i, j);
      out.block(s.rows() + j, i) = std::conj(s(i, j));
    }
  for (std::size_t i = 0; i < nblock; ++i) out.block(i, i) = out.level;
  out.dual = complexify(lmi, x);
  if (lmi.complex_mode) out.dual *= cplx{2.0};
  out.dual_value = -pobj * scale;
  return out;
}

// ------------------------------------------------------------ certificates

HaagerupVectors haagerup_from_block(const DenseMatrix& block, std::size_t n_rows) {
  const std::size_t n = block.rows();
  DenseMatrix l;
  DenseMatrix g = block;
  double shift = 0.0;
  const double scale = std::max(1.0, max_abs_entry(block));
  while (!psd_cholesky(g, l)) {
    shift = shift == 0.0 ? 1e-14 * scale : shift * 4.0;
    if (shift > 1e-3 * scale) throw Error(ErrorKind::NotFeasible, "block matrix is not PSD");
    g = block;
    for (std::size_t i = 0; i < n; ++i) g(i, i) += shift;
  }
  HaagerupVectors h;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<cplx> v(n);
    for (std::size_t k = 0; k < n; ++k) v[k] = std::conj(l(i, k));
    (i < n_rows ? h.x : h.y).push_back(std::move(v));
  }
  h.bound = haagerup_bound(h);
  return h;
}

HaagerupVectors extract_haagerup(const DenseMatrix& s, double level) {
  const Completion c = solve_completion(s);
  if (c.level > level + 1e-9 * std::max(1.0, level))
    throw Error(ErrorKind::NotFeasible, "no PSD completion at the requested level");
  DenseMatrix block = c.block;
  for (std::size_t i = 0; i < block.rows(); ++i) block(i, i) = std::max(level, c.level);
  return haagerup_from_block(block, s.rows());
}

double haagerup_bound(const HaagerupVectors& h) {
  double mx = 0.0, my = 0.0;
  for (const auto& v : h.x) mx = std::max(mx, vec_norm(v));
  for (const auto& v : h.y) my = std::max(my, vec_norm(v));
  return mx * my;
}

double haagerup_reproduction_error(const DenseMatrix& s, const HaagerupVectors& h) {
  if (h.x.size() != s.rows() || h.y.size() != s.cols()) return INFINITY;
  double err = 0.0;
  for (std::size_t i = 0; i < s.rows(); ++i)
    for (std::size_t j = 0; j < s.cols(); ++j) {
      if (h.x[i].size() != h.y[j].size()) return INFINITY;
      cplx dot{};
      for (std::size_t k = 0; k < h.x[i].size(); ++k) dot += std::conj(h.x[i][k]) * h.y[j][k];
      err = std::max(err, std::abs(dot - s(i, j)));
    }
  return err;
}

double witness_bound(const DenseMatrix& s, const Witness& w) {
  return operator_norm(schur_product(s, w.test)) / operator_norm(w.test);
}

Witness lower_bound_witness(const DenseMatrix& s, const DenseMatrix& b) {
  if (s.rows() != b.rows() || s.cols() != b.cols())
    throw Error(ErrorKind::ShapeMismatch, "witness must have the shape of S");
  const double nb = operator_norm(b);
  if (nb == 0.0) throw Error(ErrorKind::ZeroTest, "witness test matrix is zero");
  return Witness{b, operator_norm(schur_product(s, b)) / nb};
}

Witness weighted_witness(const DenseMatrix& s, std::vector<double> u, std::vector<double> v,
                         int refine_steps) {
  const std::size_t r = s.rows(), c = s.cols(), n = std::max(r, c);
  auto normalize = [](std::vector<double>& w) {
    double t = 0.0;
    for (double& x : w) {
      x = std::abs(x);
      t += x * x;
    }
    if (t == 0.0) {
      for (double& x : w) x = 1.0;
      t = static_cast<double>(w.size());
    }
    for (double& x : w) x /= std::sqrt(t);
  };
  DenseMatrix e11(r, c);
  e11(0, 0) = 1.0;
  Witness best = lower_bound_witness(s, e11);
  for (int step = 0; step <= refine_steps; ++step) {
    normalize(u);
    normalize(v);
    DenseMatrix weighted(n, n);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) weighted(i, j) = u[i] * s(i, j) * v[j];
    const DenseMatrix w = polar_absolute(weighted).isometry;
    DenseMatrix b(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) b(i, j) = std::conj(w(i, j));
    if (max_abs_entry(b) == 0.0) break;
    Witness cand = lower_bound_witness(s, b);
    const bool improved = cand.bound > best.bound * (1.0 + 1e-13);
    if (cand.bound > best.bound) best = std::move(cand);
    if (!improved && step > 0) break;

    // top singular pair of S o B gives the next weights
    const DenseMatrix sb = schur_product(s, best.test);
    const EigenDecomposition eig = hermitian_eig(sb.adjoint() * sb);
    std::vector<cplx> right(c), left(r, cplx{});
    for (std::size_t j = 0; j < c; ++j) right[j] = eig.eigenvectors(j, 0);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) left[i] += sb(i, j) * right[j];
    for (std::size_t i = 0; i < r; ++i) u[i] = std::abs(left[i]);
    for (std::size_t j = 0; j < c; ++j) v[j] = std::abs(right[j]);
  }
  return best;
}

NormReport schur_norm(const DenseMatrix& s, double tol, const SolverOptions& opts) {
  if (!(tol >= tolerances::min_norm_tol))
    throw Error(ErrorKind::InvalidInput, "schur_norm tolerance must be >= 1e-8");
  const Completion comp = solve_completion(s, opts);

  NormReport rep;
  rep.tol = tol;
  rep.value = comp.level;
  rep.upper = haagerup_from_block(comp.block, s.rows());

  std::vector<double> u(s.rows()), v(s.cols());
  for (std::size_t i = 0; i < s.rows(); ++i) u[i] = std::sqrt(std::max(0.0, comp.dual(i, i).real()));
  for (std::size_t j = 0; j < s.cols(); ++j)
    v[j] = std::sqrt(std::max(0.0, comp.dual(s.rows() + j, s.rows() + j).real()));
  rep.lower = weighted_witness(s, u, v);

  if (rep.upper.bound - rep.value > tol || rep.value - rep.lower.bound > tol) {
    std::ostringstream msg;
    msg << "certificates do not bracket the value within tol; bracket [" << rep.lower.bound
        << ", " << rep.upper.bound << "]";
    throw Error(ErrorKind::NoConvergence, msg.str());
  }
  return rep;
}

double upper_bound_polar(const DenseMatrix& t) {
  if (!t.square()) throw Error(ErrorKind::ShapeMismatch, "upper_bound_polar needs a square matrix");
  const DenseMatrix abs_t = polar_absolute(t).abs;
  const DenseMatrix abs_ts = polar_absolute(t.adjoint()).abs;
  double dt = 0.0, dts = 0.0;
  for (std::size_t i = 0; i < t.rows(); ++i) {
    dt = std::max(dt, std::abs(abs_t(i, i)));
    dts = std::max(dts, std::abs(abs_ts(i, i)));
  }
  return std::sqrt(dt) * std::sqrt(dts);
}

BigNormBounds bignorm_bounds(const NonnegMatrix& a) {
  if (a.rows() != a.cols()) throw Error(ErrorKind::ShapeMismatch, "bignorm_bounds needs a square matrix");
  const std::size_t m = a.rows();
  std::vector<double> r(m, 0.0), c(m, 0.0);
  double total = 0.0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const double sq = a(i, j) * a(i, j);
      r[i] += sq;
      c[j] += sq;
      total += sq;
    }
  if (total == 0.0) throw Error(ErrorKind::EmptyMatrix, "bignorm_bounds needs a nonzero matrix");
  BigNormBounds out;
  out.alpha = total / static_cast<double>(m);
  out.alpha_lower = 0.5 * std::sqrt(out.alpha / 3.0);
  double z = 0.0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (a(i, j) == 0.0) continue;
      const double zij = a(i, j) * a(i, j) / std::sqrt(r[i] + c[j]);
      z += std::sqrt(r[i] / total) * zij * std::sqrt(c[j] / total);
    }
  out.z_witness = z;
  return out;
}

}  // namespace schurnorm::gamma2
