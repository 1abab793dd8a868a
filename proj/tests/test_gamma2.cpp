#include "doctest.h"
#include "helpers.hpp"

#include <numbers>

#include "schurnorm/gamma2.hpp"
#include "schurnorm/symmetry.hpp"

using namespace schurnorm;
using namespace schurnorm::gamma2;
using testing::real_matrix;

namespace {

constexpr double kTol = 1e-6;

void check_report(const DenseMatrix& s, const NormReport& r) {
  CHECK(haagerup_reproduction_error(s, r.upper) <= tolerances::haagerup_reproduction);
  CHECK(haagerup_bound(r.upper) - r.value <= r.tol);
  CHECK(r.value - witness_bound(s, r.lower) <= r.tol);
  CHECK(witness_bound(s, r.lower) == doctest::Approx(r.lower.bound).epsilon(1e-12));
}

DenseMatrix diagonal_unitary(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
  DenseMatrix d(n, n);
  for (std::size_t k = 0; k < n; ++k) d(k, k) = std::polar(1.0, phase(rng));
  return d;
}

DenseMatrix permutation(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::size_t> p(n);
  for (std::size_t k = 0; k < n; ++k) p[k] = k;
  std::shuffle(p.begin(), p.end(), rng);
  return symmetry::permutation_matrix(p);
}

}  // namespace

TEST_SUITE("gamma2") {

TEST_CASE("schur_norm examples") {
  SUBCASE("[[4,3],[3,1]]") {
    const DenseMatrix s = real_matrix(2, 2, {4, 3, 3, 1});
    const NormReport r = schur_norm(s, kTol);
    CHECK(r.value == doctest::Approx(4.0).epsilon(1e-8));
    check_report(s, r);
  }
  SUBCASE("identity") {
    const NormReport r = schur_norm(DenseMatrix::identity(5), kTol);
    CHECK(r.value == doctest::Approx(1.0).epsilon(1e-8));
  }
  SUBCASE("ones minus 2I and ones minus I") {
    const DenseMatrix a = DenseMatrix::ones(4, 4);
    CHECK(schur_norm(a - cplx(2.0) * DenseMatrix::identity(4)).value == doctest::Approx(2.0).epsilon(1e-8));
    CHECK(schur_norm(a - DenseMatrix::identity(4)).value == doctest::Approx(1.5).epsilon(1e-8));
  }
  SUBCASE("zero matrix") {
    const NormReport r = schur_norm(DenseMatrix(2, 3));
    CHECK(r.value == 0.0);
    CHECK(haagerup_bound(r.upper) == 0.0);
  }
  SUBCASE("rectangular") {
    // a single row: the multiplier norm is the largest modulus
    const DenseMatrix s = real_matrix(1, 3, {1, -2, 0.5});
    CHECK(schur_norm(s).value == doctest::Approx(2.0).epsilon(1e-8));
    std::mt19937_64 rng(2);
    const DenseMatrix t = testing::random_matrix(rng, 3, 6);
    const NormReport r = schur_norm(t);
    check_report(t, r);
  }
}

TEST_CASE("schur_norm input validation") {
  CHECK_THROWS_AS(schur_norm(DenseMatrix::identity(2), 1e-9), Error);
  CHECK_THROWS_AS(schur_norm(DenseMatrix::identity(129)), Error);
  DenseMatrix bad = DenseMatrix::identity(2);
  bad(0, 1) = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(schur_norm(bad), Error);
}

TEST_CASE("extract_haagerup") {
  SUBCASE("identity at level 1") {
    const HaagerupVectors h = extract_haagerup(DenseMatrix::identity(2), 1.0);
    CHECK(haagerup_reproduction_error(DenseMatrix::identity(2), h) < 1e-9);
    CHECK(h.bound == doctest::Approx(1.0).epsilon(1e-8));
  }
  SUBCASE("[[4,3],[3,1]] at level 4 and the explicit choice") {
    const DenseMatrix s = real_matrix(2, 2, {4, 3, 3, 1});
    const HaagerupVectors h = extract_haagerup(s, 4.0);
    CHECK(haagerup_reproduction_error(s, h) < 1e-6);
    CHECK(h.bound <= 4.0 + kTol);

    const double r5 = std::sqrt(5.0);
    HaagerupVectors manual;
    manual.x = {{2.0, 0.0}, {1.5, r5 / 2}};
    manual.y = {{2.0, 0.0}, {1.5, -r5 / 2}};
    CHECK(haagerup_reproduction_error(s, manual) < 1e-12);
    CHECK(haagerup_bound(manual) == doctest::Approx(4.0));
  }
  SUBCASE("zero matrix") {
    const HaagerupVectors h = extract_haagerup(DenseMatrix(2, 2), 0.0);
    CHECK(h.bound == 0.0);
  }
  SUBCASE("infeasible level") {
    CHECK_THROWS_AS(extract_haagerup(real_matrix(2, 2, {4, 3, 3, 1}), 3.5), Error);
  }
}

TEST_CASE("upper_bound_polar") {
  CHECK(upper_bound_polar(real_matrix(2, 2, {4, 3, 3, 1})) == doctest::Approx(2 * std::sqrt(5.0)));
  std::mt19937_64 rng(4);
  const DenseMatrix u = testing::random_unitary(rng, 4);
  CHECK(upper_bound_polar(u) == doctest::Approx(1.0));
  const DenseMatrix a = testing::random_matrix(rng, 4, 4);
  const DenseMatrix p = a * a.adjoint();
  double maxdiag = 0.0;
  for (std::size_t k = 0; k < 4; ++k) maxdiag = std::max(maxdiag, p(k, k).real());
  CHECK(upper_bound_polar(p) == doctest::Approx(maxdiag).epsilon(1e-9));
}

TEST_CASE("lower_bound_witness") {
  const DenseMatrix s = real_matrix(2, 2, {-3, 1, 2, 5});
  DenseMatrix e11(2, 2);
  e11(0, 0) = 1.0;
  CHECK(lower_bound_witness(s, e11).bound == doctest::Approx(3.0));
  CHECK_THROWS_AS(lower_bound_witness(s, DenseMatrix(2, 2)), Error);
  CHECK_THROWS_AS(lower_bound_witness(s, DenseMatrix(2, 3)), Error);

  const DenseMatrix a = DenseMatrix::ones(4, 4);
  const DenseMatrix i4 = DenseMatrix::identity(4);
  const DenseMatrix s2 = a - cplx(2.0) * i4;
  CHECK(lower_bound_witness(s2, s2).bound == doctest::Approx(2.0));

  for (std::size_t n = 2; n <= 8; ++n) {
    const DenseMatrix sg = symmetry::sign_matrix(n);
    const double trace_norm = trace(polar_absolute(sg).abs).real() / static_cast<double>(n);
    const NormReport r = schur_norm(sg);
    CHECK(r.lower.bound == doctest::Approx(trace_norm).epsilon(1e-6));
    CHECK(r.value == doctest::Approx(trace_norm).epsilon(1e-6));
  }
}

TEST_CASE("sandwich on random matrices") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 7;
    const DenseMatrix s = testing::random_matrix(rng, n, n, trial % 2 == 0);
    const NormReport r = schur_norm(s, kTol);
    check_report(s, r);
    CHECK(r.value <= upper_bound_polar(s) + kTol);
    CHECK(r.value >= max_abs_entry(s) - kTol);
    CHECK(r.value <= operator_norm(s) + kTol);
  }
}

TEST_CASE("invariances") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 8; ++trial) {
    const std::size_t n = 2 + trial % 5;
    const DenseMatrix s = testing::random_matrix(rng, n, n);
    const double base = schur_norm(s).value;

    const cplx c(std::normal_distribution<double>()(rng), std::normal_distribution<double>()(rng));
    CHECK(schur_norm(c * s).value == doctest::Approx(std::abs(c) * base).epsilon(1e-6));
    CHECK(schur_norm(permutation(rng, n) * s * permutation(rng, n)).value == doctest::Approx(base).epsilon(1e-6));
    CHECK(schur_norm(diagonal_unitary(rng, n) * s * diagonal_unitary(rng, n)).value ==
          doctest::Approx(base).epsilon(1e-6));
    CHECK(schur_norm(s.transpose()).value == doctest::Approx(base).epsilon(1e-6));
  }
}

TEST_CASE("positive semidefinite inputs give the largest diagonal entry") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 2 + trial % 6;
    const DenseMatrix a = testing::random_matrix(rng, n, trial % 3 + 1, trial % 2 == 1);
    const DenseMatrix p = a * a.adjoint();
    double maxdiag = 0.0;
    for (std::size_t k = 0; k < n; ++k) maxdiag = std::max(maxdiag, p(k, k).real());
    CHECK(schur_norm(p).value == doctest::Approx(maxdiag).epsilon(1e-7));
  }
}

TEST_CASE("bignorm_bounds") {
  SUBCASE("all ones 9x9") {
    const NonnegMatrix a(DenseMatrix::ones(9, 9));
    const BigNormBounds b = bignorm_bounds(a);
    CHECK(b.alpha == doctest::Approx(9.0));
    CHECK(b.alpha_lower == doctest::Approx(0.5 * std::sqrt(3.0)));
    CHECK(b.z_witness == doctest::Approx(std::sqrt(4.5)));
  }
  SUBCASE("single entry") {
    const BigNormBounds b = bignorm_bounds(NonnegMatrix(DenseMatrix::ones(1, 1)));
    CHECK(b.alpha == doctest::Approx(1.0));
    CHECK(b.alpha_lower == doctest::Approx(1.0 / (2.0 * std::sqrt(3.0))));
    CHECK(b.z_witness == doctest::Approx(1.0 / std::sqrt(2.0)));
  }
  SUBCASE("zero matrix") {
    try {
      bignorm_bounds(NonnegMatrix(DenseMatrix(3, 3)));
      FAIL("expected EmptyMatrix");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::EmptyMatrix);
    }
  }
  SUBCASE("z witness dominates sqrt(alpha/2) on random matrices") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    int failures = 0;
    for (int trial = 0; trial < 500; ++trial) {
      const std::size_t m = 1 + trial % 12;
      std::vector<double> values(m * m);
      const double density = unit(rng);
      for (double& v : values) v = unit(rng) < density ? std::exp(3.0 * unit(rng)) : 0.0;
      values[trial % (m * m)] = 1.0;
      const BigNormBounds b = bignorm_bounds(NonnegMatrix(m, m, values));
      if (b.z_witness < std::sqrt(b.alpha / 2.0) - 1e-9) ++failures;
      if (b.alpha_lower > b.z_witness) ++failures;
    }
    CHECK(failures == 0);
  }
}

}  // TEST_SUITE
