#include "doctest.h"
#include "helpers.hpp"

#include <cmath>
#include <numbers>

#include "schurnorm/gamma2.hpp"
#include "schurnorm/graphs.hpp"
#include "schurnorm/symmetry.hpp"

using namespace schurnorm;
using namespace schurnorm::graphs;

namespace {

std::size_t degree_of(const DenseMatrix& a, std::size_t row) {
  std::size_t d = 0;
  for (std::size_t j = 0; j < a.cols(); ++j) d += a(row, j).real() != 0.0;
  return d;
}

}  // namespace

TEST_SUITE("graphs") {

TEST_CASE("binomials and colex order") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(60, 30) == BigInt("118264581564861424"));
  const auto subsets = colex_subsets(4, 2);
  const std::vector<std::vector<std::size_t>> expected{{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3}};
  CHECK(subsets == expected);
  for (std::size_t k = 0; k < subsets.size(); ++k) CHECK(colex_rank(subsets[k]) == k);
  CHECK(colex_subsets(7, 3).size() == 35);
}

TEST_CASE("johnson graphs") {
  SUBCASE("J(3,1,0) is a triangle") {
    const DenseMatrix a = johnson_adjacency({3, 1, 0});
    CHECK(a == DenseMatrix::ones(3, 3) - DenseMatrix::identity(3));
  }
  SUBCASE("J(v,n,n) is the identity") {
    CHECK(johnson_adjacency({6, 2, 2}) == DenseMatrix::identity(15));
  }
  SUBCASE("Petersen graph") {
    const DenseMatrix a = kneser_adjacency(2);
    CHECK(a.rows() == 10);
    for (std::size_t r = 0; r < 10; ++r) CHECK(degree_of(a, r) == 3);
    CHECK(a == a.transpose());
  }
  SUBCASE("degrees") {
    for (std::size_t v = 2; v <= 9; ++v)
      for (std::size_t n = 1; 2 * n <= v; ++n)
        for (std::size_t i = 0; i <= n; ++i) {
          const JohnsonSpec spec{v, n, i};
          const DenseMatrix a = johnson_adjacency(spec);
          CHECK(BigInt(degree_of(a, 0)) == johnson_degree(spec));
        }
  }
  SUBCASE("validation") {
    CHECK_THROWS_AS(JohnsonSpec({4, 3, 0}).validate(), Error);
    CHECK_THROWS_AS(JohnsonSpec({4, 0, 0}).validate(), Error);
    CHECK_THROWS_AS(JohnsonSpec({6, 2, 3}).validate(), Error);
    try {
      johnson_adjacency({20, 10, 0});
      FAIL("expected TooLarge");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::TooLarge);
    }
  }
}

TEST_CASE("eigenspace dimensions and Kneser spectrum") {
  CHECK(scheme_eigen_dims(5, 2) == std::vector<BigInt>{1, 4, 5});
  CHECK(scheme_eigen_dims(7, 3) == std::vector<BigInt>{1, 6, 14, 14});
  CHECK(kneser_eigenvalues(2) == std::vector<std::int64_t>{3, -2, 1});
  for (std::size_t n = 1; n <= 20; ++n) {
    BigInt total = 0;
    for (const BigInt& d : scheme_eigen_dims(2 * n + 1, n)) total += d;
    CHECK(total == binomial(2 * n + 1, n));
  }
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto eig = hermitian_eig(kneser_adjacency(n)).eigenvalues;
    const auto expected = kneser_eigenvalues(n);
    const auto dims = scheme_eigen_dims(2 * n + 1, n);
    for (std::size_t i = 0; i <= n; ++i) {
      std::size_t count = 0;
      for (double e : eig) count += std::abs(e - static_cast<double>(expected[i])) < 1e-8;
      CHECK(BigInt(count) == dims[i]);
    }
    // Perron eigenvalue equals the degree
    CHECK(eig.front() == doctest::Approx(static_cast<double>(expected[0])));
  }
}

TEST_CASE("Kneser Schur norm") {
  CHECK(kneser_schur_norm(1) == Rational(4, 3));
  CHECK(kneser_schur_norm(2) == Rational(8, 5));
  CHECK(kneser_schur_norm(3) == Rational(64, 35));
  for (std::size_t n = 1; n <= 20; ++n) {
    const Rational q = kneser_schur_norm(n);
    CHECK(q == kneser_product_form(n));
    const double x = to_double(q);
    CHECK(x >= 0.5 * std::log(2.0 * static_cast<double>(n) + 3.0));
    CHECK(x <= std::sqrt(std::numbers::pi * static_cast<double>(n + 1)));
  }
  CHECK_THROWS_AS(kneser_schur_norm(0), Error);
}

TEST_CASE("Kneser norm matches the SDP and the commutant formula") {
  for (std::size_t n = 1; n <= 2; ++n) {
    const DenseMatrix a = kneser_adjacency(n);
    const double exact = to_double(kneser_schur_norm(n));
    CHECK(symmetry::mathias_norm(a) == doctest::Approx(exact).epsilon(1e-10));
    CHECK(gamma2::schur_norm(a).value == doctest::Approx(exact).epsilon(1e-6));
  }
}

TEST_CASE("structure constants match adjacency products") {
  for (auto [v, n] : {std::pair<std::size_t, std::size_t>{4, 2}, {5, 2}, {6, 3}, {7, 3}}) {
    std::vector<DenseMatrix> rel;
    for (std::size_t i = 0; i <= n; ++i) rel.push_back(johnson_adjacency({v, n, i}));
    for (std::size_t i = 0; i <= n; ++i)
      for (std::size_t j = 0; j <= n; ++j) {
        const DenseMatrix prod = rel[i] * rel[j];
        for (std::size_t k = 0; k <= n; ++k) {
          // any pair in relation k gives the same count
          std::size_t y = 0;
          while (rel[k](0, y).real() == 0.0) ++y;
          CHECK(BigInt(static_cast<long long>(std::llround(prod(0, y).real()))) ==
                structure_constant(v, n, i, j, k));
        }
      }
  }
}

TEST_CASE("verify_scheme") {
  for (auto [v, n] : {std::pair<std::size_t, std::size_t>{3, 1}, {4, 2}, {5, 2}, {6, 3}, {7, 2}}) {
    const SchemeReport r = verify_scheme(v, n);
    CHECK(r.ok());
    CHECK(r.commutative);
    CHECK(r.structure_constants);
    CHECK(r.eigenspaces == n + 1);
  }
  const SchemeReport r = verify_scheme(5, 2);
  CHECK(r.multiplicities == std::vector<std::size_t>{5, 4, 1});
  try {
    verify_scheme(12, 6);
    FAIL("expected TooLarge");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::TooLarge);
  }
}

}  // TEST_SUITE
