#include "doctest.h"
#include "helpers.hpp"

#include <cmath>

#include "schurnorm/gamma2.hpp"
#include "schurnorm/tpatterns.hpp"

using namespace schurnorm;
using namespace schurnorm::tpatterns;

namespace {

std::vector<std::int64_t> range(std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> v;
  for (std::int64_t k = lo; k <= hi; ++k) v.push_back(k);
  return v;
}

}  // namespace

TEST_SUITE("tpatterns") {

TEST_CASE("diagonal sets and dyadic index") {
  CHECK(DiagonalSet({4, 1, 4, 2}).values() == std::vector<std::int64_t>{1, 2, 4});
  CHECK(dyadic_index(1) == 0);
  CHECK(dyadic_index(2) == 1);
  CHECK(dyadic_index(3) == 2);
  CHECK(dyadic_index(4) == 2);
  CHECK(dyadic_index(5) == 3);
  CHECK(dyadic_index(1024) == 10);
  CHECK(dyadic_index(1025) == 11);
}

TEST_CASE("lacunary decomposition examples") {
  SUBCASE("powers of two") {
    const LacunaryReport r = lacunary_decompose(DiagonalSet({1, 2, 4, 8, 16}));
    CHECK(r.max_count == 1);
    CHECK(r.pieces.size() <= 2);
  }
  SUBCASE("1..32") {
    const LacunaryReport r = lacunary_decompose(DiagonalSet(range(1, 32)));
    CHECK(r.max_count == 16);
    CHECK(r.dyadic_counts.at(5) == 16);
    CHECK(r.pieces.size() <= 32);
  }
  SUBCASE("singleton") {
    const LacunaryReport r = lacunary_decompose(DiagonalSet({5}));
    CHECK(r.max_count == 1);
    CHECK(r.pieces == std::vector<std::vector<std::int64_t>>{{5}});
  }
  SUBCASE("empty and invalid") {
    CHECK(lacunary_decompose(DiagonalSet()).max_count == 0);
    CHECK_THROWS_AS(lacunary_decompose(DiagonalSet({0, 3})), Error);
  }
}

TEST_CASE("lacunary pieces cover S with ratios above 2") {
  std::mt19937_64 rng(59);
  std::uniform_int_distribution<std::int64_t> value(1, 4096);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<std::int64_t> v(1 + trial % 60);
    for (auto& x : v) x = value(rng);
    const DiagonalSet s(v);
    const LacunaryReport r = lacunary_decompose(s);
    CHECK(r.pieces.size() <= 2 * r.max_count);
    std::vector<std::int64_t> all;
    for (const auto& piece : r.pieces) {
      for (std::size_t k = 1; k < piece.size(); ++k)
        CHECK(static_cast<double>(piece[k]) > 2.0 * static_cast<double>(piece[k - 1]));
      all.insert(all.end(), piece.begin(), piece.end());
    }
    std::sort(all.begin(), all.end());
    CHECK(all == s.values());
  }
}

TEST_CASE("pattern builders") {
  const DiagonalSet s({1, 3});
  const Pattern h = pattern_builder(s, 4, PatternKind::Hankel);
  CHECK(h.contains(0, 1));
  CHECK(h.contains(1, 0));
  CHECK(h.contains(2, 1));
  CHECK_FALSE(h.contains(1, 1));
  CHECK(h.size() == 6);
  const Pattern t = pattern_builder(DiagonalSet({0}), 5, PatternKind::Toeplitz);
  CHECK(t.size() == 5);
  const Pattern u = pattern_builder(DiagonalSet({-1, 2}), 4, PatternKind::Toeplitz);
  CHECK(u.contains(0, 1));
  CHECK(u.contains(2, 0));
  CHECK(u.size() == 5);
}

TEST_CASE("hankel classification") {
  SUBCASE("lacunary set is bounded") {
    const HankelReport r = hankel_classify(DiagonalSet({1, 2, 4, 8, 16, 32, 64, 128, 256, 512, 1024}), 2048);
    CHECK(r.bounded);
    CHECK(r.m <= 2);
    CHECK(flow::validate(pattern_builder(DiagonalSet({1, 2, 4, 8, 16, 32, 64, 128, 256, 512, 1024}), 2048,
                                         PatternKind::Hankel),
                         r.decomposition));
  }
  SUBCASE("8..16 on grid 32") {
    const HankelReport r = hankel_classify(DiagonalSet(range(8, 16)), 32);
    CHECK_FALSE(r.bounded);
    CHECK(r.m == 4);
    CHECK(r.witness.k == 4);
    CHECK(r.witness.corner == 16);
    CHECK(r.witness.m_lower == 4);
    CHECK(r.m >= r.witness.m_lower);
  }
  SUBCASE("interval brackets the SDP value on a small grid") {
    const DiagonalSet s({1, 2, 3, 5});
    const HankelReport r = hankel_classify(s, 10);
    const Pattern p = pattern_builder(s, 10, PatternKind::Hankel);
    DenseMatrix m(10, 10);
    for (const Entry& e : p.entries()) m(e.row, e.col) = 1.0;
    const double norm = gamma2::schur_norm(m).value;
    CHECK(norm >= r.interval.lower - 1e-6);
    CHECK(norm <= r.interval.upper + 1e-6);
  }
  SUBCASE("preconditions") {
    CHECK_THROWS_AS(hankel_classify(DiagonalSet({1, 9}), 16), Error);
    CHECK_THROWS_AS(hankel_classify(DiagonalSet({0, 2}), 16), Error);
    const HankelReport r = hankel_classify(DiagonalSet(), 4);
    CHECK(r.m == 0);
    CHECK(r.bounded);
  }
}

TEST_CASE("m stays within the dyadic bracket on random sets") {
  std::mt19937_64 rng(61);
  std::uniform_int_distribution<std::int64_t> value(1, 256);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::int64_t> v(1 + trial % 24);
    for (auto& x : v) x = value(rng);
    const DiagonalSet s(v);
    const HankelReport r = hankel_classify(s, 2 * static_cast<std::size_t>(s.values().back()));
    const std::size_t lower = (r.lacunary.max_count + 3) / 4;
    CHECK(r.m >= lower);
    CHECK(r.m >= r.witness.m_lower);
    CHECK(r.m <= 2 * r.lacunary.pieces.size());
  }
}

TEST_CASE("toeplitz intervals") {
  const flow::Interval i = toeplitz_bound_interval(DiagonalSet(range(0, 63)));
  CHECK(i.lower == doctest::Approx(2.0));
  CHECK(i.upper == doctest::Approx(8.0));
  CHECK(toeplitz_bound_interval(DiagonalSet({3})).lower == doctest::Approx(1.0));
  CHECK(toeplitz_bound_interval(DiagonalSet()).upper == 0.0);

  const flow::Interval l2 = toeplitz_l2_interval({{0, 3.0}, {2, cplx(0, 4)}});
  CHECK(l2.upper == doctest::Approx(5.0));
  CHECK(l2.lower == doctest::Approx(5.0 / std::sqrt(2.0)));

  // all-ones Toeplitz of size n sits under sqrt(n)
  for (std::size_t n = 2; n <= 8; ++n) {
    const Pattern p = pattern_builder(DiagonalSet(range(-static_cast<std::int64_t>(n) + 1, n - 1)), n,
                                      PatternKind::Toeplitz);
    DenseMatrix m(n, n);
    for (const Entry& e : p.entries()) m(e.row, e.col) = 1.0;
    CHECK(gamma2::schur_norm(m).value <= std::sqrt(static_cast<double>(n)) + 1e-4);
  }
}

TEST_CASE("flat sign search") {
  SUBCASE("pinned result on 0..7") {
    const FlatSignResult r = flat_sign_search(DiagonalSet(range(0, 7)), 20000, 0, 1);
    CHECK(r.sup_norm == doctest::Approx(3.64503125981).epsilon(1e-10));
    CHECK(r.signs == std::vector<int>{-1, -1, 1, 1, 1, 1, -1, 1});
    CHECK(r.grid_points == 128);
    CHECK(r.trials == 20000);
  }
  SUBCASE("deterministic for a fixed seed") {
    const DiagonalSet s({1, 4, 9, 16, 25});
    const FlatSignResult a = flat_sign_search(s, 500, 0, 7);
    const FlatSignResult b = flat_sign_search(s, 500, 0, 7);
    CHECK(a.signs == b.signs);
    CHECK(a.sup_norm == b.sup_norm);
  }
  SUBCASE("sup norm is at least the l2 norm and at most |S|") {
    std::mt19937_64 rng(67);
    std::uniform_int_distribution<std::int64_t> value(-40, 40);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<std::int64_t> v(1 + trial % 10);
      for (auto& x : v) x = value(rng);
      const DiagonalSet s(v);
      const FlatSignResult r = flat_sign_search(s, 50, 0, trial);
      const double n = static_cast<double>(s.size());
      CHECK(r.sup_norm >= std::sqrt(n) - 1e-9);
      CHECK(r.sup_norm <= n + 1e-9);
      CHECK(sampled_sup(s, r.signs, r.grid_points) == doctest::Approx(r.sup_norm));
    }
  }
  SUBCASE("exhaustive search on 0..7 cannot beat the sampled optimum by much") {
    const DiagonalSet s(range(0, 7));
    double best = 1e300;
    for (unsigned mask = 0; mask < 256; ++mask) {
      std::vector<int> signs(8);
      for (int k = 0; k < 8; ++k) signs[k] = (mask >> k) & 1u ? 1 : -1;
      best = std::min(best, sampled_sup(s, signs, 128));
    }
    const FlatSignResult r = flat_sign_search(s, 20000, 0, 1);
    CHECK(r.sup_norm == doctest::Approx(best).epsilon(1e-9));
  }
  SUBCASE("errors") {
    try {
      flat_sign_search(DiagonalSet(), 10, 0, 1);
      FAIL("expected EmptySet");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::EmptySet);
    }
    CHECK_THROWS_AS(flat_sign_search(DiagonalSet({1}), 0, 0, 1), Error);
    CHECK_THROWS_AS(flat_sign_search(DiagonalSet({1, 2}), 10, 8, 1), Error);
    CHECK(effective_grid(DiagonalSet({0, 99}), 32) == 200);
  }
}

}  // TEST_SUITE
