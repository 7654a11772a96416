#include "doctest.h"
#include "oracles.hpp"
#include "tautkit/int_matrix.hpp"

#include <random>

using namespace tautkit;

TEST_CASE("rational text round trip") {
  CHECK(to_string(Rational(-4)) == "-4");
  CHECK(to_string(Rational(-6, 4)) == "-3/2");
  CHECK(to_string(Rational(6, 4)) == "3/2");
  CHECK(parse_rational("3/2") == Rational(3, 2));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK(parse_rational("10/4") == Rational(5, 2));
}

TEST_CASE("rational parse errors") {
  CHECK_THROWS_AS(parse_rational("1/0"), InputError);
  CHECK_THROWS_AS(parse_rational("abc"), InputError);
  CHECK_THROWS_AS(parse_rational("1/2/3"), InputError);
  CHECK_THROWS_AS(parse_rational("10/-2"), InputError);
  CHECK_THROWS_AS(parse_integer(""), InputError);
  CHECK(parse_integer("123456789012345678901234567890") ==
        Integer("123456789012345678901234567890"));
}

TEST_CASE("floor and ceil of rationals") {
  CHECK(floor_of(Rational(-1, 2)) == -1);
  CHECK(ceil_of(Rational(-1, 2)) == 0);
  CHECK(floor_of(Rational(7, 2)) == 3);
  CHECK(ceil_of(Rational(7, 2)) == 4);
  CHECK(floor_of(Rational(-4)) == -4);
  CHECK(ceil_of(Rational(-4)) == -4);
}

TEST_CASE("det_exact small cases") {
  CHECK(det_exact(IntMatrix::identity(5)) == 1);
  CHECK(det_exact(IntMatrix{{2, 0, 0}, {0, 3, 0}, {0, 0, -1}}) == -6);
  CHECK(det_exact(IntMatrix{{0, 1}, {1, 0}}) == -1);
  CHECK(det_exact(IntMatrix{{1, 2}, {2, 4}}) == 0);
  CHECK(det_exact(IntMatrix(0, 0)) == 1);
  CHECK_THROWS_AS(det_exact(IntMatrix(2, 3)), InputError);
}

TEST_CASE("det_exact agrees with Leibniz expansion on random matrices") {
  std::mt19937_64 rng(20261016);
  std::uniform_int_distribution<int> entry(-4, 4);
  std::uniform_int_distribution<int> size(1, 6);
  std::bernoulli_distribution zero(0.3);
  for (int trial = 0; trial < 300; ++trial) {
    const auto n = static_cast<std::size_t>(size(rng));
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = zero(rng) ? 0 : entry(rng);
    REQUIRE(det_exact(m) == oracle::leibniz_det(m));
  }
}

TEST_CASE("rank agrees with rational elimination, including rectangular") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> entry(-3, 3);
  std::uniform_int_distribution<int> size(1, 7);
  for (int trial = 0; trial < 300; ++trial) {
    const auto r = static_cast<std::size_t>(size(rng));
    const auto c = static_cast<std::size_t>(size(rng));
    IntMatrix m(r, c);
    // Low-rank products exercise skipped pivot columns.
    const auto k = static_cast<std::size_t>(size(rng) % 3 + 1);
    IntMatrix a(r, k), b(k, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < k; ++j) a(i, j) = entry(rng);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < c; ++j) b(i, j) = entry(rng);
    m = trial % 2 == 0 ? a * b : m + a * b;
    REQUIRE(rank_exact(m) == oracle::rational_rank(m));
    REQUIRE(nullity_exact(m) == c - oracle::rational_rank(m));
  }
}

TEST_CASE("matrix algebra basics") {
  const IntMatrix a{{1, 2}, {3, 4}};
  CHECK(a * IntMatrix::identity(2) == a);
  CHECK(a.transpose() == IntMatrix{{1, 3}, {2, 4}});
  CHECK(a.apply({1, -1}) == IntVector{-1, -1});
  CHECK(a.column(1) == IntVector{2, 4});
  CHECK_THROWS_AS(a * IntMatrix(3, 3), InputError);
  CHECK_THROWS_AS(a - IntMatrix(3, 3), InputError);
}
