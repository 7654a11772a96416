#include "doctest.h"
#include "oracles.hpp"
#include "tautkit/penner.hpp"
#include "tautkit/symplectic.hpp"

#include <random>

using namespace tautkit;

namespace {

HomologyClass random_primitive(std::mt19937_64& rng, std::size_t dim) {
  std::uniform_int_distribution<int> entry(-3, 3);
  while (true) {
    IntVector v(dim);
    for (auto& x : v) x = entry(rng);
    HomologyClass c(v);
    if (c.is_primitive()) return c;
  }
}

}  // namespace

TEST_CASE("algebraic intersection on the basis") {
  const SymplecticSpace sp(3);
  const HomologyClass r1(sp.r(1)), s1(sp.s(1)), r2(sp.r(2));
  CHECK(algebraic_intersection(r1, s1) == 1);
  CHECK(algebraic_intersection(s1, r1) == -1);
  CHECK(algebraic_intersection(r1, r2) == 0);
  CHECK_THROWS_AS(algebraic_intersection(r1, HomologyClass(SymplecticSpace(2).r(1))), InputError);
}

TEST_CASE("intersection form is antisymmetric with J^2 = -Id") {
  for (int g = 1; g <= 5; ++g) {
    const IntMatrix j = SymplecticSpace(g).intersection_form();
    CHECK(j.transpose() == IntMatrix(j.rows(), j.rows()) - j);
    CHECK(j * j == IntMatrix(j.rows(), j.rows()) - IntMatrix::identity(j.rows()));
  }
}

TEST_CASE("pairing matches the index oracle and vanishes on the diagonal") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> entry(-9, 9);
  for (int trial = 0; trial < 200; ++trial) {
    IntVector x(8), y(8);
    for (auto& v : x) v = entry(rng);
    for (auto& v : y) v = entry(rng);
    CHECK(algebraic_intersection(HomologyClass(x), HomologyClass(y)) == oracle::pairing(x, y));
    CHECK(algebraic_intersection(HomologyClass(x), HomologyClass(x)) == 0);
  }
}

TEST_CASE("generator construction") {
  const SymplecticSpace sp(2);
  CHECK_NOTHROW(TwistGenerator("c", HomologyClass(sp.r(1)), CurveFamily::A));
  const TwistGenerator sep("sep", HomologyClass(IntVector(4, Integer(0))), CurveFamily::A);
  CHECK(sep.null_homologous());
  CHECK_THROWS_AS(TwistGenerator("bad", HomologyClass({2, 0, 0, 0}), CurveFamily::A), InputError);
  CHECK_THROWS_AS(TwistGenerator("odd", HomologyClass({1, 0, 0}), CurveFamily::A), InputError);
  CHECK_THROWS_AS(TwistWord({{"c", 0}}), InputError);
}

TEST_CASE("transvection along a null-homologous curve is the identity") {
  const SymplecticSpace sp(3);
  const TwistGenerator sep("sep", HomologyClass(IntVector(6, Integer(0))), CurveFamily::B);
  CHECK(transvection_matrix(sp, sep, 1) == IntMatrix::identity(6));
  CHECK(transvection_matrix(sp, sep, -1) == IntMatrix::identity(6));
}

TEST_CASE("transvection along r_1 fixes r_1 and sends s_1 to s_1 - r_1") {
  // <s_1, r_1> = -1, so s_1 + <s_1, r_1> r_1 = s_1 - r_1.
  const SymplecticSpace sp(2);
  const TwistGenerator c("r1", HomologyClass(sp.r(1)), CurveFamily::A);
  const IntMatrix t = transvection_matrix(sp, c, 1);
  CHECK(t.column(0) == IntVector{1, 0, 0, 0});
  CHECK(t.column(1) == IntVector{-1, 1, 0, 0});
  CHECK(t.column(2) == sp.r(2));
  CHECK(t.column(3) == sp.s(2));
  CHECK(t * transvection_matrix(sp, c, -1) == IntMatrix::identity(4));
}

TEST_CASE("transvection properties on random curves") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> genus(2, 6);
  for (int trial = 0; trial < 150; ++trial) {
    const SymplecticSpace sp(genus(rng));
    const auto n = sp.dimension();
    const IntMatrix j = sp.intersection_form();
    const HomologyClass c = random_primitive(rng, n);
    const TwistGenerator gen("c", c, CurveFamily::A);
    const TwistGenerator neg("-c", -c, CurveFamily::A);
    for (int sign : {1, -1}) {
      const IntMatrix t = transvection_matrix(sp, gen, sign);
      CHECK(t.transpose() * j * t == j);
      CHECK(det_exact(t) == 1);
      CHECK(t.apply(c.coords) == c.coords);
      CHECK(t == transvection_matrix(sp, neg, sign));
      // column by column against the vector formula
      for (std::size_t k = 0; k < n; ++k) {
        IntVector e(n, Integer(0));
        e[k] = 1;
        CHECK(t.column(k) == oracle::transvect(e, c.coords, sign));
      }
    }
  }
}

TEST_CASE("word action: empty, single letter, concatenation") {
  const auto [sys, f] = genus3_penner_system();
  const auto sp = sys.space();
  const auto table = sys.table();
  CHECK(word_action(sp, TwistWord(), table) == IntMatrix::identity(6));
  CHECK(word_action(sp, TwistWord({{"a1", 1}}), table) ==
        transvection_matrix(sp, table.at("a1"), 1));
  const IntMatrix t = transvection_matrix(sp, table.at("b2"), 1);
  CHECK(word_action(sp, TwistWord({{"b2", 3}}), table) == t * t * t);
  const TwistWord head({{"b2", 1}, {"a2", -1}});
  const TwistWord tail({{"a3", -1}, {"b1", 1}});
  CHECK(word_action(sp, head.then_after(tail), table) ==
        word_action(sp, head, table) * word_action(sp, tail, table));
  CHECK_THROWS_AS(word_action(sp, TwistWord({{"zz", 1}}), table), InputError);
}

TEST_CASE("the genus-3 word acts as the frozen matrix") {
  // Computed independently by symbolic expansion of the seven transvections.
  const IntMatrix expected{{2, 3, 0, -1, 0, 0},  {1, 2, 0, 0, 0, 0},   {-1, -2, 1, 2, -1, -2},
                           {-1, -2, 1, 3, -1, -2}, {0, 0, 0, -1, 2, 3}, {0, 0, 0, 0, 1, 2}};
  const auto [sys, f] = genus3_penner_system();
  const IntMatrix m = word_action(sys.space(), f, sys.table());
  CHECK(m == expected);
  CHECK(det_exact(m) == 1);
  CHECK(nullity_exact(m - IntMatrix::identity(6)) == 0);
  CHECK(det_exact(m - IntMatrix::identity(6)) == det_exact(build_W() - IntMatrix::identity(6)));
}

TEST_CASE("build_W is the printed matrix") {
  const IntMatrix w = build_W();
  CHECK(w.row(0) == IntVector{0, 1, 2, -1, -2, 1});
  CHECK(w.row(5) == IntVector{0, 0, 0, 0, -1, 2});
  CHECK(det_exact(w) == 1);
  CHECK(det_exact(w - IntMatrix::identity(6)) == -4);
}

TEST_CASE("build_V layout and determinant law") {
  CHECK_THROWS_AS(build_V(5), InputError);
  const IntMatrix v6 = build_V(6);
  CHECK(v6.rows() == 12);
  const IntVector first{0, 1, 2, -1, -2, 2, 1, -1};
  for (std::size_t j = 0; j < 8; ++j) CHECK(v6(0, j) == first[j]);
  // Repeating rows follow r_i -> s_{i-1} + r_i - s_i (- s_g), i = 5..g-1.
  const IntMatrix v9 = build_V(9);
  for (std::size_t i = 5; i <= 8; ++i) {
    const auto r = 2 * i - 2;
    CHECK(v9(r, r - 1) == 1);
    CHECK(v9(r, r) == 1);
    CHECK(v9(r, r + 1) == -1);
    CHECK(v9(r, 17) == -1);
    CHECK(v9(r + 1, r - 1) == -1);
    CHECK(v9(r + 1, r) == -1);
    CHECK(v9(r + 1, r + 1) == 3);
    CHECK(v9(r + 1, r + 2) == 1);
    CHECK(v9(r + 1, r + 3) == -1);
  }
  // Frozen: symbolic determinant of V - Id for g = 6..10.
  const long long expected[] = {7, -8, 9, -10, 11};
  for (int g = 6; g <= 10; ++g) {
    const IntMatrix v = build_V(g);
    CHECK(det_exact(v - IntMatrix::identity(v.rows())) == expected[g - 6]);
    CHECK(det_exact(v) == 1);
  }
  const IntMatrix v8 = build_V(8);
  CHECK(abs(det_exact(v8 - IntMatrix::identity(16))) == 9);
}

TEST_CASE("row reduction of the first eight rows of V - Id matches the printed form") {
  // The reduced rows have unit pivots in columns 0..7 and these entries in the
  // r_5, s_5 and s_g columns (g = 8).
  const IntMatrix m = build_V(8) - IntMatrix::identity(16);
  std::vector<RatVector> rows(8, RatVector(16));
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 16; ++j) rows[i][j] = Rational(m(i, j));
  for (std::size_t c = 0; c < 8; ++c) {
    std::size_t p = c;
    while (rows[p][c] == 0) ++p;
    std::swap(rows[p], rows[c]);
    const Rational piv = rows[c][c];
    for (auto& x : rows[c]) x /= piv;
    for (std::size_t i = 0; i < 8; ++i) {
      if (i == c) continue;
      const Rational f = rows[i][c];
      for (std::size_t j = 0; j < 16; ++j) rows[i][j] -= f * rows[c][j];
    }
  }
  const int r5[] = {-1, 0, -1, 0, -1, 0, -1, 0};
  const int s5[] = {1, 0, 1, 0, 1, 0, 1, 0};
  const int sg[] = {3, 1, 2, 2, 4, 3, 5, 4};
  for (std::size_t i = 0; i < 8; ++i) {
    CHECK(rows[i][8] == r5[i]);
    CHECK(rows[i][9] == s5[i]);
    CHECK(rows[i][15] == sg[i]);
  }
}

TEST_CASE("mapping torus b2 and fixed homology") {
  CHECK(mapping_torus_b2(IntMatrix::identity(6)) == 7);
  CHECK_FALSE(fixed_homology_trivial(IntMatrix::identity(6)));
  CHECK(mapping_torus_b2(build_W()) == 1);
  CHECK(fixed_homology_trivial(build_W()));
  CHECK(fixed_homology_trivial(build_V(7)));
  CHECK_THROWS_AS(mapping_torus_b2(IntMatrix(2, 3)), InputError);

  std::mt19937_64 rng(5);
  for (int g = 2; g <= 5; ++g) {
    const SymplecticSpace sp(g);
    const TwistGenerator c("c", random_primitive(rng, sp.dimension()), CurveFamily::A);
    const IntMatrix t = transvection_matrix(sp, c, 1);
    CHECK(mapping_torus_b2(t) == 2 * g);
    CHECK(mapping_torus_b2(t) >= 1);
    CHECK((mapping_torus_b2(t) == 1) == fixed_homology_trivial(t));
  }
}

TEST_CASE("homological image check") {
  const SymplecticSpace sp(3);
  const HomologyClass a(sp.r(2)), b(sp.s(1));
  const IntMatrix id = IntMatrix::identity(6);
  auto same = homological_image_check(id, a, a);
  CHECK(same.maps_alpha_to_beta);
  CHECK_FALSE(same.not_homologous);
  CHECK_FALSE(homological_image_check(id, a, b).maps_alpha_to_beta);

  const auto abg = genus3_alpha_beta_gamma();
  CHECK(algebraic_intersection(abg.alpha, abg.gamma) == -1);
  const TwistGenerator gamma("gamma", abg.gamma, CurveFamily::A);
  const auto check = homological_image_check(transvection_matrix(sp, gamma, 1), abg.alpha, abg.beta);
  CHECK(check.maps_alpha_to_beta);
  CHECK(check.not_homologous);
  CHECK(abg.beta == abg.alpha - abg.gamma);
  CHECK_THROWS_AS(homological_image_check(IntMatrix::identity(4), a, a), InputError);
}

TEST_CASE("the word f sends alpha to beta in homology") {
  const auto [sys, f] = genus3_penner_system();
  const auto abg = genus3_alpha_beta_gamma();
  const auto table = sys.table();
  // alpha is disjoint from a1, a4, b1, b3.
  for (const char* label : {"a1", "a4", "b1", "b3"})
    CHECK(algebraic_intersection(abg.alpha, table.at(label).cls()) == 0);
  const auto check = homological_image_check(word_action(sys.space(), f, table), abg.alpha, abg.beta);
  CHECK(check.maps_alpha_to_beta);
  CHECK(check.not_homologous);
}
