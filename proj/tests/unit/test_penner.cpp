#include "doctest.h"
#include "tautkit/penner.hpp"

#include <algorithm>
#include <random>

using namespace tautkit;

namespace {

// Genus-2 chain a1 b1 a2 b2 a3 used by the genus-2 example word.
CurveSystem genus2_chain(std::optional<std::vector<RegionData>> regions = std::nullopt) {
  const SymplecticSpace sp(2);
  std::vector<TwistGenerator> curves{
      {"a1", HomologyClass(sp.r(1)), CurveFamily::A},
      {"a2", HomologyClass(sp.r(2)) - HomologyClass(sp.r(1)), CurveFamily::A},
      {"a3", HomologyClass(sp.r(2)), CurveFamily::A},
      {"b1", HomologyClass(sp.s(1)), CurveFamily::B},
      {"b2", HomologyClass(sp.s(2)), CurveFamily::B},
  };
  std::vector<std::vector<int>> gi{
      {0, 0, 0, 1, 0}, {0, 0, 0, 1, 1}, {0, 0, 0, 0, 1}, {1, 1, 0, 0, 0}, {0, 1, 1, 0, 0}};
  return CurveSystem(2, std::move(curves), std::move(gi), std::move(regions));
}

// t_a1^2 t_a2 t_b2^-3 t_a3 t_b1^-1 t_a1
TwistWord genus2_word() {
  return TwistWord({{"a1", 2}, {"a2", 1}, {"b2", -3}, {"a3", 1}, {"b1", -1}, {"a1", 1}});
}

}  // namespace

TEST_CASE("genus-2 example word is a valid Penner word") {
  const auto report = validate_penner_word(genus2_word(), genus2_chain());
  CHECK(report.word_valid);
  CHECK(report.all_curves_used);
  CHECK(report.sign_discipline);
  CHECK(report.filling_status == FillingStatus::necessary_conditions_only);
}

TEST_CASE("deleting a letter leaves a curve unused") {
  const TwistWord w({{"a1", 2}, {"a2", 1}, {"b2", -3}, {"a3", 1}, {"a1", 1}});
  const auto report = validate_penner_word(w, genus2_chain());
  CHECK_FALSE(report.word_valid);
  CHECK_FALSE(report.all_curves_used);
  CHECK(report.sign_discipline);
}

TEST_CASE("sign discipline") {
  const auto sys = genus2_chain();
  // both families positive
  CHECK_FALSE(validate_penner_word(
                  TwistWord({{"a1", 1}, {"a2", 1}, {"a3", 1}, {"b1", 1}, {"b2", 1}}), sys)
                  .sign_discipline);
  // mixed signs inside one family
  CHECK_FALSE(validate_penner_word(
                  TwistWord({{"a1", 1}, {"a2", -1}, {"a3", 1}, {"b1", -1}, {"b2", -1}}), sys)
                  .sign_discipline);
  // reversed orientation is accepted
  CHECK(validate_penner_word(TwistWord({{"a1", -1}, {"a2", -2}, {"a3", -1}, {"b1", 1}, {"b2", 4}}), sys)
            .word_valid);
  CHECK_THROWS_AS(validate_penner_word(TwistWord({{"x9", 1}}), sys), InputError);
}

TEST_CASE("validity depends only on the multiset of letters") {
  std::mt19937_64 rng(99);
  auto letters = genus2_word().letters();
  const bool expected = validate_penner_word(genus2_word(), genus2_chain()).word_valid;
  for (int i = 0; i < 50; ++i) {
    std::shuffle(letters.begin(), letters.end(), rng);
    CHECK(validate_penner_word(TwistWord(letters), genus2_chain()).word_valid == expected);
  }
}

TEST_CASE("curve system invariants are enforced") {
  const SymplecticSpace sp(1);
  std::vector<TwistGenerator> curves{{"a", HomologyClass(sp.r(1)), CurveFamily::A},
                                     {"b", HomologyClass(sp.s(1)), CurveFamily::A}};
  // same family intersecting
  CHECK_THROWS_AS(CurveSystem(1, curves, {{0, 1}, {1, 0}}), InputError);
  curves[1] = TwistGenerator("b", HomologyClass(sp.s(1)), CurveFamily::B);
  CHECK_THROWS_AS(CurveSystem(1, curves, {{0, 1}, {2, 0}}), InputError);   // asymmetric
  CHECK_THROWS_AS(CurveSystem(1, curves, {{1, 1}, {1, 0}}), InputError);   // diagonal
  CHECK_THROWS_AS(CurveSystem(1, curves, {{0, -1}, {-1, 0}}), InputError); // negative
  CHECK_THROWS_AS(CurveSystem(2, curves, {{0, 1}, {1, 0}}), InputError);   // class length
  CHECK_NOTHROW(CurveSystem(1, curves, {{0, 1}, {1, 0}}));
}

TEST_CASE("filling: isolated curve fails") {
  const SymplecticSpace sp(2);
  std::vector<TwistGenerator> curves{{"a1", HomologyClass(sp.r(1)), CurveFamily::A},
                                     {"b1", HomologyClass(sp.s(1)), CurveFamily::B},
                                     {"a2", HomologyClass(sp.r(2)), CurveFamily::A}};
  const CurveSystem sys(2, curves, {{0, 1, 0}, {1, 0, 0}, {0, 0, 0}});
  const auto report = filling_necessary_check(sys);
  CHECK(report.filling_status == FillingStatus::failed);
  CHECK_FALSE(report.messages.empty());
}

TEST_CASE("filling: disconnected graph fails even when every curve meets the other family") {
  const SymplecticSpace sp(2);
  std::vector<TwistGenerator> curves{{"a1", HomologyClass(sp.r(1)), CurveFamily::A},
                                     {"b1", HomologyClass(sp.s(1)), CurveFamily::B},
                                     {"a2", HomologyClass(sp.r(2)), CurveFamily::A},
                                     {"b2", HomologyClass(sp.s(2)), CurveFamily::B}};
  const CurveSystem sys(2, curves, {{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}});
  CHECK(filling_necessary_check(sys).filling_status == FillingStatus::failed);
}

TEST_CASE("filling: region certificate on the torus") {
  // r and s meet once on the torus; the complement is one square:
  // F = chi + I = 0 + 1, and its boundary has 4 = 4I sides.
  const SymplecticSpace sp(1);
  std::vector<TwistGenerator> curves{{"a", HomologyClass(sp.r(1)), CurveFamily::A},
                                     {"b", HomologyClass(sp.s(1)), CurveFamily::B}};
  const std::vector<std::vector<int>> gi{{0, 1}, {1, 0}};
  const CurveSystem good(1, curves, gi, std::vector<RegionData>{{0, 1, 4}});
  CHECK(filling_necessary_check(good).filling_status == FillingStatus::verified);

  const CurveSystem annulus(1, curves, gi, std::vector<RegionData>{{0, 2, 4}});
  CHECK(filling_necessary_check(annulus).filling_status == FillingStatus::failed);

  const CurveSystem miscounted(1, curves, gi, std::vector<RegionData>{{0, 1, 2}, {0, 1, 2}});
  CHECK(filling_necessary_check(miscounted).filling_status == FillingStatus::failed);

  const CurveSystem none(1, curves, gi);
  CHECK(filling_necessary_check(none).filling_status == FillingStatus::necessary_conditions_only);
}

TEST_CASE("bundled genus-3 system") {
  const auto [sys, f] = genus3_penner_system();
  CHECK(sys.curves().size() == 7);
  CHECK(sys.total_intersections() == 6);
  const auto report = validate_penner_word(f, sys);
  CHECK(report.word_valid);
  CHECK(report.filling_status == FillingStatus::necessary_conditions_only);
  CHECK(fixed_homology_trivial(word_action(sys.space(), f, sys.table())));
  // chain adjacency: algebraic and geometric intersection agree up to sign
  const auto& cs = sys.curves();
  for (std::size_t i = 0; i < cs.size(); ++i)
    for (std::size_t j = 0; j < cs.size(); ++j)
      CHECK(abs(algebraic_intersection(cs[i].cls(), cs[j].cls())) == sys.geo_int()[i][j]);
}

TEST_CASE("extension to higher genus") {
  CHECK_THROWS_AS(extend_to_genus(5), InputError);
  for (int g = 6; g <= 10; ++g) {
    const auto [sys, w] = extend_to_genus(g);
    CHECK(sys.curves().size() == static_cast<std::size_t>(2 * g + 1));
    CHECK(w.letters().size() == static_cast<std::size_t>(2 * g + 1));
    CHECK(validate_penner_word(w, sys).word_valid);
    CHECK(filling_necessary_check(sys).filling_status == FillingStatus::necessary_conditions_only);
    const IntMatrix m = word_action(sys.space(), w, sys.table());
    CHECK(mapping_torus_b2(m) == 1);
    CHECK(abs(det_exact(m - IntMatrix::identity(m.rows()))) == g + 1);
  }
}

TEST_CASE("chain systems have a path as intersection graph") {
  for (int g = 6; g <= 12; ++g) {
    const auto [sys, w] = extend_to_genus(g);
    std::size_t edges = 0;
    for (std::size_t i = 0; i < sys.curves().size(); ++i) {
      int degree = 0;
      for (std::size_t j = 0; j < sys.curves().size(); ++j) degree += sys.geo_int()[i][j] > 0;
      CHECK(degree >= 1);
      CHECK(degree <= 2);
      edges += static_cast<std::size_t>(degree);
    }
    CHECK(edges / 2 == sys.curves().size() - 1);
  }
}
