#pragma once

// Homeomorphisms of [-1, 1] assembled from infinitely many tiles
//
//   ... [-1/3, -1/4], [-1/2, -1/3], [-1, -1/2]   and their mirror images,
//
// accumulating at 0, and the concatenation identities u t^-1 v ~ t etc.
// certified by an explicit conjugator.

#include "tautkit/pl_homeo.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tautkit {

enum class TileSide { negative, positive };

/// Index k >= 1 of the tile containing q != 0; on a shared endpoint the
/// tile nearer to 0 is chosen. Throws InputError for q = 0 or |q| > 1.
Integer tile_index(const Rational& q);

/// [-1/k, -1/(k+1)] or [1/(k+1), 1/k].
std::pair<Rational, Rational> tile_bounds(const Integer& k, TileSide side);

/// Increasing affine identification of [-1, 1] with tile k.
Rational to_tile(const Integer& k, TileSide side, const Rational& x);
Rational from_tile(const Integer& k, TileSide side, const Rational& y);

enum class TileRule {
  alternating,  // f, f^-1, f, f^-1, ... outward to inward
  constant,     // f on every tile
};

/// tau on tile k of the negative side is A_k u^e A_k^-1 (v on the positive
/// side), with e = +1 on odd tiles and -1 on even ones under the alternating
/// rule. Only the rule is stored; tiles are resolved on evaluation.
class LazyTiledHomeo {
 public:
  /// Both maps must be defined on [-1, 1].
  LazyTiledHomeo(PLHomeo negative_map, PLHomeo positive_map, TileRule rule);

  Rational operator()(const Rational& q) const;
  LazyTiledHomeo inverse() const;

  TileRule rule() const { return rule_; }
  const PLHomeo& negative_map() const { return neg_; }
  const PLHomeo& positive_map() const { return pos_; }
  /// +1 or -1: the power of the side map used on tile k.
  int tile_exponent(const Integer& k) const;
  /// Every tile map is the identity.
  bool is_identity() const { return neg_.is_identity() && pos_.is_identity(); }

 private:
  PLHomeo neg_;
  PLHomeo neg_inv_;
  PLHomeo pos_;
  PLHomeo pos_inv_;
  TileRule rule_;
};

enum class ConcatCase { a, b, c, d, e, f };

std::string to_string(ConcatCase c);
ConcatCase parse_concat_case(const std::string& s);
/// "u tau^-1 v", "u tau v", ...
std::string relation_of(ConcatCase c);

/// The concatenation of an optional left map, the middle tiled map and an
/// optional right map, laid out on [-3, -1] u [-1, 1] u [1, 3] (absent
/// pieces shorten the domain).
class Concatenation {
 public:
  Concatenation(std::optional<PLHomeo> left, LazyTiledHomeo middle, std::optional<PLHomeo> right);

  Rational lo() const { return left_ ? Rational(-3) : Rational(-1); }
  Rational hi() const { return right_ ? Rational(3) : Rational(1); }
  Rational operator()(const Rational& x) const;

 private:
  std::optional<PLHomeo> left_;
  LazyTiledHomeo middle_;
  std::optional<PLHomeo> right_;
};

/// h: [-1, 1] -> [lo, hi] moving every tile of a shifted side one step
/// outward, with the outermost tile sent onto the attached piece.
class TileShift {
 public:
  TileShift(bool shift_negative, bool shift_positive)
      : shift_negative_(shift_negative), shift_positive_(shift_positive) {}

  Rational operator()(const Rational& q) const;
  bool shifts_negative() const { return shift_negative_; }
  bool shifts_positive() const { return shift_positive_; }

 private:
  bool shift_negative_;
  bool shift_positive_;
};

struct SampleCheck {
  Rational point;
  Rational lhs;  // h(tau(q))
  Rational rhs;  // R(h(q)) for the concatenation R
  bool ok;
};

struct ConjugacyWitness {
  ConcatCase relation;
  TileShift conjugator;
  int tiles_per_side = 0;
  std::vector<SampleCheck> samples;

  bool passed() const;
};

struct TauConstruction {
  LazyTiledHomeo tau;
  ConjugacyWitness witness;
};

/// Sample points of [-1, 1]: `count` points spread over at least
/// `min_tiles_per_side` tiles on each side. Sorted.
std::vector<Rational> tile_samples(int count, int min_tiles_per_side, int* tiles_per_side = nullptr);

/// Builds tau for the chosen case and checks h tau = R h exactly at
/// `sample_count` (>= 16) points over >= 8 tiles per side. u and v must share
/// a domain; they are rescaled to [-1, 1].
TauConstruction build_tau(const PLHomeo& u, const PLHomeo& v, ConcatCase which, int sample_count = 64);

}  // namespace tautkit
