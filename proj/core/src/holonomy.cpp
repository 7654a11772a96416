#include "tautkit/holonomy.hpp"

#include <algorithm>

namespace tautkit {

Integer tile_index(const Rational& q) {
  if (q == 0) throw InputError("tile_index: 0 is not in any tile");
  const Rational a = q < 0 ? Rational(-q) : q;
  if (a > 1) throw InputError("tile_index: point outside [-1, 1]");
  return floor_of(1 / a);
}

std::pair<Rational, Rational> tile_bounds(const Integer& k, TileSide side) {
  if (k < 1) throw InputError("tile index must be >= 1");
  const Rational outer(1, k);
  const Rational inner(1, k + 1);
  if (side == TileSide::negative) return {-outer, -inner};
  return {inner, outer};
}

Rational to_tile(const Integer& k, TileSide side, const Rational& x) {
  const auto [a, b] = tile_bounds(k, side);
  return a + (x + 1) * (b - a) / 2;
}

Rational from_tile(const Integer& k, TileSide side, const Rational& y) {
  const auto [a, b] = tile_bounds(k, side);
  return 2 * (y - a) / (b - a) - 1;
}

namespace {

void require_unit_domain(const PLHomeo& f) {
  if (f.lo() != -1 || f.hi() != 1) throw InputError("tiled map pieces must live on [-1, 1]");
}

}  // namespace

LazyTiledHomeo::LazyTiledHomeo(PLHomeo negative_map, PLHomeo positive_map, TileRule rule)
    : neg_(std::move(negative_map)),
      neg_inv_(neg_.inverse()),
      pos_(std::move(positive_map)),
      pos_inv_(pos_.inverse()),
      rule_(rule) {
  require_unit_domain(neg_);
  require_unit_domain(pos_);
}

int LazyTiledHomeo::tile_exponent(const Integer& k) const {
  if (rule_ == TileRule::constant) return 1;
  return k % 2 == 1 ? 1 : -1;
}

Rational LazyTiledHomeo::operator()(const Rational& q) const {
  if (q < -1 || q > 1) throw InputError("tiled map evaluated outside [-1, 1]");
  if (q == 0) return 0;
  const TileSide side = q < 0 ? TileSide::negative : TileSide::positive;
  const Integer k = tile_index(q);
  const bool forward = tile_exponent(k) == 1;
  const PLHomeo& f = side == TileSide::negative ? (forward ? neg_ : neg_inv_)
                                                : (forward ? pos_ : pos_inv_);
  return to_tile(k, side, f(from_tile(k, side, q)));
}

LazyTiledHomeo LazyTiledHomeo::inverse() const { return LazyTiledHomeo(neg_inv_, pos_inv_, rule_); }

std::string to_string(ConcatCase c) {
  static const char* names[] = {"a", "b", "c", "d", "e", "f"};
  return names[static_cast<int>(c)];
}

ConcatCase parse_concat_case(const std::string& s) {
  static const std::string names[] = {"a", "b", "c", "d", "e", "f"};
  for (int i = 0; i < 6; ++i)
    if (s == names[i]) return static_cast<ConcatCase>(i);
  throw InputError("concatenation case must be one of a..f, got \"" + s + "\"");
}

std::string relation_of(ConcatCase c) {
  switch (c) {
    case ConcatCase::a: return "u tau^-1 v";
    case ConcatCase::b: return "u tau v";
    case ConcatCase::c: return "u tau";
    case ConcatCase::d: return "tau v";
    case ConcatCase::e: return "u tau^-1";
    case ConcatCase::f: return "tau^-1 v";
  }
  return "";
}

Concatenation::Concatenation(std::optional<PLHomeo> left, LazyTiledHomeo middle,
                             std::optional<PLHomeo> right)
    : left_(std::move(left)), middle_(std::move(middle)), right_(std::move(right)) {
  if (left_) require_unit_domain(*left_);
  if (right_) require_unit_domain(*right_);
}

Rational Concatenation::operator()(const Rational& x) const {
  if (x < lo() || x > hi()) throw InputError("concatenation evaluated outside its domain");
  if (x < -1) return (*left_)(x + 2) - 2;
  if (x > 1) return (*right_)(x - 2) + 2;
  return middle_(x);
}

Rational TileShift::operator()(const Rational& q) const {
  if (q < -1 || q > 1) throw InputError("tile shift evaluated outside [-1, 1]");
  if (q == 0) return 0;
  const TileSide side = q < 0 ? TileSide::negative : TileSide::positive;
  if (side == TileSide::negative ? !shift_negative_ : !shift_positive_) return q;
  const Integer k = tile_index(q);
  const Rational chart = from_tile(k, side, q);
  if (k == 1) return side == TileSide::negative ? chart - 2 : chart + 2;
  return to_tile(k - 1, side, chart);
}

bool ConjugacyWitness::passed() const {
  return !samples.empty() &&
         std::all_of(samples.begin(), samples.end(), [](const SampleCheck& s) { return s.ok; });
}

std::vector<Rational> tile_samples(int count, int min_tiles_per_side, int* tiles_per_side) {
  if (count < 2 * min_tiles_per_side)
    throw InputError("need at least one sample per tile on each side");
  const int per_side_neg = (count + 1) / 2;
  const int per_side_pos = count / 2;
  const int tiles = std::max(min_tiles_per_side, (per_side_neg + 3) / 4);
  if (tiles_per_side) *tiles_per_side = tiles;

  std::vector<Rational> out;
  for (auto [side, n] : {std::pair{TileSide::negative, per_side_neg}, std::pair{TileSide::positive, per_side_pos}}) {
    for (int t = 0; t < tiles; ++t) {
      const int in_tile = n / tiles + (t < n % tiles ? 1 : 0);
      for (int j = 1; j <= in_tile; ++j) {
        // Interior chart points, nudged off the symmetric grid.
        const Rational x = Rational(-1) + Rational(2 * j, in_tile + 1) + Rational(1, 7 * (in_tile + 1));
        out.push_back(to_tile(Integer(t + 1), side, x));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

TauConstruction build_tau(const PLHomeo& u_in, const PLHomeo& v_in, ConcatCase which,
                          int sample_count) {
  if (u_in.lo() != v_in.lo() || u_in.hi() != v_in.hi())
    throw InputError("build_tau: u and v must share a domain");
  const PLHomeo u = u_in.conjugated_to(-1, 1);
  const PLHomeo v = v_in.conjugated_to(-1, 1);
  const PLHomeo id = PLHomeo::identity(-1, 1);

  // (c), (d) reuse (b) with one side trivial; (e), (f) reuse (a).
  const bool inverted = which == ConcatCase::a || which == ConcatCase::e || which == ConcatCase::f;
  const bool has_left = which != ConcatCase::d && which != ConcatCase::f;
  const bool has_right = which != ConcatCase::c && which != ConcatCase::e;

  LazyTiledHomeo tau(has_left ? u : id, has_right ? v : id,
                     inverted ? TileRule::alternating : TileRule::constant);

  const Concatenation concat(has_left ? std::optional<PLHomeo>(u) : std::nullopt,
                             inverted ? tau.inverse() : tau,
                             has_right ? std::optional<PLHomeo>(v) : std::nullopt);
  const TileShift h(has_left, has_right);

  ConjugacyWitness witness{which, h, 0, {}};
  for (const auto& q : tile_samples(sample_count, 8, &witness.tiles_per_side)) {
    Rational lhs = h(tau(q));
    Rational rhs = concat(h(q));
    const bool ok = lhs == rhs;
    witness.samples.push_back({q, std::move(lhs), std::move(rhs), ok});
  }
  return TauConstruction{std::move(tau), std::move(witness)};
}

}  // namespace tautkit
