#include "tautkit/norm_ball.hpp"

#include <algorithm>

namespace tautkit {

NormSpec NormSpec::fibered_family(int genus) {
  if (genus < 2) throw InputError("norm spec needs genus >= 2");
  const long long g = genus;
  return NormSpec{Rational(2), Rational(2 * g - 2), Rational(2 * g), Rational(2 * g), -2, 2 - 2 * g};
}

void NormSpec::validate() const {
  for (const Rational* v : {&x_f, &x_s, &x_s_plus_f, &x_s_minus_f}) {
    if (!(*v > 0)) throw InputError("norm spec: values must be positive");
  }
  // Each of F, S, S+F, S-F is a sum/difference of two of the others.
  const bool ok = x_s_plus_f <= x_s + x_f && x_s_minus_f <= x_s + x_f &&
                  x_s <= x_s_plus_f + x_f && x_s <= x_s_minus_f + x_f &&
                  x_f <= x_s_plus_f + x_s && x_f <= x_s_minus_f + x_s &&
                  2 * x_s <= x_s_plus_f + x_s_minus_f && 2 * x_f <= x_s_plus_f + x_s_minus_f;
  if (!ok) throw InputError("norm spec: values violate the triangle inequality");
}

RatPolytope norm_ball_from_values(const NormSpec& spec) {
  spec.validate();
  auto scaled = [](Rational a, Rational b, const Rational& x) { return RatVector{a / x, b / x}; };
  const std::vector<RatVector> rays{
      scaled(1, 0, spec.x_f),           scaled(1, 1, spec.x_s_plus_f),
      scaled(0, 1, spec.x_s),           scaled(-1, 1, spec.x_s_minus_f),
      scaled(-1, 0, spec.x_f),          scaled(-1, -1, spec.x_s_plus_f),
      scaled(0, -1, spec.x_s),          scaled(1, -1, spec.x_s_minus_f),
  };
  RatPolytope ball = RatPolytope::from_vertices(rays);
  // Each prescribed value must be the norm of its class, i.e. every point
  // x / x(class) sits on the boundary rather than strictly inside.
  for (const auto& r : rays) {
    if (ball.gauge(r) != 1) throw InputError("norm spec: values are not those of a convex norm");
  }
  return ball;
}

Rational dual_norm_eval(const RatPolytope& ball, const RatVector& u) {
  if (u.size() != ball.dimension()) throw InputError("dual_norm_eval: dimension mismatch");
  Rational best = dot(u, ball.vertices().front());
  for (const auto& v : ball.vertices()) best = std::max(best, dot(u, v));
  return best;
}

std::string to_string(Realizability r) {
  switch (r) {
    case Realizability::realizable_vertex: return "realizable-vertex";
    case Realizability::candidate: return "candidate";
    case Realizability::interior_unknown: return "interior-unknown";
    case Realizability::excluded: return "excluded";
  }
  return "excluded";
}

std::vector<CandidatePoint> integral_boundary_points(const RatPolytope& dual) {
  const std::size_t d = dual.dimension();
  IntVector lo(d), hi(d);
  for (std::size_t k = 0; k < d; ++k) {
    Rational mn = dual.vertices().front()[k];
    Rational mx = mn;
    for (const auto& v : dual.vertices()) {
      mn = std::min(mn, v[k]);
      mx = std::max(mx, v[k]);
    }
    lo[k] = ceil_of(mn);
    hi[k] = floor_of(mx);
  }

  std::vector<CandidatePoint> out;
  for (std::size_t k = 0; k < d; ++k)
    if (lo[k] > hi[k]) return out;
  IntVector cur = lo;
  while (true) {
    const Location loc = dual.locate(to_rational(cur));
    if (loc == Location::boundary_vertex || loc == Location::boundary_nonvertex) {
      CandidatePoint p;
      p.coords = cur;
      p.location = loc;
      out.push_back(std::move(p));
    }
    std::size_t k = 0;
    while (k < d && cur[k] == hi[k]) {
      cur[k] = lo[k];
      ++k;
    }
    if (k == d) break;
    ++cur[k];
  }
  std::sort(out.begin(), out.end(),
            [](const CandidatePoint& a, const CandidatePoint& b) { return a.coords < b.coords; });
  return out;
}

namespace {

bool same_parity(const Integer& a, long long b) {
  const Integer diff = a - b;
  return diff % 2 == 0;
}

bool parity_holds(const CandidatePoint& p, long long chi_f, long long chi_s) {
  if (p.coords.size() != 2) throw InputError("parity filter expects rank-2 points");
  return same_parity(p.coords[0], chi_f) && same_parity(p.coords[1], chi_s);
}

void require_even(long long chi_f, long long chi_s) {
  if (chi_f % 2 != 0 || chi_s % 2 != 0)
    throw InputError("closed orientable surfaces have even Euler characteristic");
}

}  // namespace

std::vector<CandidatePoint> mark_parity(std::vector<CandidatePoint> points, long long chi_f,
                                        long long chi_s) {
  require_even(chi_f, chi_s);
  for (auto& p : points) p.parity_ok = parity_holds(p, chi_f, chi_s);
  return points;
}

std::vector<CandidatePoint> parity_filter(const std::vector<CandidatePoint>& points,
                                          long long chi_f, long long chi_s) {
  std::vector<CandidatePoint> kept;
  for (auto& p : mark_parity(points, chi_f, chi_s))
    if (p.parity_ok) kept.push_back(std::move(p));
  return kept;
}

CandidatePoint classify_realizability(CandidatePoint p, int genus) {
  p.paper_counterexample = false;
  if (!p.parity_ok || p.location == Location::exterior) {
    p.realizability = Realizability::excluded;
    return p;
  }
  switch (p.location) {
    case Location::interior:
      p.realizability = Realizability::interior_unknown;
      break;
    case Location::boundary_vertex:
      p.realizability = Realizability::realizable_vertex;
      break;
    case Location::boundary_nonvertex: {
      p.realizability = Realizability::candidate;
      const Integer target = 2LL * genus - 2;
      p.paper_counterexample =
          p.coords.size() == 2 && p.coords[0] == 0 && (p.coords[1] == target || p.coords[1] == -target);
      break;
    }
    case Location::exterior:
      break;
  }
  return p;
}

Rational covering_pullback_value(const Rational& x_val, long long degree) {
  if (degree < 1) throw InputError("covering degree must be positive");
  return x_val * degree;
}

CandidateReport candidate_pipeline(const NormSpec& spec, int genus) {
  RatPolytope ball = norm_ball_from_values(spec);
  RatPolytope dual = polar_dual(ball);
  auto boundary = mark_parity(integral_boundary_points(dual), spec.chi_f, spec.chi_s);
  std::vector<CandidatePoint> candidates;
  for (auto& p : boundary) {
    p = classify_realizability(std::move(p), genus);
    if (p.parity_ok) candidates.push_back(p);
  }
  return CandidateReport{spec, std::move(ball), std::move(dual), std::move(boundary),
                         std::move(candidates)};
}

}  // namespace tautkit
