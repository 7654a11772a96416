#pragma once

// Rank-2 Thurston-norm data on span{[F], [S]}: the unit ball, its polar (the
// dual unit ball), the integral points on the dual sphere and their
// realizability status as Euler classes.
//
// Coordinates are (F, S) on homology and (<e,[F]>, <e,[S]>) on cohomology.

#include "tautkit/polytope.hpp"

#include <string>
#include <vector>

namespace tautkit {

struct NormSpec {
  Rational x_f;        // x(F)
  Rational x_s;        // x(S)
  Rational x_s_plus_f;   // x(S + F)
  Rational x_s_minus_f;  // x(S - F)
  long long chi_f = 0;
  long long chi_s = 0;

  /// x(F) = 2, x(S) = 2g - 2, x(S +- F) = 2g, chi = (-2, 2 - 2g).
  static NormSpec fibered_family(int genus);

  /// Positive values and the triangle inequalities among F, S, S+F, S-F.
  void validate() const;
};

/// Unit ball of the norm that is linear between consecutive rays of
/// +-F, +-S, +-(S+F), +-(S-F). When x(S+-F) = x(S) + x(F) this is the
/// diamond on (+-1/x(F), 0), (0, +-1/x(S)). Throws InputError when the values
/// are not those of a norm.
RatPolytope norm_ball_from_values(const NormSpec& spec);

/// max over ball vertices of <u, v>.
Rational dual_norm_eval(const RatPolytope& ball, const RatVector& u);

enum class Realizability { realizable_vertex, candidate, interior_unknown, excluded };

std::string to_string(Realizability r);

struct CandidatePoint {
  IntVector coords;
  Location location = Location::exterior;
  bool parity_ok = false;
  Realizability realizability = Realizability::excluded;
  bool paper_counterexample = false;

  friend bool operator==(const CandidatePoint&, const CandidatePoint&) = default;
};

/// All integer points of the boundary of `dual`, sorted, each labelled
/// boundary-vertex or boundary-nonvertex.
std::vector<CandidatePoint> integral_boundary_points(const RatPolytope& dual);

/// Keeps points with u_F = chi(F) and u_S = chi(S) mod 2. Throws InputError
/// if either chi entry is odd.
std::vector<CandidatePoint> parity_filter(const std::vector<CandidatePoint>& points,
                                          long long chi_f, long long chi_s);

/// Sets parity_ok on every point without dropping any.
std::vector<CandidatePoint> mark_parity(std::vector<CandidatePoint> points, long long chi_f,
                                        long long chi_s);

/// Classification from location and parity; (0, +-(2g-2)) on the boundary
/// with good parity is flagged as the counterexample class.
CandidatePoint classify_realizability(CandidatePoint p, int genus);

/// x(p^* a) = deg(p) x(a) for a finite covering p.
Rational covering_pullback_value(const Rational& x_val, long long degree);

struct CandidateReport {
  NormSpec spec;
  RatPolytope ball;
  RatPolytope dual_ball;
  std::vector<CandidatePoint> boundary;    // every boundary point, classified
  std::vector<CandidatePoint> candidates;  // parity survivors, classified
};

/// Runs spec -> ball -> dual -> boundary points -> parity -> classification.
CandidateReport candidate_pipeline(const NormSpec& spec, int genus);

}  // namespace tautkit
