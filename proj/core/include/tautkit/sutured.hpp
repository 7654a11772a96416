#pragma once

#include "tautkit/numeric.hpp"

#include <span>
#include <string>
#include <vector>

namespace tautkit {

/// A surface with corners: chi = chi(base) - m/2 + n/2 for m convex and n
/// concave corners.
struct CorneredSurface {
  long long base_chi = 0;
  long long convex = 0;
  long long concave = 0;

  friend bool operator==(const CorneredSurface&, const CorneredSurface&) = default;
};

Rational sutured_chi(const CorneredSurface& s);

/// Sum of sutured_chi over the components of a disjoint union.
Rational sutured_chi(std::span<const CorneredSurface> components);

/// Solid torus with parallel sutures, each winding `longitude_wraps` times
/// along the core and once meridionally.
struct SuturedSolidTorus {
  long long suture_count = 2;
  long long longitude_wraps = 1;
  long long meridian_wraps = 1;

  /// Number of times the boundary of a meridian disk crosses the sutures.
  long long core_disk_crossings() const { return suture_count * longitude_wraps; }
};

/// The meridian disk, one convex corner per suture crossing.
CorneredSurface core_disk(const SuturedSolidTorus& t);

enum class TangencyKind { saddle, center };

struct Tangency {
  TangencyKind kind;
  int sign;  // +1 when the orientations of surface and leaf agree

  int index() const { return kind == TangencyKind::saddle ? -1 : 1; }
};

using TangencyList = std::vector<Tangency>;

std::string to_string(TangencyKind k);
TangencyKind parse_tangency_kind(const std::string& s);

/// <e(F), [S]> = sum of sign * index.
long long euler_pairing(const TangencyList& t);

/// chi(S) = sum of index. Checks that it has the parity of euler_pairing.
long long poincare_hopf_chi(const TangencyList& t);

/// All tangencies have the same sign, i.e. <e(F), [S]> = +-chi(S).
/// Throws InputError if a center is present.
bool fully_marked_check(const TangencyList& t);

struct WitnessStep {
  enum class Op { semigroup, pi1 };
  Op op;
  Integer exponent_added;
  Integer running_total;
};

std::string to_string(WitnessStep::Op op);

/// Exponent bookkeeping showing that the identity lies in the transversal
/// semigroup once a positive transversal l^m exists and the leaf carries
/// l^k: |k| semigroup products of l^m, then one product with (l^|k|)^-m.
struct NovikovWitness {
  long long k;
  long long m;
  long long normalized_k;  // |k|; the generator is inverted when k < 0
  std::vector<WitnessStep> steps;

  const Integer& final_exponent() const { return steps.back().running_total; }
};

/// Throws InputError when k or m is zero.
NovikovWitness novikov_witness(long long k, long long m);

}  // namespace tautkit
