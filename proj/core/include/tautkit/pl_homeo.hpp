#pragma once

#include "tautkit/numeric.hpp"

namespace tautkit {

/// Increasing piecewise-linear homeomorphism of [lo, hi] fixing both ends,
/// given by its breakpoints and their images.
class PLHomeo {
 public:
  /// Throws InputError unless both sequences are strictly increasing, of the
  /// same length >= 2, and agree at the endpoints.
  PLHomeo(RatVector breakpoints, RatVector values);

  static PLHomeo identity(const Rational& lo, const Rational& hi);

  const Rational& lo() const { return breakpoints_.front(); }
  const Rational& hi() const { return breakpoints_.back(); }
  const RatVector& breakpoints() const { return breakpoints_; }
  const RatVector& values() const { return values_; }

  /// Exact value; throws InputError outside [lo, hi].
  Rational operator()(const Rational& x) const;

  PLHomeo inverse() const;

  /// Drops interior breakpoints where the slope does not change.
  PLHomeo normalized() const;

  bool is_identity() const;

  /// A^-1-conjugate onto [new_lo, new_hi]: A f A^-1 for the increasing affine
  /// map A: [lo, hi] -> [new_lo, new_hi].
  PLHomeo conjugated_to(const Rational& new_lo, const Rational& new_hi) const;

  /// Equal as maps.
  friend bool operator==(const PLHomeo& a, const PLHomeo& b);

 private:
  RatVector breakpoints_;
  RatVector values_;
};

/// f after g. Throws InputError when the domains differ.
PLHomeo compose(const PLHomeo& f, const PLHomeo& g);

/// No fixed points in the open interval.
bool is_shift(const PLHomeo& f);

}  // namespace tautkit
