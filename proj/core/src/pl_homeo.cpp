#include "tautkit/pl_homeo.hpp"

#include <algorithm>
#include <set>

namespace tautkit {

namespace {

bool strictly_increasing(const RatVector& v) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (!(v[i - 1] < v[i])) return false;
  return true;
}

// Linear interpolation on the piece [x0, x1] -> [y0, y1].
Rational lerp(const Rational& x0, const Rational& x1, const Rational& y0, const Rational& y1,
              const Rational& x) {
  return y0 + (x - x0) * (y1 - y0) / (x1 - x0);
}

}  // namespace

PLHomeo::PLHomeo(RatVector breakpoints, RatVector values)
    : breakpoints_(std::move(breakpoints)), values_(std::move(values)) {
  if (breakpoints_.size() < 2 || breakpoints_.size() != values_.size())
    throw InputError("PL map needs matching breakpoint and value lists of length >= 2");
  if (!strictly_increasing(breakpoints_)) throw InputError("PL map: breakpoints not increasing");
  if (!strictly_increasing(values_)) throw InputError("PL map: values not increasing");
  if (values_.front() != breakpoints_.front() || values_.back() != breakpoints_.back())
    throw InputError("PL map must fix both endpoints");
}

PLHomeo PLHomeo::identity(const Rational& lo, const Rational& hi) { return PLHomeo({lo, hi}, {lo, hi}); }

Rational PLHomeo::operator()(const Rational& x) const {
  if (x < lo() || x > hi()) throw InputError("PL map evaluated outside its domain");
  auto it = std::lower_bound(breakpoints_.begin(), breakpoints_.end(), x);
  auto i = static_cast<std::size_t>(it - breakpoints_.begin());
  if (breakpoints_[i] == x) return values_[i];
  return lerp(breakpoints_[i - 1], breakpoints_[i], values_[i - 1], values_[i], x);
}

PLHomeo PLHomeo::inverse() const { return PLHomeo(values_, breakpoints_); }

PLHomeo PLHomeo::normalized() const {
  RatVector xs{breakpoints_.front()};
  RatVector ys{values_.front()};
  for (std::size_t i = 1; i + 1 < breakpoints_.size(); ++i) {
    const Rational left = (values_[i] - ys.back()) / (breakpoints_[i] - xs.back());
    const Rational right = (values_[i + 1] - values_[i]) / (breakpoints_[i + 1] - breakpoints_[i]);
    if (left != right) {
      xs.push_back(breakpoints_[i]);
      ys.push_back(values_[i]);
    }
  }
  xs.push_back(breakpoints_.back());
  ys.push_back(values_.back());
  return PLHomeo(std::move(xs), std::move(ys));
}

bool PLHomeo::is_identity() const { return breakpoints_ == values_; }

PLHomeo PLHomeo::conjugated_to(const Rational& new_lo, const Rational& new_hi) const {
  if (!(new_lo < new_hi)) throw InputError("PL map: empty target interval");
  const Rational scale = (new_hi - new_lo) / (hi() - lo());
  RatVector xs, ys;
  for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
    xs.push_back(new_lo + (breakpoints_[i] - lo()) * scale);
    ys.push_back(new_lo + (values_[i] - lo()) * scale);
  }
  return PLHomeo(std::move(xs), std::move(ys));
}

bool operator==(const PLHomeo& a, const PLHomeo& b) {
  const PLHomeo na = a.normalized();
  const PLHomeo nb = b.normalized();
  return na.breakpoints_ == nb.breakpoints_ && na.values_ == nb.values_;
}

PLHomeo compose(const PLHomeo& f, const PLHomeo& g) {
  if (f.lo() != g.lo() || f.hi() != g.hi()) throw InputError("compose: domain mismatch");
  // Slopes of f o g can only change at breakpoints of g or preimages under g
  // of breakpoints of f.
  std::set<Rational> xs(g.breakpoints().begin(), g.breakpoints().end());
  const PLHomeo g_inv = g.inverse();
  for (const auto& b : f.breakpoints()) xs.insert(g_inv(b));
  RatVector bx(xs.begin(), xs.end());
  RatVector by;
  by.reserve(bx.size());
  for (const auto& x : bx) by.push_back(f(g(x)));
  return PLHomeo(std::move(bx), std::move(by));
}

bool is_shift(const PLHomeo& f) {
  // f(x) - x vanishes at both ends and is linear in between breakpoints, so it
  // has no interior zero iff it is nonzero with one sign at every interior
  // breakpoint.
  const auto& xs = f.breakpoints();
  const auto& ys = f.values();
  if (xs.size() < 3) return false;
  int sign = 0;
  for (std::size_t i = 1; i + 1 < xs.size(); ++i) {
    const Rational d = ys[i] - xs[i];
    if (d == 0) return false;
    const int s = d > 0 ? 1 : -1;
    if (sign != 0 && s != sign) return false;
    sign = s;
  }
  return true;
}

}  // namespace tautkit
