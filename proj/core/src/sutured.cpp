#include "tautkit/sutured.hpp"

#include <cstdlib>
#include <stdexcept>

namespace tautkit {

Rational sutured_chi(const CorneredSurface& s) {
  if (s.convex < 0 || s.concave < 0) throw InputError("corner counts must be nonnegative");
  return Rational(s.base_chi) - Rational(s.convex, 2) + Rational(s.concave, 2);
}

Rational sutured_chi(std::span<const CorneredSurface> components) {
  Rational total = 0;
  for (const auto& c : components) total += sutured_chi(c);
  return total;
}

CorneredSurface core_disk(const SuturedSolidTorus& t) {
  if (t.suture_count < 1 || t.longitude_wraps < 1)
    throw InputError("sutured solid torus needs positive suture count and wraps");
  if (t.meridian_wraps != 1) throw InputError("only sutures with one meridional wrap are modelled");
  return CorneredSurface{1, t.core_disk_crossings(), 0};
}

std::string to_string(TangencyKind k) { return k == TangencyKind::saddle ? "saddle" : "center"; }

TangencyKind parse_tangency_kind(const std::string& s) {
  if (s == "saddle") return TangencyKind::saddle;
  if (s == "center") return TangencyKind::center;
  throw InputError("tangency kind must be \"saddle\" or \"center\", got \"" + s + "\"");
}

namespace {

void check_signs(const TangencyList& t) {
  for (const auto& p : t)
    if (p.sign != 1 && p.sign != -1) throw InputError("tangency sign must be +1 or -1");
}

}  // namespace

long long euler_pairing(const TangencyList& t) {
  check_signs(t);
  long long sum = 0;
  for (const auto& p : t) sum += p.sign * p.index();
  return sum;
}

long long poincare_hopf_chi(const TangencyList& t) {
  check_signs(t);
  long long chi = 0;
  for (const auto& p : t) chi += p.index();
  // Flipping one sign changes the pairing by 2 * index, an even number.
  if ((chi - euler_pairing(t)) % 2 != 0) throw std::logic_error("parity condition violated");
  return chi;
}

bool fully_marked_check(const TangencyList& t) {
  check_signs(t);
  for (const auto& p : t)
    if (p.kind == TangencyKind::center)
      throw InputError("fully-marked check needs saddle tangencies only");
  for (const auto& p : t)
    if (p.sign != t.front().sign) return false;
  return true;
}

std::string to_string(WitnessStep::Op op) {
  return op == WitnessStep::Op::semigroup ? "semigroup" : "pi1";
}

NovikovWitness novikov_witness(long long k, long long m) {
  if (k == 0 || m == 0) throw InputError("novikov witness needs nonzero k and m");
  NovikovWitness w{k, m, std::llabs(k), {}};
  Integer total = 0;
  for (long long i = 0; i < w.normalized_k; ++i) {
    total += m;
    w.steps.push_back({WitnessStep::Op::semigroup, Integer(m), total});
  }
  const Integer correction = -Integer(w.normalized_k) * m;
  total += correction;
  w.steps.push_back({WitnessStep::Op::pi1, correction, total});
  return w;
}

}  // namespace tautkit
