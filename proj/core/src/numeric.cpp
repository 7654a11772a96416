#include "tautkit/numeric.hpp"

#include <cctype>

namespace tautkit {

std::string to_string(const Integer& value) { return value.str(); }

std::string to_string(const Rational& value) {
  const auto den = boost::multiprecision::denominator(value);
  if (den == 1) return boost::multiprecision::numerator(value).str();
  return boost::multiprecision::numerator(value).str() + "/" + den.str();
}

namespace {

bool is_decimal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Integer decimal(std::string_view s) {
  bool negative = false;
  if (s.front() == '-' || s.front() == '+') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Integer out = 0;
  for (char c : s) out = out * 10 + (c - '0');
  return negative ? Integer(-out) : out;
}

}  // namespace

Integer parse_integer(std::string_view text) {
  if (!is_decimal(text)) {
    throw InputError("not an integer: '" + std::string(text) + "'");
  }
  return decimal(text);
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const auto num = text.substr(0, slash);
  const auto den = text.substr(slash + 1);
  if (!is_decimal(num) || !is_decimal(den) || den.front() == '-' || den.front() == '+') {
    throw InputError("not a rational 'p/q': '" + std::string(text) + "'");
  }
  const Integer q = decimal(den);
  if (q == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  return Rational(decimal(num), q);
}

Rational dot(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw InputError("dot: dimension mismatch");
  Rational acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

RatVector to_rational(const IntVector& v) {
  RatVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

Integer floor_of(const Rational& r) {
  const Integer& p = boost::multiprecision::numerator(r);
  const Integer& q = boost::multiprecision::denominator(r);
  Integer quot = p / q;  // truncates toward zero
  if (p < 0 && quot * q != p) --quot;
  return quot;
}

Integer ceil_of(const Rational& r) {
  const Integer f = floor_of(r);
  return Rational(f) == r ? f : Integer(f + 1);
}

}  // namespace tautkit
