#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tautkit {

using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

/// Raised for malformed or out-of-contract input (bad dimensions, unknown
/// labels, unparsable numbers). The CLI maps it to exit code 2.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Decimal string of an integer.
std::string to_string(const Integer& value);

/// Canonical "p/q" form with q > 0 and gcd(p, q) = 1; integers drop the
/// denominator ("-4").
std::string to_string(const Rational& value);

/// Accepts "p", "-p", "p/q". Throws InputError on anything else or q = 0.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

Rational dot(const RatVector& a, const RatVector& b);
RatVector to_rational(const IntVector& v);

Integer floor_of(const Rational& r);
Integer ceil_of(const Rational& r);

inline bool is_integral(const Rational& r) {
  return boost::multiprecision::denominator(r) == 1;
}

}  // namespace tautkit
