#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace apostol {

using Int = boost::multiprecision::cpp_int;

// Arbitrary-precision rational, kept in canonical reduced form: positive
// denominator, gcd(|num|, den) = 1, zero stored as 0/1. Every scalar in the
// library is one of these; no floating point anywhere.
using Rational = boost::multiprecision::cpp_rational;

// Requested series has a pole at t = 0, so no formal power series exists.
class IllDefinedError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// num/den reduced to canonical form; den may carry the sign. den = 0 throws.
Rational make_rational(const Int& num, const Int& den);

/// Exact integer power, with 0^0 = 1. Zero base with a negative exponent throws.
Rational rational_pow(const Rational& x, long long n);

/// "p/q" with q > 0 and the sign on p; integer values render as plain "p".
std::string to_string(const Rational& x);

/// Accepts "p" or "p/q" (q a positive integer, optional sign on p).
Rational parse_rational(std::string_view text);

bool is_integer(const Rational& x);

}  // namespace apostol
