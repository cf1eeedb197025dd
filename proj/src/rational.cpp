#include "apostol/rational.hpp"

#include <cctype>

namespace apostol {

Rational make_rational(const Int& num, const Int& den) {
  if (den == 0) throw std::domain_error("make_rational: zero denominator");
  Rational r(num);
  r /= Rational(den);
  return r;
}

Rational rational_pow(const Rational& x, long long n) {
  if (n == 0) return Rational(1);
  if (x == 0) {
    if (n < 0) throw std::domain_error("rational_pow: zero base with negative exponent");
    return Rational(0);
  }
  const unsigned long long e = n < 0 ? static_cast<unsigned long long>(-(n + 1)) + 1
                                     : static_cast<unsigned long long>(n);
  const Int np = boost::multiprecision::pow(numerator(x), static_cast<unsigned>(e));
  const Int dp = boost::multiprecision::pow(denominator(x), static_cast<unsigned>(e));
  return n < 0 ? make_rational(dp, np) : make_rational(np, dp);
}

std::string to_string(const Rational& x) {
  if (denominator(x) == 1) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);

  const auto bad = [&] {
    return std::invalid_argument("parse_rational: expected \"p\" or \"p/q\", got \"" +
                                 std::string(text) + "\"");
  };

  std::string_view num = text;
  std::string_view den = "1";
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  std::string_view digits = num;
  bool negative = false;
  if (!digits.empty() && (digits.front() == '+' || digits.front() == '-')) {
    negative = digits.front() == '-';
    digits.remove_prefix(1);
  }
  if (!all_digits(digits) || !all_digits(den)) throw bad();

  const Int d{std::string(den)};
  if (d == 0) throw bad();
  Int numerator_value{std::string(digits)};
  if (negative) numerator_value = -numerator_value;
  return make_rational(numerator_value, d);
}

bool is_integer(const Rational& x) { return denominator(x) == 1; }

}  // namespace apostol
