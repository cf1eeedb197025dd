#pragma once

#include <initializer_list>
#include <iosfwd>
#include <vector>

#include "apostol/rational.hpp"

namespace apostol {

// Dense univariate polynomial over Rational in the power basis, coeffs[i]
// multiplying x^i. Trailing zeros are always trimmed, so equality is plain
// coefficient comparison and the zero polynomial is the empty vector.
class Poly {
 public:
  Poly() = default;
  Poly(std::initializer_list<Rational> coeffs);
  explicit Poly(std::vector<Rational> coeffs);

  static Poly constant(const Rational& c);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Coefficient of x^i; zero beyond the degree.
  const Rational& coeff(int i) const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Rational& s);

  friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
  friend Poly operator*(const Rational& s, Poly q) { return q *= s; }

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Exact Horner evaluation.
Rational eval(const Poly& q, const Rational& x);

/// l-th formal derivative (l = 0 is the identity).
Poly derivative(const Poly& q, int l = 1);

/// Antiderivative with zero constant term.
Poly antiderivative(const Poly& q);

/// q(a + s*x) by exact binomial expansion.
Poly affine_sub(const Poly& q, const Rational& a, const Rational& s);

/// q(x + y) = affine_sub(q, y, 1).
Poly shift(const Poly& q, const Rational& y);

/// Ascending coefficient list "[c0, c1, ...]" for logs and test output.
std::ostream& operator<<(std::ostream& os, const Poly& q);

}  // namespace apostol
