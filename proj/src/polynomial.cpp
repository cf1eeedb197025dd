#include "apostol/polynomial.hpp"

#include <algorithm>
#include <ostream>

#include "apostol/combinatorics.hpp"

namespace apostol {

namespace {
const Rational kZero(0);
}

Poly::Poly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::constant(const Rational& c) { return Poly({c}); }

const Rational& Poly::coeff(int i) const {
  if (i < 0 || i > degree()) return kZero;
  return coeffs_[static_cast<size_t>(i)];
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rational& s) {
  if (s == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= s;
  return *this;
}

Rational eval(const Poly& q, const Rational& x) {
  Rational acc(0);
  for (int i = q.degree(); i >= 0; --i) acc = acc * x + q.coeff(i);
  return acc;
}

Poly derivative(const Poly& q, int l) {
  if (l < 0) throw std::invalid_argument("derivative: negative order");
  if (l == 0) return q;
  if (l > q.degree()) return Poly();
  std::vector<Rational> out(static_cast<size_t>(q.degree() - l) + 1);
  for (int i = 0; i <= q.degree() - l; ++i)
    out[static_cast<size_t>(i)] = q.coeff(i + l) * falling_factorial(Rational(i + l), l);
  return Poly(std::move(out));
}

Poly antiderivative(const Poly& q) {
  if (q.is_zero()) return Poly();
  std::vector<Rational> out(static_cast<size_t>(q.degree()) + 2);
  for (int i = 0; i <= q.degree(); ++i) out[static_cast<size_t>(i) + 1] = q.coeff(i) / Rational(i + 1);
  return Poly(std::move(out));
}

Poly affine_sub(const Poly& q, const Rational& a, const Rational& s) {
  if (q.is_zero()) return Poly();
  // q(a + s x) = sum_i c_i sum_j C(i,j) a^{i-j} s^j x^j, accumulated exactly.
  std::vector<Rational> out(static_cast<size_t>(q.degree()) + 1);
  for (int i = 0; i <= q.degree(); ++i) {
    if (q.coeff(i) == 0) continue;
    Rational a_power(1);  // a^{i-j}, built from j = i downwards
    std::vector<Rational> term(static_cast<size_t>(i) + 1);
    for (int j = i; j >= 0; --j) {
      term[static_cast<size_t>(j)] = binomial(i, j) * a_power * rational_pow(s, j);
      a_power *= a;
    }
    for (int j = 0; j <= i; ++j) out[static_cast<size_t>(j)] += q.coeff(i) * term[static_cast<size_t>(j)];
  }
  return Poly(std::move(out));
}

Poly shift(const Poly& q, const Rational& y) { return affine_sub(q, y, Rational(1)); }

std::ostream& operator<<(std::ostream& os, const Poly& q) {
  os << "[";
  for (int i = 0; i <= q.degree(); ++i) {
    if (i) os << ", ";
    os << to_string(q.coeff(i));
  }
  return os << "]";
}

}  // namespace apostol
