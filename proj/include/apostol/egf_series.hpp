#pragma once

#include <vector>

#include "apostol/rational.hpp"

namespace apostol {

// Truncated exponential generating function: coeffs[n] is the a_n in
// sum a_n t^n / n!, held through a fixed order N.
class EgfSeries {
 public:
  explicit EgfSeries(int order);                        // zero series
  EgfSeries(int order, std::vector<Rational> coeffs);   // coeffs.size() == order + 1

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& operator[](int n) const { return coeffs_[static_cast<size_t>(n)]; }
  Rational& operator[](int n) { return coeffs_[static_cast<size_t>(n)]; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  /// Same series truncated or zero-padded to the given order.
  EgfSeries resized(int order) const;

  bool is_zero() const;

  friend bool operator==(const EgfSeries&, const EgfSeries&) = default;

 private:
  std::vector<Rational> coeffs_;
};

/// Binomial convolution: c_n = sum_k C(n,k) a_k b_{n-k}. Orders must match.
EgfSeries egf_mul(const EgfSeries& a, const EgfSeries& b);

/// Formal division through the common order. If the denominator has valuation
/// v > 0, the numerator must vanish below v (else IllDefinedError: pole at
/// t = 0); both series are shifted down by v with EGF coefficients rescaled by
/// n!/(n+v)!, and the result has order N - v. egf_mul(result, den) reproduces
/// num through order N - v.
EgfSeries egf_div(const EgfSeries& num, const EgfSeries& den);

/// The series of e^{ct}: coeffs[n] = c^n.
EgfSeries exp_affine(const Rational& c, int order);

}  // namespace apostol
