#include "apostol/egf_series.hpp"

#include <algorithm>

#include "apostol/combinatorics.hpp"

namespace apostol {

EgfSeries::EgfSeries(int order) : coeffs_(static_cast<size_t>(order) + 1) {
  if (order < 0) throw std::invalid_argument("EgfSeries: negative order");
}

EgfSeries::EgfSeries(int order, std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (order < 0 || coeffs_.size() != static_cast<size_t>(order) + 1)
    throw std::invalid_argument("EgfSeries: coefficient count must be order + 1");
}

EgfSeries EgfSeries::resized(int order) const {
  EgfSeries out(order);
  const int keep = std::min(order, this->order());
  for (int n = 0; n <= keep; ++n) out[n] = coeffs_[static_cast<size_t>(n)];
  return out;
}

bool EgfSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

EgfSeries egf_mul(const EgfSeries& a, const EgfSeries& b) {
  if (a.order() != b.order()) throw std::invalid_argument("egf_mul: order mismatch");
  const int N = a.order();
  EgfSeries c(N);
  for (int n = 0; n <= N; ++n) {
    Rational acc(0);
    for (int k = 0; k <= n; ++k) acc += binomial(n, k) * a[k] * b[n - k];
    c[n] = acc;
  }
  return c;
}

EgfSeries egf_div(const EgfSeries& num, const EgfSeries& den) {
  if (num.order() != den.order()) throw std::invalid_argument("egf_div: order mismatch");
  const int N = den.order();

  int v = 0;
  while (v <= N && den[v] == 0) ++v;
  if (v > N) throw std::domain_error("egf_div: division by the zero series");
  for (int j = 0; j < v; ++j)
    if (num[j] != 0)
      throw IllDefinedError(
          "egf_div: numerator nonzero below the denominator valuation (pole at t = 0)");

  // Factor out t^v from both sides. With a_{n+v} t^{n+v}/(n+v)! = t^v b_n t^n/n!
  // the shifted EGF coefficients are b_n = a_{n+v} n!/(n+v)!.
  const int M = N - v;
  std::vector<Rational> nn(static_cast<size_t>(M) + 1), dd(static_cast<size_t>(M) + 1);
  for (int n = 0; n <= M; ++n) {
    Rational scale(1);
    for (int j = 1; j <= v; ++j) scale /= Rational(n + j);
    nn[static_cast<size_t>(n)] = num[n + v] * scale;
    dd[static_cast<size_t>(n)] = den[n + v] * scale;
  }

  // q_n = (nn_n - sum_{k<n} C(n,k) q_k dd_{n-k}) / dd_0
  std::vector<Rational> q(static_cast<size_t>(M) + 1);
  for (int n = 0; n <= M; ++n) {
    Rational acc = nn[static_cast<size_t>(n)];
    for (int k = 0; k < n; ++k) acc -= binomial(n, k) * q[static_cast<size_t>(k)] * dd[static_cast<size_t>(n - k)];
    q[static_cast<size_t>(n)] = acc / dd[0];
  }
  return EgfSeries(M, std::move(q));
}

EgfSeries exp_affine(const Rational& c, int order) {
  EgfSeries s(order);
  Rational power(1);
  for (int n = 0; n <= order; ++n) {
    s[n] = power;
    power *= c;
  }
  return s;
}

}  // namespace apostol
