#include "apostol/families.hpp"

#include "apostol/combinatorics.hpp"

namespace apostol {

EgfSeries unified_numerator(const Params& p, int order) {
  EgfSeries s(order);
  s[0] = Rational(2) - p.mu();
  if (order >= 1) s[1] = p.mu() / 2;
  return s;
}

EgfSeries unified_denominator(const Params& p, int order) {
  EgfSeries s(order);
  s[0] = p.lambda() + 1 - p.mu();
  for (int n = 1; n <= order; ++n) s[n] = p.lambda();
  return s;
}

std::vector<Rational> unified_numbers(const Params& p, int n_max) {
  if (n_max < 0) throw std::invalid_argument("unified_numbers: negative n_max");
  p.require_series();
  // In the BernoulliSingular case the denominator has valuation 1, which the
  // division cancels, so one extra order of headroom is needed.
  const int v = p.kind() == ParamsKind::BernoulliSingular ? 1 : 0;
  const int N = n_max + v;
  const EgfSeries q = egf_div(unified_numerator(p, N), unified_denominator(p, N));
  return q.coeffs();
}

std::vector<Rational> apostol_bernoulli_numbers(const Rational& lambda, int n_max) {
  return unified_numbers(Params(lambda, Rational(2)), n_max);
}

std::vector<Rational> apostol_euler_numbers(const Rational& lambda, int n_max) {
  return unified_numbers(Params(lambda, Rational(0)), n_max);
}

namespace {

// P_n(x) = sum_k C(n,k) numbers[k] x^{n-k} for each n up to the table size.
std::vector<Poly> appell_polys(const std::vector<Rational>& numbers) {
  std::vector<Poly> polys;
  polys.reserve(numbers.size());
  for (size_t n = 0; n < numbers.size(); ++n) {
    std::vector<Rational> coeffs(n + 1);
    for (size_t j = 0; j <= n; ++j)
      coeffs[j] = binomial(static_cast<int>(n), static_cast<int>(j)) * numbers[n - j];
    polys.emplace_back(std::move(coeffs));
  }
  return polys;
}

}  // namespace

std::vector<Poly> unified_polys(const Params& p, int n_max) {
  return appell_polys(unified_numbers(p, n_max));
}

Poly unified_poly(const Params& p, int n) { return unified_polys(p, n).back(); }

std::vector<Poly> apostol_bernoulli_polys(const Rational& lambda, int n_max) {
  return unified_polys(Params(lambda, Rational(2)), n_max);
}

Poly apostol_bernoulli_poly(const Rational& lambda, int n) {
  return apostol_bernoulli_polys(lambda, n).back();
}

std::vector<Poly> apostol_euler_polys(const Rational& lambda, int n_max) {
  return unified_polys(Params(lambda, Rational(0)), n_max);
}

Poly apostol_euler_poly(const Rational& lambda, int n) {
  return apostol_euler_polys(lambda, n).back();
}

}  // namespace apostol
