#include "apostol/oracles.hpp"

#include "apostol/combinatorics.hpp"

namespace apostol {

std::vector<Rational> bernoulli_numbers_recurrence(int n_max) {
  if (n_max < 0) throw std::invalid_argument("bernoulli_numbers_recurrence: negative n_max");
  std::vector<Rational> b(static_cast<size_t>(n_max) + 1);
  b[0] = 1;
  for (int n = 1; n <= n_max; ++n) {
    Rational acc(0);
    for (int k = 0; k < n; ++k) acc += binomial(n + 1, k) * b[static_cast<size_t>(k)];
    b[static_cast<size_t>(n)] = -acc / Rational(n + 1);
  }
  return b;
}

std::vector<Poly> classical_bernoulli_oracles(int n_max) {
  const std::vector<Rational> b = bernoulli_numbers_recurrence(n_max);
  std::vector<Poly> polys;
  polys.reserve(b.size());
  for (int n = 0; n <= n_max; ++n) {
    std::vector<Rational> coeffs(static_cast<size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) coeffs[static_cast<size_t>(j)] = binomial(n, j) * b[static_cast<size_t>(n - j)];
    polys.emplace_back(std::move(coeffs));
  }
  return polys;
}

Poly classical_bernoulli_oracle(int n) { return classical_bernoulli_oracles(n).back(); }

Poly classical_euler_oracle(int n) {
  if (n < 0) throw std::invalid_argument("classical_euler_oracle: negative n");
  // Coefficients of E_n solve E_n(x+1) + E_n(x) = 2x^n triangularly from the
  // top: e_n = 1, then e_i = -(1/2) sum_{j>i} C(j,i) e_j.
  std::vector<Rational> e(static_cast<size_t>(n) + 1);
  e[static_cast<size_t>(n)] = 1;
  for (int i = n - 1; i >= 0; --i) {
    Rational acc(0);
    for (int j = i + 1; j <= n; ++j) acc += binomial(j, i) * e[static_cast<size_t>(j)];
    e[static_cast<size_t>(i)] = -acc / 2;
  }
  return Poly(std::move(e));
}

std::vector<Poly> classical_euler_oracles(int n_max) {
  std::vector<Poly> polys;
  polys.reserve(static_cast<size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) polys.push_back(classical_euler_oracle(n));
  return polys;
}

}  // namespace apostol
