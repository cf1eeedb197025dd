#pragma once

#include <vector>

#include "apostol/polynomial.hpp"

namespace apostol {

// Classical Bernoulli and Euler polynomials built from their defining
// recurrences, deliberately independent of the series-division path so the
// two constructions can cross-validate each other:
//   Bernoulli numbers from sum_{k=0}^{n} C(n+1,k) B_k = [n = 0],
//   Euler polynomials from the triangular solve of E_n(x+1) + E_n(x) = 2x^n.

std::vector<Rational> bernoulli_numbers_recurrence(int n_max);

Poly classical_bernoulli_oracle(int n);
std::vector<Poly> classical_bernoulli_oracles(int n_max);

Poly classical_euler_oracle(int n);
std::vector<Poly> classical_euler_oracles(int n_max);

}  // namespace apostol
