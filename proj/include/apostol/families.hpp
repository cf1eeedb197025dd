#pragma once

#include <vector>

#include "apostol/egf_series.hpp"
#include "apostol/params.hpp"
#include "apostol/polynomial.hpp"

namespace apostol {

// The unified family V_n(x; lambda; mu) is generated by
//
//     (2 - mu + (mu/2) t) / (lambda e^t + (1 - mu)) * e^{xt}
//       = sum V_n(x; lambda; mu) t^n / n!
//
// mu = 0 gives the Apostol-Euler family, mu = 2 the Apostol-Bernoulli family,
// and lambda = 1 specializes those to the classical Euler and Bernoulli
// polynomials. Numbers are the values at x = 0.

/// EGF of 2 - mu + (mu/2) t, i.e. coefficients [2-mu, mu/2, 0, ...].
EgfSeries unified_numerator(const Params& p, int order);

/// EGF of lambda e^t + (1 - mu): constant term lambda + 1 - mu, then lambda.
EgfSeries unified_denominator(const Params& p, int order);

/// [V_0(lambda;mu), ..., V_{n_max}(lambda;mu)] by series division.
std::vector<Rational> unified_numbers(const Params& p, int n_max);

std::vector<Rational> apostol_bernoulli_numbers(const Rational& lambda, int n_max);
std::vector<Rational> apostol_euler_numbers(const Rational& lambda, int n_max);

/// V_n(x; lambda; mu) = sum_k C(n,k) V_k(lambda;mu) x^{n-k}.
Poly unified_poly(const Params& p, int n);

/// All of V_0 .. V_{n_max} with the numbers computed once.
std::vector<Poly> unified_polys(const Params& p, int n_max);

Poly apostol_bernoulli_poly(const Rational& lambda, int n);
std::vector<Poly> apostol_bernoulli_polys(const Rational& lambda, int n_max);
Poly apostol_euler_poly(const Rational& lambda, int n);
std::vector<Poly> apostol_euler_polys(const Rational& lambda, int n_max);

}  // namespace apostol
