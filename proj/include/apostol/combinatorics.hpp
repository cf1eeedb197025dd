#pragma once

#include "apostol/rational.hpp"

namespace apostol {

/// C(n, k) as an exact integer-valued rational; 0 outside 0 <= k <= n.
/// Backed by a shared Pascal-triangle table that grows on demand.
Rational binomial(int n, int k);

/// Builds the shared binomial table up to row max_n. Call once before fanning
/// out parallel work so later lookups are read-only.
void prewarm_binomials(int max_n);

/// x(x-1)...(x-n+1); the empty product (n = 0) is 1.
Rational falling_factorial(const Rational& x, int n);

Rational factorial(int n);

}  // namespace apostol
