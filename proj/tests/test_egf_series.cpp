#include <doctest.h>

#include <random>

#include "apostol/combinatorics.hpp"
#include "apostol/egf_series.hpp"

using namespace apostol;

namespace {

// In-test oracle, independent of egf_div: Bernoulli numbers from the
// recurrence sum_{k=0}^{n} C(n+1,k) B_k = [n = 0].
std::vector<Rational> bernoulli_oracle(int n_max) {
  std::vector<Rational> b(static_cast<size_t>(n_max) + 1);
  b[0] = 1;
  for (int n = 1; n <= n_max; ++n) {
    Rational acc(0);
    for (int k = 0; k < n; ++k) acc += binomial(n + 1, k) * b[static_cast<size_t>(k)];
    b[static_cast<size_t>(n)] = -acc / Rational(n + 1);
  }
  return b;
}

// In-test oracle: constant terms of E_n via the triangular solve of
// E_n(x+1) + E_n(x) = 2 x^n.
std::vector<Rational> euler_at_zero_oracle(int n_max) {
  std::vector<Rational> values;
  for (int n = 0; n <= n_max; ++n) {
    std::vector<Rational> e(static_cast<size_t>(n) + 1);
    e[static_cast<size_t>(n)] = 1;
    for (int i = n - 1; i >= 0; --i) {
      Rational acc(0);
      for (int j = i + 1; j <= n; ++j) acc += binomial(j, i) * e[static_cast<size_t>(j)];
      e[static_cast<size_t>(i)] = -acc / 2;
    }
    values.push_back(e[0]);
  }
  return values;
}

EgfSeries exp_plus_const(const Rational& c, int order) {
  EgfSeries s = exp_affine(Rational(1), order);
  s[0] += c;
  return s;
}

}  // namespace

TEST_CASE("egf_mul binomial convolution") {
  const EgfSeries et = exp_affine(Rational(1), 3);
  const EgfSeries product = egf_mul(et, et);
  CHECK(product.coeffs() == std::vector<Rational>{1, 2, 4, 8});  // e^t * e^t = e^{2t}

  EgfSeries one(3);
  one[0] = 1;
  EgfSeries b(3, {Rational(3), make_rational(1, 2), Rational(-7), Rational(0)});
  CHECK(egf_mul(one, b) == b);

  EgfSeries t(3);
  t[1] = 1;
  CHECK(egf_mul(t, et).coeffs() == std::vector<Rational>{0, 1, 2, 3});  // t e^t

  CHECK_THROWS_AS(egf_mul(EgfSeries(2), EgfSeries(3)), std::invalid_argument);
}

TEST_CASE("egf_div reproduces Bernoulli numbers from t/(e^t - 1)") {
  const int N = 16;
  EgfSeries num(N);
  num[1] = 1;
  EgfSeries den = exp_plus_const(Rational(-1), N);  // e^t - 1, valuation 1
  const EgfSeries q = egf_div(num, den);
  CHECK(q.order() == N - 1);
  CHECK(q.coeffs() == bernoulli_oracle(N - 1));
}

TEST_CASE("egf_div reproduces Euler values at zero from 2/(e^t + 1)") {
  const int N = 10;
  EgfSeries num(N);
  num[0] = 2;
  const EgfSeries q = egf_div(num, exp_plus_const(Rational(1), N));
  CHECK(q.coeffs() == euler_at_zero_oracle(N));
  CHECK(q.coeffs()[0] == 1);
  CHECK(q.coeffs()[1] == make_rational(-1, 2));
  CHECK(q.coeffs()[2] == 0);
  CHECK(q.coeffs()[3] == make_rational(1, 4));
}

TEST_CASE("self-division of a unit series is the constant 1") {
  const EgfSeries s = exp_plus_const(Rational(2), 8);
  EgfSeries one(8);
  one[0] = 1;
  CHECK(egf_div(s, s) == one);
}

TEST_CASE("valuation shift: t^2 / (t e^t) = t e^{-t}") {
  const int N = 6;
  EgfSeries num(N);
  num[2] = 2;  // t^2 = 2 t^2/2!
  EgfSeries den(N);
  for (int n = 1; n <= N; ++n) den[n] = n;  // t e^t
  const EgfSeries q = egf_div(num, den);
  CHECK(q.order() == N - 1);
  for (int n = 0; n <= q.order(); ++n)
    CHECK(q[n] == Rational(n % 2 == 0 ? -n : n));  // n (-1)^{n-1}
}

TEST_CASE("egf_div error paths") {
  EgfSeries num(4);
  num[0] = 2;
  EgfSeries den = exp_plus_const(Rational(-1), 4);
  CHECK_THROWS_AS(egf_div(num, den), IllDefinedError);  // pole at t = 0
  CHECK_THROWS_AS(egf_div(num, EgfSeries(4)), std::domain_error);
  CHECK_THROWS_AS(egf_div(EgfSeries(3), EgfSeries(4)), std::invalid_argument);
}

TEST_CASE("exp_affine") {
  CHECK(exp_affine(Rational(0), 3).coeffs() == std::vector<Rational>{1, 0, 0, 0});
  CHECK(exp_affine(Rational(1), 2).coeffs() == std::vector<Rational>{1, 1, 1});
  CHECK(exp_affine(make_rational(2, 3), 2).coeffs() ==
        std::vector<Rational>{Rational(1), make_rational(2, 3), make_rational(4, 9)});
}

TEST_CASE("division round-trips against multiplication") {
  std::mt19937_64 rng(99);
  const auto draw = [&rng] {
    return make_rational(static_cast<long long>(rng() % 19) - 9,
                         static_cast<long long>(rng() % 9) + 1);
  };
  for (int iter = 0; iter < 25; ++iter) {
    const int N = 8;
    EgfSeries a(N), b(N);
    do {
      a[0] = draw();
    } while (a[0] == 0);
    for (int n = 1; n <= N; ++n) a[n] = draw();
    for (int n = 0; n <= N; ++n) b[n] = draw();
    CHECK(egf_mul(egf_div(b, a), a) == b);
  }
}

TEST_CASE("resized pads with zeros or truncates") {
  EgfSeries s(2, {Rational(1), Rational(2), Rational(3)});
  CHECK(s.resized(4).coeffs() == std::vector<Rational>{1, 2, 3, 0, 0});
  CHECK(s.resized(1).coeffs() == std::vector<Rational>{1, 2});
}
