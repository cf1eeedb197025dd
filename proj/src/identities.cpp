#include "apostol/identities.hpp"

#include <utility>

#include "apostol/combinatorics.hpp"
#include "apostol/families.hpp"
#include "apostol/oracles.hpp"

namespace apostol {

namespace {

CheckReport make_report(std::string id) {
  CheckReport r;
  r.identity_id = std::move(id);
  return r;
}

void put(CheckReport& r, const char* key, int value) {
  r.instance.emplace_back(key, std::to_string(value));
}

void put(CheckReport& r, const char* key, const Rational& value) {
  r.instance.emplace_back(key, to_string(value));
}

void put_params(CheckReport& r, const Params& p) {
  put(r, "lambda", p.lambda());
  put(r, "mu", p.mu());
}

void finish(CheckReport& r, Rational lhs, Rational rhs) {
  r.equal = lhs == rhs;
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
}

std::vector<Rational> eval_all(const std::vector<Poly>& polys, const Rational& x) {
  std::vector<Rational> values;
  values.reserve(polys.size());
  for (const Poly& q : polys) values.push_back(eval(q, x));
  return values;
}

void require_regular(const Params& p, const char* who) {
  p.require_series();
  if (p.kind() != ParamsKind::Regular)
    throw std::invalid_argument(std::string(who) +
                                ": lambda = mu - 1 makes the rescaled parameter "
                                "lambda/(1-mu) = -1; instance rejected");
}

// Documented errata, each frozen with its minimal counterexample. The values
// are pinned by tests that recompute both sides.
constexpr const char* kUpsilonVariantNote =
    "erratum: Bernoulli entries of Upsilon at parameter lambda (as printed) fail; the "
    "derivation requires lambda/(1-mu). Minimal counterexample n=1, lambda=1, mu=3, x=1: "
    "as-printed lhs = 3/2, rescaled lhs = 1, rhs = 1.";

constexpr const char* kUpsilonRhsNote =
    "erratum: the right-hand side as printed, n(mu-2)x^(n-1) - n(n-1)mu x^(n-2), doubles "
    "the second term; the identity holds with (mu/2)n(n-1)x^(n-2). Counterexample n=2, "
    "lambda=1, mu=3, x=1: lhs = -1, corrected rhs = -1, printed rhs = -4.";

constexpr const char* kIntegralCorollaryNote =
    "erratum: the binomial-sum form of the integral over [x, x+y] as printed uses C(n,k); "
    "the identity holds with C(n+1,k). Counterexample n=1, lambda=1, mu=2, x=0, y=1: "
    "integral = 0, printed sum = 1/4.";

void append_note(CheckReport& r, const char* note) {
  if (!r.note.empty()) r.note += " ";
  r.note += note;
}

}  // namespace

Rational lambda_weight(int n, int k) {
  return binomial(n + 1, k) / (rational_pow(Rational(2), n + 1) * Rational(n + 1));
}

CheckReport check_monomial_determinantal(int n, const Rational& lambda, const Rational& x) {
  if (lambda == 0) throw std::invalid_argument("monomial_determinantal: lambda = 0");
  if (lambda == -1) throw std::invalid_argument("monomial_determinantal: lambda = -1 has no Apostol-Euler family");
  CheckReport r = make_report("monomial_determinantal");
  put(r, "n", n);
  put(r, "lambda", lambda);
  put(r, "x", x);

  const std::vector<Poly> bern = apostol_bernoulli_polys(lambda, n + 1);
  const std::vector<Poly> eul = apostol_euler_polys(lambda, n + 1);
  const std::vector<Rational> bx = eval_all(bern, x), bx1 = eval_all(bern, x + 1);
  const std::vector<Rational> ex = eval_all(eul, x), ex1 = eval_all(eul, x + 1);
  const Rational l2 = lambda * lambda;

  Rational rhs(0);
  for (int k = 0; k <= n + 1; ++k) {
    const size_t i = static_cast<size_t>(n + 1 - k), j = static_cast<size_t>(k);
    rhs += lambda_weight(n, k) * (l2 * bx1[i] * ex1[j] - bx[i] * ex[j]);
  }
  finish(r, rational_pow(x, n), std::move(rhs));
  return r;
}

CheckReport check_monomial_classical(int n, const Rational& x) {
  CheckReport r = make_report("monomial_classical");
  put(r, "n", n);
  put(r, "x", x);

  const std::vector<Poly> bern = classical_bernoulli_oracles(n + 1);
  const std::vector<Poly> eul = classical_euler_oracles(n + 1);
  const std::vector<Rational> bx = eval_all(bern, x), bx1 = eval_all(bern, x + 1);
  const std::vector<Rational> ex = eval_all(eul, x), ex1 = eval_all(eul, x + 1);

  Rational rhs(0);
  for (int k = 0; k <= n + 1; ++k) {
    const size_t i = static_cast<size_t>(n + 1 - k), j = static_cast<size_t>(k);
    rhs += lambda_weight(n, k) * (bx1[i] * ex1[j] - bx[i] * ex[j]);
  }
  finish(r, rational_pow(x, n), std::move(rhs));
  return r;
}

CheckReport check_addition(int n, const Params& p, const Rational& x, const Rational& y) {
  p.require_series();
  CheckReport r = make_report("addition");
  put(r, "n", n);
  put_params(r, p);
  put(r, "x", x);
  put(r, "y", y);

  const std::vector<Poly> vp = unified_polys(p, n);
  Rational rhs(0);
  Poly rhs_poly;
  for (int k = 0; k <= n; ++k) {
    const Rational weight = binomial(n, k) * rational_pow(y, n - k);
    rhs += weight * eval(vp[static_cast<size_t>(k)], x);
    rhs_poly += weight * vp[static_cast<size_t>(k)];
  }
  finish(r, eval(vp[static_cast<size_t>(n)], x + y), std::move(rhs));
  r.equal = r.equal && shift(vp[static_cast<size_t>(n)], y) == rhs_poly;
  return r;
}

CheckReport check_numbers_from_polys(int n, const Params& p, const Rational& x) {
  p.require_series();
  CheckReport r = make_report("numbers_from_polys");
  put(r, "n", n);
  put_params(r, p);
  put(r, "x", x);

  const std::vector<Rational> numbers = unified_numbers(p, n);
  const std::vector<Poly> vp = unified_polys(p, n);
  Rational rhs(0);
  for (int k = 0; k <= n; ++k) {
    const Rational sign((n - k) % 2 == 0 ? 1 : -1);
    rhs += binomial(n, k) * sign * eval(vp[static_cast<size_t>(k)], x) * rational_pow(x, n - k);
  }
  finish(r, numbers[static_cast<size_t>(n)], std::move(rhs));
  return r;
}

CheckReport check_connection_prop(int n, const Params& p, const Rational& x) {
  p.require_series();
  if (p.lambda() == -1)
    throw std::invalid_argument("connection_prop: lambda = -1 has no Apostol-Euler family");
  CheckReport r = make_report("connection_prop");
  put(r, "n", n);
  put_params(r, p);
  put(r, "x", x);

  const std::vector<Rational> numbers = unified_numbers(p, n);
  const std::vector<Poly> bern = apostol_bernoulli_polys(p.lambda(), n + 1);
  const std::vector<Poly> eul = apostol_euler_polys(p.lambda(), n + 1);
  const std::vector<Rational> bx = eval_all(bern, x), bx1 = eval_all(bern, x + 1);
  const std::vector<Rational> ex = eval_all(eul, x), ex1 = eval_all(eul, x + 1);
  const Rational l2 = p.lambda() * p.lambda();

  Rational rhs(0);
  for (int k = 0; k <= n; ++k) {
    Rational inner(0);
    for (int j = 0; j <= k + 1; ++j) {
      const size_t i = static_cast<size_t>(k + 1 - j), jj = static_cast<size_t>(j);
      inner += lambda_weight(k, j) * (l2 * bx1[i] * ex1[jj] - bx[i] * ex[jj]);
    }
    rhs += binomial(n, k) * numbers[static_cast<size_t>(n - k)] * inner;
  }
  finish(r, eval(unified_polys(p, n)[static_cast<size_t>(n)], x), std::move(rhs));
  return r;
}

CheckReport check_raabe(int n, int m, const Rational& mu, const Rational& x) {
  if (m < 1 || m % 2 == 0) throw std::invalid_argument("raabe: m must be an odd positive integer");
  const Params p(Rational(1) - mu, mu);  // rejects mu = 1; always Regular
  CheckReport r = make_report("raabe");
  put(r, "n", n);
  put(r, "m", m);
  put(r, "mu", mu);
  put(r, "x", x);

  const Poly vn = unified_polys(p, n).back();
  Rational lhs(0);
  for (int k = 0; k < m; ++k) {
    const Rational sign(k % 2 == 0 ? 1 : -1);
    lhs += sign * eval(vn, (x + k) / m);
  }
  const Rational euler_term = (Rational(1 - m) / rational_pow(Rational(m), n)) *
                              ((mu - 2) / (2 * (mu - 1))) * eval(classical_euler_oracle(n), x);
  const Rational rhs = euler_term + rational_pow(Rational(m), 1 - n) * eval(vn, x);
  finish(r, std::move(lhs), rhs);
  return r;
}

CheckReport check_raabe_classical(int n, int m, const Rational& x, RaabeFamily family) {
  if (m < 1) throw std::invalid_argument("raabe_classical: m must be positive");
  if (family == RaabeFamily::Euler && m % 2 == 0)
    throw std::invalid_argument("raabe_classical: Euler sum needs odd m");
  CheckReport r = make_report(family == RaabeFamily::Bernoulli ? "raabe_classical_bernoulli"
                                                               : "raabe_classical_euler");
  put(r, "n", n);
  put(r, "m", m);
  put(r, "x", x);

  if (family == RaabeFamily::Bernoulli) {
    const Poly bn = classical_bernoulli_oracle(n);
    Rational lhs(0);
    for (int k = 0; k < m; ++k) lhs += eval(bn, (x + k) / m);
    finish(r, std::move(lhs), rational_pow(Rational(m), 1 - n) * eval(bn, x));
  } else {
    const Poly en = classical_euler_oracle(n);
    Rational lhs(0);
    for (int k = 0; k < m; ++k) {
      const Rational sign(k % 2 == 0 ? 1 : -1);
      lhs += sign * eval(en, (x + k) / m);
    }
    finish(r, std::move(lhs), rational_pow(Rational(m), -n) * eval(en, x));
  }
  return r;
}

CheckReport check_explicit_euler_form(int n, const Params& p, const Rational& x) {
  require_regular(p, "explicit_euler_form");
  CheckReport r = make_report("explicit_euler_form");
  put(r, "n", n);
  put_params(r, p);
  put(r, "x", x);

  const Rational rescaled = p.lambda() / (1 - p.mu());
  const std::vector<Poly> eul = apostol_euler_polys(rescaled, n);
  Rational rhs = (p.mu() - 2) * eval(eul[static_cast<size_t>(n)], x);
  if (n >= 1) rhs -= (p.mu() * n / 2) * eval(eul[static_cast<size_t>(n) - 1], x);
  rhs /= 2 * (p.mu() - 1);
  finish(r, eval(unified_polys(p, n).back(), x), std::move(rhs));
  return r;
}

CheckReport check_convex_combination(int n, const Params& p, const Rational& x) {
  require_regular(p, "convex_combination");
  CheckReport r = make_report("convex_combination");
  put(r, "n", n);
  put_params(r, p);
  put(r, "x", x);

  const Rational euler_param = p.lambda() / (1 - p.mu());
  const Rational bernoulli_param = p.lambda() / (p.mu() - 1);
  const Rational rhs = ((1 - p.mu() / 2) * eval(apostol_euler_poly(euler_param, n), x) -
                        (p.mu() / 2) * eval(apostol_bernoulli_poly(bernoulli_param, n), x)) /
                       (1 - p.mu());
  finish(r, eval(unified_polys(p, n).back(), x), rhs);
  return r;
}

CheckReport check_upsilon_identity(int n, const Params& p, const Rational& x,
                                   UpsilonVariant variant) {
  if (n < 1) throw std::invalid_argument("upsilon: n must be at least 1");
  require_regular(p, "upsilon");
  CheckReport r = make_report(variant == UpsilonVariant::AsPrinted ? "upsilon:AsPrinted"
                                                                   : "upsilon:Rescaled");
  put(r, "n", n);
  put_params(r, p);
  put(r, "x", x);

  const Rational mu = p.mu();
  const Rational w = p.lambda() / (1 - mu);
  const Rational z = x / 2;
  const std::vector<Poly> vp = unified_polys(p, n);
  const std::vector<Rational> vz = eval_all(vp, z), vz1 = eval_all(vp, z + 1);

  // Bernoulli entries of Upsilon at lambda (as printed) or at lambda/(1-mu)
  // (as the derivation requires); Delta_{n,0} is at lambda/(1-mu) either way.
  const std::vector<Poly> bern_w = apostol_bernoulli_polys(w, n);
  std::vector<Poly> bern_printed;
  if (variant == UpsilonVariant::AsPrinted)
    bern_printed = apostol_bernoulli_polys(p.lambda(), n > 1 ? n - 1 : 0);
  const std::vector<Poly>& bern_v =
      variant == UpsilonVariant::AsPrinted ? bern_printed : bern_w;
  const std::vector<Rational> bz = eval_all(bern_v, z), bz1 = eval_all(bern_v, z + 1);
  const Rational w2 = w * w;

  Rational lhs(0);
  for (int k = 1; k <= n; ++k) {
    const size_t i = static_cast<size_t>(n - k), j = static_cast<size_t>(k);
    const Rational upsilon = w2 * bz1[i] * vz1[j] - vz[j] * bz[i];
    lhs += binomial(n, k) * upsilon;
  }
  lhs *= mu - 1;

  const Rational e0 = eval(apostol_euler_poly(w, 0), z);  // constant 2/(w+1)
  const Rational delta_n0 =
      w2 * eval(bern_w[static_cast<size_t>(n)], z + 1) * e0 - eval(bern_w[static_cast<size_t>(n)], z) * e0;
  lhs += (mu / 2 - 1) * delta_n0;

  Rational rhs = Rational(n) * (mu - 2) * rational_pow(x, n - 1);
  Rational rhs_printed = rhs;
  if (n >= 2) {
    const Rational second = Rational(n) * Rational(n - 1) * mu * rational_pow(x, n - 2);
    rhs -= second / 2;
    rhs_printed -= second;
  }

  finish(r, std::move(lhs), std::move(rhs));
  if (!r.equal && variant == UpsilonVariant::AsPrinted) append_note(r, kUpsilonVariantNote);
  if (r.equal && std::get<Rational>(r.rhs) != rhs_printed) append_note(r, kUpsilonRhsNote);
  return r;
}

CheckReport check_derivative(int n, int l, const Params& p) {
  if (l < 0) throw std::invalid_argument("derivative: negative l");
  p.require_series();
  CheckReport r = make_report("derivative");
  put(r, "n", n);
  put(r, "l", l);
  put_params(r, p);

  const std::vector<Poly> vp = unified_polys(p, n);
  Poly lhs = derivative(vp[static_cast<size_t>(n)], l);
  Poly rhs;  // (n)_l vanishes for l > n, so the right side is the zero polynomial
  if (l <= n) rhs = falling_factorial(Rational(n), l) * vp[static_cast<size_t>(n - l)];
  r.equal = lhs == rhs;
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  return r;
}

CheckReport check_integral(int n, const Params& p, const Rational& x, const Rational& y) {
  p.require_series();
  CheckReport r = make_report("integral");
  put(r, "n", n);
  put_params(r, p);
  put(r, "x", x);
  put(r, "y", y);

  const std::vector<Poly> vp = unified_polys(p, n + 1);
  const Poly primitive = antiderivative(vp[static_cast<size_t>(n)]);

  const Rational quadrature = eval(primitive, y) - eval(primitive, x);
  const Rational difference =
      (eval(vp[static_cast<size_t>(n) + 1], y) - eval(vp[static_cast<size_t>(n) + 1], x)) / Rational(n + 1);

  // Endpoint x + y form against the binomial sum; C(n+1,k) is the coefficient
  // that holds, C(n,k) is the printed one.
  const Rational quadrature_xy = eval(primitive, x + y) - eval(primitive, x);
  Rational sum_form(0), sum_printed(0);
  for (int k = 0; k <= n; ++k) {
    const Rational vx = eval(vp[static_cast<size_t>(k)], x) * rational_pow(y, n + 1 - k);
    sum_form += binomial(n + 1, k) * vx;
    sum_printed += binomial(n, k) * vx;
  }
  sum_form /= n + 1;
  sum_printed /= n + 1;

  r.equal = quadrature == difference && quadrature_xy == sum_form;
  r.lhs = quadrature;
  r.rhs = difference;
  if (r.equal && sum_printed != quadrature_xy) append_note(r, kIntegralCorollaryNote);
  return r;
}

CheckReport check_recurrence(int n, const Params& p, const Rational& x) {
  require_regular(p, "recurrence");
  if (p.mu() == 2) throw std::invalid_argument("recurrence: mu = 2 excluded");
  CheckReport r = make_report("recurrence");
  put(r, "n", n);
  put_params(r, p);
  put(r, "x", x);

  const Rational mu = p.mu();
  const Rational lambda = p.lambda();
  const std::vector<Poly> vp = unified_polys(p, n + 1);
  const std::vector<Rational> numbers = unified_numbers(p, n);
  const std::vector<Rational> vx = eval_all(vp, x), vx1 = eval_all(vp, x + 1);

  const Rational geometric = mu / (2 * (mu - 2));
  Rational rhs(0);
  for (int i = 0; i <= n; ++i) {
    Rational convolution(0);
    for (int k = 0; k <= i; ++k)
      convolution += binomial(i, k) * numbers[static_cast<size_t>(k)] * vx1[static_cast<size_t>(i - k)];
    const Rational bracket = (mu / 2) * vx[static_cast<size_t>(i)] - lambda * convolution;
    rhs += binomial(n, i) * factorial(n - i) * rational_pow(geometric, n - i) * bracket;
  }
  rhs /= 2 - mu;

  finish(r, vx[static_cast<size_t>(n) + 1] - x * vx[static_cast<size_t>(n)], std::move(rhs));
  return r;
}

CheckReport check_umbral_translation(int n, const Params& p, const Rational& x) {
  p.require_series();
  CheckReport r = make_report("umbral_translation");
  put(r, "n", n);
  put_params(r, p);
  put(r, "x", x);

  const std::vector<Poly> vp = unified_polys(p, n);
  Rational rhs(0);
  Poly rhs_poly;
  for (int k = 0; k <= n; ++k) {
    rhs += binomial(n, k) * eval(vp[static_cast<size_t>(k)], x);
    rhs_poly += binomial(n, k) * vp[static_cast<size_t>(k)];
  }
  finish(r, eval(vp[static_cast<size_t>(n)], x + 1), std::move(rhs));
  r.equal = r.equal && shift(vp[static_cast<size_t>(n)], Rational(1)) == rhs_poly;
  return r;
}

CheckReport check_umbral_cross(int n, int m, const Params& p, const Rational& x,
                               const Rational& y) {
  p.require_series();
  CheckReport r = make_report("umbral_cross");
  put(r, "n", n);
  put(r, "m", m);
  put_params(r, p);
  put(r, "x", x);
  put(r, "y", y);

  const std::vector<Poly> vp = unified_polys(p, n + m);
  Rational lhs(0);
  for (int k = 0; k <= n; ++k)
    lhs += binomial(n, k) * rational_pow(y, n - k) * eval(vp[static_cast<size_t>(m + k)], x);
  Rational rhs(0);
  for (int k = 0; k <= m; ++k)
    rhs += binomial(m, k) * rational_pow(-y, m - k) * eval(vp[static_cast<size_t>(n + k)], x + y);
  finish(r, std::move(lhs), std::move(rhs));
  return r;
}

}  // namespace apostol
