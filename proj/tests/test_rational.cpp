#include <doctest.h>

#include <random>

#include "apostol/rational.hpp"

using namespace apostol;

TEST_CASE("serialization is p/q with positive denominator, integers plain") {
  CHECK(to_string(make_rational(1, 2)) == "1/2");
  CHECK(to_string(make_rational(-1, 2)) == "-1/2");
  CHECK(to_string(make_rational(4, -6)) == "-2/3");
  CHECK(to_string(Rational(7)) == "7");
  CHECK(to_string(Rational(-7)) == "-7");
  CHECK(to_string(Rational(0)) == "0");
}

TEST_CASE("parsing accepts both serialized forms") {
  CHECK(parse_rational("3/4") == make_rational(3, 4));
  CHECK(parse_rational("-1/2") == make_rational(-1, 2));
  CHECK(parse_rational("+5") == Rational(5));
  CHECK(parse_rational("  4/6 ") == make_rational(2, 3));
  CHECK(parse_rational("0") == Rational(0));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("a"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/2/3"), std::invalid_argument);
}

TEST_CASE("rational_pow") {
  CHECK(rational_pow(make_rational(2, 3), 2) == make_rational(4, 9));
  CHECK(rational_pow(Rational(5), 0) == 1);
  CHECK(rational_pow(make_rational(1, 2), -3) == 8);
  CHECK(rational_pow(Rational(0), 0) == 1);
  CHECK(rational_pow(Rational(0), 4) == 0);
  CHECK(rational_pow(Rational(-2), 3) == -8);
  CHECK(rational_pow(make_rational(-2, 3), -2) == make_rational(9, 4));
  CHECK_THROWS_AS(rational_pow(Rational(0), -1), std::domain_error);
}

TEST_CASE("make_rational rejects zero denominator") {
  CHECK_THROWS_AS(make_rational(1, 0), std::domain_error);
}

TEST_CASE("arithmetic results stay in canonical reduced form") {
  std::mt19937_64 rng(2024);
  const auto draw = [&rng] {
    const long long num = static_cast<long long>(rng() % 41) - 20;
    const long long den = static_cast<long long>(rng() % 20) + 1;
    return make_rational(num, den);
  };
  for (int i = 0; i < 500; ++i) {
    const Rational a = draw(), b = draw();
    for (const Rational& r : {Rational(a + b), Rational(a - b), Rational(a * b)}) {
      CHECK(denominator(r) > 0);
      CHECK(gcd(numerator(r), denominator(r)) == 1);
      CHECK(parse_rational(to_string(r)) == r);
    }
  }
}
