#include "support.hpp"

#include "cgm/exact.hpp"
#include "cgm/polynomial.hpp"

using namespace cgm;

TEST_CASE("parse_rational reads decimals and fractions exactly") {
  CHECK(parse_rational("16/3") == Rational(16, 3));
  CHECK(parse_rational("0.1") == Rational(1, 10));
  CHECK(parse_rational("-1.25") == Rational(-5, 4));
  CHECK(parse_rational("2.5e-3") == Rational(1, 400));
  CHECK(parse_rational("-7/2") == Rational(-7, 2));
  CHECK(parse_rational(" 3 ") == Rational(3));
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("to_rational is exact for doubles") {
  CHECK(to_rational(0.5) == Rational(1, 2));
  CHECK(to_rational(-3.0) == Rational(-3));
  CHECK(to_rational(0.1) != Rational(1, 10));
  CHECK(to_double(to_rational(0.1)) == 0.1);
}

TEST_CASE("polynomial arithmetic") {
  const Polynomial<Rational> a({Rational(1), Rational(2)});
  const Polynomial<Rational> b({Rational(-1), Rational(0), Rational(3)});
  const auto prod = a * b;
  CHECK(prod[0] == -1);
  CHECK(prod[1] == -2);
  CHECK(prod[2] == 3);
  CHECK(prod[3] == 6);
  CHECK(Polynomial<Rational>::binomial_power(Rational(1), Rational(1), 3) ==
        Polynomial<Rational>({Rational(1), Rational(3), Rational(3), Rational(1)}));
  CHECK(Polynomial<double>({1.0, -2.0, 1.0}).evaluate(1.0) == 0.0);
  CHECK_FALSE(Polynomial<double>({1.0, 0.0, 2.0}).all_coefficients_positive());
  CHECK(Polynomial<double>({1.0, 2.0, 0.0}).all_coefficients_positive());
  CHECK(Polynomial<double>({1.0, 2.0}).all_coefficients_positive());
}
