#include <stdexcept>

#include "doctest.h"
#include "negord/rational.hpp"

using negord::Rational;

TEST_CASE("rational parse and print") {
  CHECK(Rational::parse("3/6").str() == "1/2");
  CHECK(Rational::parse(" -4/2 ").str() == "-2");
  CHECK(Rational::parse("5/-10").str() == "-1/2");
  CHECK(Rational::parse("0/7").str() == "0");
  CHECK(Rational::parse("42") == Rational(42));
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("rational arithmetic stays reduced") {
  const Rational a(2, 3), b(-5, 4);
  CHECK((a + b).str() == "-7/12");
  CHECK((a - b).str() == "23/12");
  CHECK((a * b).str() == "-5/6");
  CHECK((a / b).str() == "-8/15");
  CHECK((-a).str() == "-2/3");
  CHECK(a.inverse() == Rational(3, 2));
  CHECK_THROWS(Rational(0).inverse());
  CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
  CHECK(Rational(0).pow(0) == Rational(1));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(negord::to_string(Rational(-7)) == "-7");
  CHECK_FALSE(negord::try_inverse(Rational(0)).has_value());
}

TEST_CASE("binomial, factorial, falling factorial, int_pow") {
  using namespace negord;
  CHECK(binomial(10, 3) == Rational(120));
  CHECK(binomial(3, 5) == Rational(0));
  CHECK(binomial(4, -1) == Rational(0));
  CHECK(factorial(0) == Rational(1));
  CHECK(factorial(20).str() == "2432902008176640000");
  CHECK(factorial(25).str() == "15511210043330985984000000");
  CHECK(falling_factorial(5, 3) == Rational(60));
  CHECK(falling_factorial(5, 0) == Rational(1));
  CHECK(falling_factorial(3, 5) == Rational(0));
  CHECK(int_pow(0, 0) == Rational(1));
  CHECK(int_pow(-2, 5) == Rational(-32));
  CHECK(int_pow(2, -3) == Rational(1, 8));
  // sum_k C(n,k) = 2^n, against a large n so the GMP path is exercised
  Rational s;
  for (long k = 0; k <= 80; ++k) s += binomial(80, k);
  CHECK(s == int_pow(2, 80));
}
