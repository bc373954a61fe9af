#include "doctest.h"
#include "negord/quadnum.hpp"

using negord::QuadNum;
using negord::Rational;

TEST_CASE("golden ratio relations") {
  const QuadNum a = QuadNum::golden();
  const QuadNum b = QuadNum::golden_conjugate();
  CHECK(a * a == a + QuadNum(1));
  CHECK(a + b == QuadNum(1));
  CHECK(a * b == QuadNum(-1));
  CHECK(a - b == QuadNum::sqrt5());
  CHECK(a.conjugate() == b);
  CHECK(a.norm() == Rational(-1));
  CHECK(QuadNum::sqrt5() * QuadNum::sqrt5() == QuadNum(5));
}

TEST_CASE("quadnum inverse and powers") {
  const QuadNum x(Rational(2), Rational(-1, 3));
  REQUIRE(x.inverse().has_value());
  CHECK(x * *x.inverse() == QuadNum(1));
  CHECK_FALSE(QuadNum().inverse().has_value());
  CHECK(x.pow(0) == QuadNum(1));
  CHECK(x.pow(3) == x * x * x);
  CHECK(x.pow(-2) * x.pow(2) == QuadNum(1));
  CHECK(QuadNum::golden().pow(10) == QuadNum(Rational(123, 2), Rational(55, 2)));
  CHECK(QuadNum(Rational(1, 2), Rational(-3)).str() == "1/2-3*sqrt5");
  CHECK(QuadNum(Rational(7)).is_rational());
}
