#include <stdexcept>

#include "doctest.h"
#include "negord/applications.hpp"
#include "negord/families.hpp"

using namespace negord;

TEST_CASE("binomial moments") {
  // E(S_n) = n x, E(S_n^2) = n x (1-x) + n^2 x^2
  const Rational x(1, 3);
  CHECK(binomial_moment(6, 1, x) == Rational(2));
  CHECK(binomial_moment(6, 2, x) == Rational(6) * x * (Rational(1) - x) + Rational(36) * x * x);
  CHECK(binomial_moment(4, 0, x) == Rational(1));
  for (long n = 0; n <= 6; ++n) {
    for (long r = 0; r <= 4; ++r) {
      const MomentPoly p = moment_poly(n, r);
      CHECK(p.poly.degree() <= n);
      CHECK(p.eval(x) == binomial_moment(n, r, x));
      CHECK(p.integral() == moment_integral(n, r));
    }
  }
}

TEST_CASE("moment integral against Bernoulli polynomials") {
  for (long n = 0; n <= 8; ++n) {
    for (long r = 0; r <= 6; ++r) {
      const Rational rhs = (bernoulli_poly(r + 1, Rational(n + 1)) - bernoulli_poly(r + 1, Rational(0))) /
                           Rational((n + 1) * (r + 1));
      CHECK(moment_integral(n, r) == rhs);
    }
  }
}

TEST_CASE("Bernstein basis") {
  const Rational x(2, 5);
  Rational total;
  for (long k = 0; k <= 7; ++k) total += bernstein_basis(7, k, x);
  CHECK(total == Rational(1));
  CHECK(bernstein_basis(3, 1, x) == Rational(3) * x * (Rational(1) - x) * (Rational(1) - x));
  CHECK_THROWS_AS(bernstein_basis(3, 4, x), std::invalid_argument);
  CHECK_THROWS_AS(bernstein_basis(3, -1, x), std::invalid_argument);
}

TEST_CASE("rook placements") {
  CHECK(rook_count_bruteforce(4, 4) == 24);
  CHECK(rook_count_bruteforce(3, 0) == 1);
  for (long n = 1; n <= 6; ++n) {
    for (long k = 0; k <= n; ++k) CHECK(rook_count_bruteforce(n, k) == rook_count_formula(n, k));
  }
  CHECK(rook_total(3) == 9 + 18 + 6);
  CHECK_THROWS_AS(rook_count_bruteforce(7, 1), std::invalid_argument);
  CHECK_THROWS_AS(rook_count_bruteforce(3, 4), std::invalid_argument);
  CHECK_THROWS_AS(rook_count_bruteforce(0, 0), std::invalid_argument);
}

TEST_CASE("Golombek polynomials") {
  CHECK(golombek_poly(0).str("k") == "1");
  CHECK(golombek_poly(2).str("k") == "k^2 + k");
  CHECK(golombek_poly(3).str("k") == "k^3 + 3*k^2");
  for (long d = 1; d <= 8; ++d) {
    const Poly p = golombek_poly(d);
    CHECK(p.degree() == d);
    CHECK(p.leading() == Rational(1));
    CHECK(p.coeffs[0].is_zero());
    for (long k = 0; k <= 12; ++k) CHECK(golombek_B(d, k) == p.eval(Rational(k)) * Rational(2).pow(k - d));
  }
  const auto ogf = b_ogf_coeffs(3, 6);
  REQUIRE(ogf.size() == 7);
  for (long k = 0; k <= 6; ++k) CHECK(ogf[static_cast<std::size_t>(k)] == golombek_B(3, k));
  CHECK_THROWS_AS(golombek_poly(-1), std::invalid_argument);
}
