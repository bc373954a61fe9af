#ifndef NEGORD_APPLICATIONS_HPP
#define NEGORD_APPLICATIONS_HPP

#include <string>
#include <vector>

#include <gmpxx.h>

#include "negord/rational.hpp"

namespace negord {

/// Dense polynomial with coefficients in ascending degree.
struct Poly {
  std::vector<Rational> coeffs;

  long degree() const;  ///< -1 for the zero polynomial
  Rational eval(const Rational& x) const;
  Rational leading() const;
  /// "k^3 + 3*k^2" style, highest degree first.
  std::string str(const std::string& var = "x") const;

  friend bool operator==(const Poly&, const Poly&) = default;
};

/// E(S_n(x))^r = sum_k C(n,k) k^r x^k (1-x)^{n-k}, summed directly at x.
Rational binomial_moment(long n, long r, const Rational& x);

/// The same moment expanded as a polynomial in x (degree <= n).
struct MomentPoly {
  long n = 0;
  long r = 0;
  Poly poly;

  Rational eval(const Rational& x) const { return poly.eval(x); }
  /// Term-wise integral of the monomial expansion over [0,1].
  Rational integral() const;
};

MomentPoly moment_poly(long n, long r);

/// Integral over [0,1] through the Beta values k!(n-k)!/(n+1)! of the
/// Bernstein terms.
Rational moment_integral(long n, long r);

/// C(n,k) x^k (1-x)^{n-k}. Throws std::invalid_argument unless 0 <= k <= n.
Rational bernstein_basis(long n, long k, const Rational& x);

/// Non-attacking placements of k rooks on an n x n board, by depth-first
/// search over cells. Throws std::invalid_argument for n outside 1..6 or
/// k outside 0..n.
mpz_class rook_count_bruteforce(long n, long k);
/// C(n,k) (n)_k
mpz_class rook_count_formula(long n, long k);
/// sum_{k=1}^{n} C(n,k) (n)_k
mpz_class rook_total(long n);

/// p_d(k) = sum_m S2(d,m) (k)_m 2^{d-m}, so that B(d,k) = p_d(k) 2^{k-d}.
/// Throws std::invalid_argument for negative d.
Poly golombek_poly(long d);

/// [B(d,0), ..., B(d,K)]: the ordinary generating function coefficients of
/// sum_k B(d,k) x^k.
std::vector<Rational> b_ogf_coeffs(long d, long K);

}  // namespace negord

#endif  // NEGORD_APPLICATIONS_HPP
