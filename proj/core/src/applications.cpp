#include "negord/applications.hpp"

#include <sstream>
#include <stdexcept>

#include "negord/families.hpp"

namespace negord {

namespace {

void add_scaled(std::vector<Rational>& acc, const std::vector<Rational>& p, const Rational& s) {
  if (acc.size() < p.size()) acc.resize(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) acc[i] += p[i] * s;
}

void trim(std::vector<Rational>& c) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

// Coefficients of (k)_m = k (k-1) ... (k-m+1) in ascending powers of k.
std::vector<Rational> falling_factorial_poly(long m) {
  std::vector<Rational> p{Rational(1)};
  for (long i = 0; i < m; ++i) {
    std::vector<Rational> next(p.size() + 1);
    for (std::size_t e = 0; e < p.size(); ++e) {
      next[e + 1] += p[e];
      next[e] -= p[e] * Rational(i);
    }
    p = std::move(next);
  }
  return p;
}

long count_rooks(long n, long k, long start, unsigned rows, unsigned cols) {
  if (k == 0) return 1;
  long total = 0;
  for (long cell = start; cell < n * n; ++cell) {
    const long r = cell / n;
    const long c = cell % n;
    if ((rows >> r) & 1U || (cols >> c) & 1U) continue;
    total += count_rooks(n, k - 1, cell + 1, rows | (1U << r), cols | (1U << c));
  }
  return total;
}

}  // namespace

long Poly::degree() const {
  for (long i = static_cast<long>(coeffs.size()) - 1; i >= 0; --i) {
    if (!coeffs[i].is_zero()) return i;
  }
  return -1;
}

Rational Poly::eval(const Rational& x) const {
  Rational acc;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rational Poly::leading() const {
  const long d = degree();
  return d < 0 ? Rational(0) : coeffs[d];
}

std::string Poly::str(const std::string& var) const {
  std::ostringstream os;
  bool first = true;
  for (long e = degree(); e >= 0; --e) {
    const Rational& c = coeffs[e];
    if (c.is_zero()) continue;
    const Rational mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << '-';
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != Rational(1)) os << mag << '*';
    os << var;
    if (e > 1) os << '^' << e;
  }
  return first ? "0" : os.str();
}

Rational binomial_moment(long n, long r, const Rational& x) {
  if (n < 0 || r < 0) throw std::invalid_argument("binomial_moment needs n, r >= 0");
  Rational sum;
  const Rational y = Rational(1) - x;
  for (long k = 0; k <= n; ++k) sum += binomial(n, k) * int_pow(k, r) * x.pow(k) * y.pow(n - k);
  return sum;
}

MomentPoly moment_poly(long n, long r) {
  if (n < 0 || r < 0) throw std::invalid_argument("moment_poly needs n, r >= 0");
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
  for (long k = 0; k <= n; ++k) {
    const Rational w = binomial(n, k) * int_pow(k, r);
    if (w.is_zero()) continue;
    // x^k (1-x)^{n-k}
    for (long i = 0; i <= n - k; ++i) c[k + i] += w * binomial(n - k, i) * int_pow(-1, i);
  }
  trim(c);
  return MomentPoly{n, r, Poly{std::move(c)}};
}

Rational MomentPoly::integral() const {
  Rational sum;
  for (std::size_t i = 0; i < poly.coeffs.size(); ++i) sum += poly.coeffs[i] / Rational(static_cast<long>(i) + 1);
  return sum;
}

Rational moment_integral(long n, long r) {
  if (n < 0 || r < 0) throw std::invalid_argument("moment_integral needs n, r >= 0");
  Rational sum;
  const Rational denom = factorial(n + 1);
  for (long k = 0; k <= n; ++k) {
    sum += binomial(n, k) * int_pow(k, r) * factorial(k) * factorial(n - k) / denom;
  }
  return sum;
}

Rational bernstein_basis(long n, long k, const Rational& x) {
  if (n < 0 || k < 0 || k > n) throw std::invalid_argument("bernstein_basis needs 0 <= k <= n");
  return binomial(n, k) * x.pow(k) * (Rational(1) - x).pow(n - k);
}

mpz_class rook_count_bruteforce(long n, long k) {
  if (n < 1 || n > 6) throw std::invalid_argument("rook brute force is limited to 1 <= n <= 6");
  if (k < 0 || k > n) throw std::invalid_argument("rook count needs 0 <= k <= n");
  return mpz_class(count_rooks(n, k, 0, 0U, 0U));
}

mpz_class rook_count_formula(long n, long k) {
  if (n < 0 || k < 0 || k > n) throw std::invalid_argument("rook count needs 0 <= k <= n");
  return (binomial(n, k) * falling_factorial(n, k)).numerator();
}

mpz_class rook_total(long n) {
  if (n < 0) throw std::invalid_argument("rook_total needs n >= 0");
  mpz_class total = 0;
  for (long k = 1; k <= n; ++k) total += rook_count_formula(n, k);
  return total;
}

Poly golombek_poly(long d) {
  if (d < 0) throw std::invalid_argument("golombek_poly needs d >= 0");
  std::vector<Rational> c;
  for (long m = 0; m <= d; ++m) {
    const Rational s = stirling2_lambda(d, m, Rational(1));
    if (s.is_zero()) continue;
    add_scaled(c, falling_factorial_poly(m), s * int_pow(2, d - m));
  }
  trim(c);
  return Poly{std::move(c)};
}

std::vector<Rational> b_ogf_coeffs(long d, long K) {
  if (d < 0 || K < 0) throw std::invalid_argument("b_ogf_coeffs needs d, K >= 0");
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(K) + 1);
  for (long k = 0; k <= K; ++k) out.push_back(golombek_B(d, k));
  return out;
}

}  // namespace negord
