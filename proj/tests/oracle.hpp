// Reference values computed with ordinary power series sum a_n t^n over Q.
// Shares nothing with the EGF engine beyond Rational itself.
#pragma once

#include <stdexcept>
#include <vector>

#include "negord/rational.hpp"

namespace oracle {

using negord::Rational;
using Ps = std::vector<Rational>;  // ordinary coefficients, fixed length

inline Rational fact(long n) {
  Rational f(1);
  for (long i = 2; i <= n; ++i) f *= Rational(i);
  return f;
}

inline Ps constant(const Rational& c, std::size_t len) {
  Ps p(len);
  p[0] = c;
  return p;
}

/// c * e^{a t}
inline Ps exp_ps(const Rational& c, const Rational& a, std::size_t len) {
  Ps p(len);
  Rational term = c;
  for (std::size_t i = 0; i < len; ++i) {
    p[i] = term;
    term = term * a / Rational(static_cast<long>(i + 1));
  }
  return p;
}

inline Ps add(Ps a, const Ps& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

inline Ps mul(const Ps& a, const Ps& b) {
  Ps c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < a.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

inline Ps power(const Ps& a, long k) {
  Ps out = constant(Rational(1), a.size());
  for (long i = 0; i < k; ++i) out = mul(out, a);
  return out;
}

/// 1/a by the long-division recurrence.
inline Ps inverse(const Ps& a) {
  if (a[0].is_zero()) throw std::domain_error("oracle: non-unit series");
  Ps b(a.size());
  const Rational inv0 = a[0].inverse();
  b[0] = inv0;
  for (std::size_t n = 1; n < a.size(); ++n) {
    Rational s;
    for (std::size_t i = 1; i <= n; ++i) s += a[i] * b[n - i];
    b[n] = -s * inv0;
  }
  return b;
}

/// n! [t^n] f
inline Rational egf_coeff(const Ps& f, long n) { return f[static_cast<std::size_t>(n)] * fact(n); }

inline std::size_t len_for(long n) { return static_cast<std::size_t>(n + 1); }

inline Rational y1(long n, long k, const Rational& l) {
  const auto L = len_for(n);
  return egf_coeff(power(add(exp_ps(l, Rational(1), L), constant(Rational(1), L)), k), n) / fact(k);
}

inline Rational y2(long n, long k, const Rational& l) {
  const auto L = len_for(n);
  Ps base = add(add(exp_ps(l, Rational(1), L), exp_ps(l.inverse(), Rational(-1), L)), constant(Rational(2), L));
  return egf_coeff(power(base, k), n) / fact(2 * k);
}

inline Rational central(long n, long k, const Rational& l) {
  const auto L = len_for(n);
  Ps base = add(add(exp_ps(l, Rational(1), L), exp_ps(l.inverse(), Rational(-1), L)), constant(Rational(-2), L));
  return egf_coeff(power(base, k), n) / fact(2 * k);
}

inline Rational stirling2(long n, long v, const Rational& l) {
  const auto L = len_for(n);
  return egf_coeff(power(add(exp_ps(l, Rational(1), L), constant(Rational(-1), L)), v), n) / fact(v);
}

inline Rational array(long n, long v, const Rational& x, const Rational& l) {
  const auto L = len_for(n);
  Ps f = mul(power(add(exp_ps(l, Rational(1), L), constant(Rational(-1), L)), v), exp_ps(Rational(1), x, L));
  return egf_coeff(f, n) / fact(v);
}

inline Rational euler_neg_poly(long n, long k, const Rational& x, const Rational& l) {
  const auto L = len_for(n);
  Ps half = add(exp_ps(l / Rational(2), Rational(1), L), constant(Rational(1, 2), L));
  return egf_coeff(mul(power(half, k), exp_ps(Rational(1), x, L)), n);
}

inline Rational euler_neg(long n, long k, const Rational& l) { return euler_neg_poly(n, k, Rational(0), l); }

inline Rational euler_star_neg(long n, long k, const Rational& l) {
  const auto L = len_for(n);
  Ps half = add(exp_ps(l / Rational(2), Rational(1), L), exp_ps(l.inverse() / Rational(2), Rational(-1), L));
  return egf_coeff(power(half, k), n);
}

/// ((l e^t - 1)/t)^k, regular part: the polar terms of (l e^t - 1)^k are dropped.
inline Rational bernoulli_neg(long n, long k, const Rational& l) {
  const auto L = len_for(n + k);
  Ps f = power(add(exp_ps(l, Rational(1), L), constant(Rational(-1), L)), k);
  return f[static_cast<std::size_t>(n + k)] * fact(n);
}

inline Rational central_T(long n, long k) { return central(2 * n, k, Rational(1)); }

inline Rational golombek(long n, long k) {
  const auto L = len_for(n);
  return egf_coeff(power(add(exp_ps(Rational(1), Rational(1), L), constant(Rational(1), L)), k), n);
}

inline Rational bernoulli_poly(long n, const Rational& x) {
  const auto L = len_for(n);
  // (e^t - 1)/t = sum t^i/(i+1)!
  Ps q(L);
  for (std::size_t i = 0; i < L; ++i) q[i] = fact(static_cast<long>(i) + 1).inverse();
  return egf_coeff(mul(inverse(q), exp_ps(Rational(1), x, L)), n);
}

inline Rational euler_pos(long n, long k, const Rational& x, const Rational& l) {
  const auto L = len_for(n);
  Ps den = add(exp_ps(l, Rational(1), L), constant(Rational(1), L));
  Ps f = power(mul(constant(Rational(2), L), inverse(den)), k);
  return egf_coeff(mul(f, exp_ps(Rational(1), x, L)), n);
}

inline Rational euler_star(long n) {
  const auto L = len_for(n);
  Ps c = add(exp_ps(Rational(1, 2), Rational(1), L), exp_ps(Rational(1, 2), Rational(-1), L));
  return egf_coeff(inverse(c), n);
}

inline Rational fib(long n) {
  Rational a(0), b(1);
  for (long i = 0; i < n; ++i) {
    Rational c = a + b;
    a = b;
    b = c;
  }
  return a;
}

/// L_n = f_{n-1} + f_{n+1}, with f_{-1} = 1.
inline Rational lucas(long n) { return (n == 0 ? Rational(1) : fib(n - 1)) + fib(n + 1); }

/// (e^{at} + e^{bt})^k with e^{at} + e^{bt} = sum L_m t^m/m!.
inline Rational lucas_order(long n, long k) {
  const auto L = len_for(n);
  Ps base(L);
  for (std::size_t m = 0; m < L; ++m) base[m] = lucas(static_cast<long>(m)) / fact(static_cast<long>(m));
  return egf_coeff(power(base, k), n);
}

}  // namespace oracle
