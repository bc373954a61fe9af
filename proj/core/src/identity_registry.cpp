// Registry of checkable identities. Stated entries reproduce formulas as
// printed, including any defects; corrections live in separate entries.

#include <stdexcept>
#include <type_traits>
#include <utility>

#include "negord/applications.hpp"
#include "negord/egf.hpp"
#include "negord/families.hpp"
#include "negord/identities.hpp"
#include "negord/quadnum.hpp"
#include "negord/ring.hpp"

namespace negord {

namespace {

template <typename T>
CaseResult compare(const T& lhs, const T& rhs) {
  return CaseResult{lhs == rhs, to_string(lhs), to_string(rhs)};
}

CaseResult compare_all(std::initializer_list<CaseResult> parts) {
  CaseResult out{true, "", ""};
  bool first = true;
  for (const auto& p : parts) {
    out.ok = out.ok && p.ok;
    if (!first) {
      out.lhs += "; ";
      out.rhs += "; ";
    }
    first = false;
    out.lhs += p.lhs;
    out.rhs += p.rhs;
  }
  return out;
}

template <typename R>
R one() {
  return R(Rational(1));
}

template <typename R>
R inv(const R& lambda) {
  auto i = try_inverse(lambda);
  if (!i) throw std::domain_error("lambda must be a unit");
  return *i;
}

/// lambda^e for any integer e.
template <typename R>
R lpow(const R& lambda, long e) {
  return e >= 0 ? ring_pow(lambda, e) : ring_pow(inv(lambda), -e);
}

/// d/dlambda of a family value, taken on the Laurent form and specialized
/// afterwards in numeric mode.
template <typename R, typename G>
R d_lambda(G&& symbolic_value, const R& lambda) {
  const Laurent d = symbolic_value(Laurent::lambda(1)).d_lambda();
  if constexpr (std::is_same_v<R, Laurent>) {
    return d;
  } else {
    return d.eval(lambda);
  }
}

/// Wraps a generic (n, k, lambda) -> CaseResult body into a Checker that
/// dispatches on the lambda mode.
template <typename F>
Checker with_lambda(F body) {
  return [body](long n, long k, const Lambda& l) -> CaseResult {
    if (std::holds_alternative<Symbolic>(l)) return body(n, k, Laurent::lambda(1));
    return body(n, k, std::get<Rational>(l));
  };
}

template <typename F>
Checker lambda_free(F body) {
  return [body](long n, long k, const Lambda&) -> CaseResult { return body(n, k); };
}

bool nonzero(const Rational& l) { return !l.is_zero(); }
bool not_minus_one(const Rational& l) { return !l.is_zero() && l != Rational(-1); }

Rational fib_ext(long j) {
  // f_{-1} = 1 keeps f_{j+1} = f_j + f_{j-1} valid at j = 0.
  return j < 0 ? Rational(1) : fibonacci(j);
}

Identity make(std::string id, std::string statement, std::string source, Checker check) {
  Identity e;
  e.id = std::move(id);
  e.statement = std::move(statement);
  e.source = std::move(source);
  e.check = std::move(check);
  e.lambda_ok = nonzero;
  return e;
}

Identity& stated_discrepancy(Identity& e, std::optional<std::string> corrected) {
  e.expectation = Expectation::paper_discrepancy;
  e.corrected_variant = std::move(corrected);
  return e;
}

Identity& derived(Identity& e) {
  e.provenance = Provenance::derived;
  return e;
}

std::vector<Identity> build() {
  std::vector<Identity> reg;

  // ---- y1 and Golombek sums ---------------------------------------------------

  {
    auto e = make("I-01", "sum_j C(k,j) j^n = n-th EGF coefficient of (e^t + 1)^k",
                  "Golombek sum as a derivative of (e^t+1)^k at t = 0",
                  lambda_free([](long n, long k) {
                    Rational direct;
                    for (long j = 0; j <= k; ++j) direct += binomial(k, j) * int_pow(j, n);
                    const auto N = truncation_order(n);
                    auto f = Egf<Rational>::exp(Rational(1), Rational(1), N) + Egf<Rational>::one(N);
                    return compare(direct, f.pow(static_cast<unsigned>(k)).coeff(n));
                  }));
    e.lambda_use = LambdaUse::none;
    reg.push_back(std::move(e));
  }
  {
    auto e = make("I-02", "sum_{i=0}^{n} i^r = (B_{r+1}(n+1) - B_{r+1}(0)) / (r+1), with r = k",
                  "power sums through Bernoulli polynomials", lambda_free([](long n, long r) {
                    Rational sum;
                    for (long i = 0; i <= n; ++i) sum += int_pow(i, r);
                    const Rational rhs =
                        (bernoulli_poly(r + 1, Rational(n + 1)) - bernoulli_poly(r + 1, Rational(0))) /
                        Rational(r + 1);
                    return compare(sum, rhs);
                  }));
    e.lambda_use = LambdaUse::none;
    reg.push_back(std::move(e));
  }
  reg.push_back(make("I-03", "k^n lambda^k = sum_l (-1)^{k-l} C(k,l) l! y1(n,l;lambda)",
                     "inversion formula for y1", with_lambda([](long n, long k, const auto& lam) {
                       using R = std::decay_t<decltype(lam)>;
                       R rhs = R(Rational(0));
                       for (long l = 0; l <= k; ++l) {
                         rhs = rhs + y1(n, l, lam) * (int_pow(-1, k - l) * binomial(k, l) * factorial(l));
                       }
                       return compare(lpow(lam, k) * int_pow(k, n), rhs);
                     })));
  reg.push_back(make("I-04",
                     "S2(n,k;lambda^2) = (k!/2^n) sum_l C(n,l) S2(l,k;lambda) y1(n-l,k;lambda)",
                     "S2 at lambda^2 as a convolution of S2 and y1",
                     with_lambda([](long n, long k, const auto& lam) {
                       using R = std::decay_t<decltype(lam)>;
                       R rhs = R(Rational(0));
                       for (long l = 0; l <= n; ++l) {
                         rhs = rhs + stirling2_lambda(l, k, lam) * y1(n - l, k, lam) * binomial(n, l);
                       }
                       rhs = rhs * (factorial(k) / int_pow(2, n));
                       return compare(stirling2_lambda(n, k, R(lam * lam)), rhs);
                     })));
  {
    auto e = make("I-05",
                  "S2(n,k;lambda^3) = sum_l sum_j C(n,l) C(k,j) lambda^{2k-2j} j!/3^n "
                  "y1(l,j;lambda) S_k^{n-l}(2k-2j;lambda)",
                  "S2 at lambda^3 through y1 and array polynomials, as printed",
                  with_lambda([](long n, long k, const auto& lam) {
                    using R = std::decay_t<decltype(lam)>;
                    R rhs = R(Rational(0));
                    for (long l = 0; l <= n; ++l) {
                      for (long j = 0; j <= k; ++j) {
                        rhs = rhs + lpow(lam, 2 * k - 2 * j) * y1(l, j, lam) *
                                        array_poly(n - l, k, Rational(2 * k - 2 * j), lam) *
                                        (binomial(n, l) * binomial(k, j) * factorial(j));
                      }
                    }
                    rhs = rhs * int_pow(3, n).inverse();
                    return compare(stirling2_lambda(n, k, R(lam * lam * lam)), rhs);
                  }));
    stated_discrepancy(e, "I-05c");
    e.note = "lambda^{2k-2j} e^{(2k-2j)t} = (lambda e^t)^{2(k-j)}, so the printed pairing expands (u^3-1)^k exactly";
    reg.push_back(std::move(e));
  }
  {
    auto e = make("I-05c",
                  "3^n S2(n,k;lambda^3) = sum_l sum_j C(n,l) C(k,j) j! lambda^j y1(l,j;lambda) "
                  "S_k^{n-l}(j;lambda)",
                  "from u^3 - 1 = (u - 1)(u(u+1) + 1) with u = lambda e^t",
                  with_lambda([](long n, long k, const auto& lam) {
                    using R = std::decay_t<decltype(lam)>;
                    R rhs = R(Rational(0));
                    for (long l = 0; l <= n; ++l) {
                      for (long j = 0; j <= k; ++j) {
                        rhs = rhs + lpow(lam, j) * y1(l, j, lam) * array_poly(n - l, k, Rational(j), lam) *
                                        (binomial(n, l) * binomial(k, j) * factorial(j));
                      }
                    }
                    return compare(stirling2_lambda(n, k, R(lam * lam * lam)) * int_pow(3, n), rhs);
                  }));
    derived(e);
    reg.push_back(std::move(e));
  }
  {
    auto e = make("I-06", "B(m,n) = sum_j C(n,j) j! 2^{n-j} S2(m,j), with m = n and n = k",
                  "Spivey's identity for the Golombek sum", lambda_free([](long m, long n) {
                    Rational rhs;
                    for (long j = 0; j <= n; ++j) {
                      rhs += binomial(n, j) * factorial(j) * int_pow(2, n - j) * stirling2_lambda(m, j, Rational(1));
                    }
                    return compare(golombek_B(m, n), rhs);
                  }));
    e.lambda_use = LambdaUse::none;
    reg.push_back(std::move(e));
  }
  {
    auto e = make("I-07",
                  "sum_j C(k,j) C(j,d) = 2^{k-d} C(k,d) and sum_{v<d} m_v B(d-v,k) = 2^{k-d} C(k,d), "
                  "C(j,d) = sum_v m_v j^{d-v}, with d = n",
                  "binomial sums behind the Golombek conjecture", lambda_free([](long d, long k) {
                    const Rational target = int_pow(2, k - d) * binomial(k, d);
                    Rational direct;
                    for (long j = 0; j <= k; ++j) direct += binomial(k, j) * binomial(j, d);
                    // C(j,d) = (j)_d / d! as a polynomial in j, ascending powers.
                    std::vector<Rational> poly{Rational(1)};
                    for (long i = 0; i < d; ++i) {
                      std::vector<Rational> next(poly.size() + 1);
                      for (std::size_t e = 0; e < poly.size(); ++e) {
                        next[e + 1] += poly[e];
                        next[e] -= poly[e] * Rational(i);
                      }
                      poly = std::move(next);
                    }
                    Rational via_b;
                    for (long v = 0; v < d; ++v) {
                      via_b += poly[static_cast<std::size_t>(d - v)] / factorial(d) * golombek_B(d - v, k);
                    }
                    return compare_all({compare(direct, target), compare(via_b, target)});
                  }));
    e.lambda_use = LambdaUse::none;
    e.n_min = 1;
    e.note = "uses 2^{k-d}; a printed variant with 2^{n-k} does not match the binomial sum";
    reg.push_back(std::move(e));
  }
  {
    auto e = make("I-08",
                  "B(1,k) = k 2^{k-1}, B(2,k) = k(k+1) 2^{k-2}, B(3,k) = k^2(k+3) 2^{k-3}, "
                  "B(4,k) = k(k^3+6k^2+3k-2) 2^{k-4}, with d = n",
                  "closed forms of B(d,k) for d <= 4", lambda_free([](long d, long k) {
                    const Rational K(k);
                    Rational poly;
                    switch (d) {
                      case 1:
                        poly = K;
                        break;
                      case 2:
                        poly = K * (K + Rational(1));
                        break;
                      case 3:
                        poly = K * K * (K + Rational(3));
                        break;
                      default:
                        poly = K * (K * K * K + Rational(6) * K * K + Rational(3) * K - Rational(2));
                        break;
                    }
                    return compare(golombek_B(d, k), poly * int_pow(2, k - d));
                  }));
    e.lambda_use = LambdaUse::none;
    e.n_min = 1;
    e.n_cap = 4;
    reg.push_back(std::move(e));
  }
  {
    auto e = make("I-09", "y1(n+1,k;lambda) = k y1(n,k;lambda) - y1(n,k-1;lambda)", "recurrence for y1",
                  with_lambda([](long n, long k, const auto& lam) {
                    return compare(y1(n + 1, k, lam), y1(n, k, lam) * Rational(k) - y1(n, k - 1, lam));
                  }));
    e.k_min = 1;
    reg.push_back(std::move(e));
  }
  {
    auto e = make("I-10", "d/dlambda y1(n,k;lambda) = sum_j C(n,j) y1(j,k-1;lambda)",
                  "lambda-derivative of y1", with_lambda([](long n, long k, const auto& lam) {
                    using R = std::decay_t<decltype(lam)>;
                    const R lhs = d_lambda([&](const Laurent& s) { return y1(n, k, s); }, lam);
                    R rhs = R(Rational(0));
                    for (long j = 0; j <= n; ++j) rhs = rhs + y1(j, k - 1, lam) * binomial(n, j);
                    return compare(lhs, rhs);
                  }));
    e.k_min = 1;
    reg.push_back(std::move(e));
  }
  {
    auto e = make("I-11", "lambda d/dlambda y1(n,k;lambda) = k y1(n,k;lambda) - y1(n,k-1;lambda)",
                  "lambda-derivative of y1, second form", with_lambda([](long n, long k, const auto& lam) {
                    using R = std::decay_t<decltype(lam)>;
                    const R lhs = lam * d_lambda([&](const Laurent& s) { return y1(n, k, s); }, lam);
                    return compare(lhs, y1(n, k, lam) * Rational(k) - y1(n, k - 1, lam));
                  }));
    e.k_min = 1;
    reg.push_back(std::move(e));
  }

  // ---- y2 ---------------------------------------------------------------------------

  reg.push_back(make("I-12", "explicit double sum for y2(n,k;lambda) = series coefficient",
                     "explicit formula for y2", with_lambda([](long n, long k, const auto& lam) {
                       return compare(y2(n, k, lam, Method::explicit_sum), y2(n, k, lam, Method::series));
                     })));
  reg.push_back(make("I-13",
                     "y2(n,k;lambda) = k!/(2k)! sum_j sum_l (-1)^{n-l} C(n,l) y1(l,j;lambda) "
                     "y1(n-l,k-j;1/lambda)",
                     "y2 as a convolution of y1 at lambda and 1/lambda",
                     with_lambda([](long n, long k, const auto& lam) {
                       using R = std::decay_t<decltype(lam)>;
                       const R li = inv(lam);
                       R rhs = R(Rational(0));
                       for (long j = 0; j <= k; ++j) {
                         for (long l = 0; l <= n; ++l) {
                           rhs = rhs + y1(l, j, lam) * y1(n - l, k - j, li) * (int_pow(-1, n - l) * binomial(n, l));
                         }
                       }
                       return compare(y2(n, k, lam), rhs * (factorial(k) / factorial(2 * k)));
                     })));
  reg.push_back(make("I-14", "y1(n,2k;lambda) = lambda^k sum_j C(n,j) k^{n-j} y2(j,k;lambda)",
                     "y1 at even order through y2", with_lambda([](long n, long k, const auto& lam) {
                       using R = std::decay_t<decltype(lam)>;
                       R rhs = R(Rational(0));
                       for (long j = 0; j <= n; ++j) rhs = rhs + y2(j, k, lam) * (binomial(n, j) * int_pow(k, n - j));
                       return compare(y1(n, 2 * k, lam), lpow(lam, k) * rhs);
                     })));
  {
    auto e = make("I-15",
                  "y2(n,k;1) = 0 for odd n; y2(n,k;1) = (1/(2k)!) sum_j C(k,j) 2^{k-j} sum_l C(j,l) (2l-j)^n "
                  "for even n; the same double sum vanishes for odd n",
                  "vanishing of y2 at odd n and the matching combinatorial sums",
                  lambda_free([](long n, long k) {
                    Rational sum;
                    for (long j = 0; j <= k; ++j) {
                      Rational inner;
                      for (long l = 0; l <= j; ++l) inner += binomial(j, l) * int_pow(2 * l - j, n);
                      sum += binomial(k, j) * int_pow(2, k - j) * inner;
                    }
                    const Rational value = y2(n, k, Rational(1));
                    if (n % 2 == 1) return compare_all({compare(value, Rational(0)), compare(sum, Rational(0))});
                    return compare(value, sum / factorial(2 * k));
                  }));
    e.lambda_use = LambdaUse::none;
    reg.push_back(std::move(e));
  }
  {
    auto e = make("I-16",
                  "sum_j C(n,j) (-k)^{n-j} y1(j,2k;1) = k!/(2k)! sum_j (-1)^{n-j} C(n,j) sum_v y1(j,v;1) "
                  "y1(n-j,k-v;1)",
                  "y1(.,2k;1) e^{-kt} as a product of y1 series", lambda_free([](long n, long k) {
                    Rational lhs;
                    Rational rhs;
                    for (long j = 0; j <= n; ++j) {
                      lhs += binomial(n, j) * int_pow(-k, n - j) * y1(j, 2 * k, Rational(1));
                      Rational inner;
                      for (long v = 0; v <= k; ++v) inner += y1(j, v, Rational(1)) * y1(n - j, k - v, Rational(1));
                      rhs += int_pow(-1, n - j) * binomial(n, j) * inner;
                    }
                    return compare(lhs, rhs * (factorial(k) / factorial(2 * k)));
                  }));
    e.lambda_use = LambdaUse::none;
    reg.push_back(std::move(e));
  }
  {
    auto e = make("I-17",
                  "y1(n,2k;1) = sum_{j<=n/2} C(n,2j) k^{n-2j} y2hat(j,k), y2hat(j,k) = y2(2j,k;1)",
                  "y1 at even order through the even coefficients of y2", lambda_free([](long n, long k) {
                    Rational rhs;
                    for (long j = 0; 2 * j <= n; ++j) {
                      rhs += binomial(n, 2 * j) * int_pow(k, n - 2 * j) * y2(2 * j, k, Rational(1));
                    }
                    return compare(y1(n, 2 * k, Rational(1)), rhs);
                  }));
    e.lambda_use = LambdaUse::none;
    reg.push_back(std::move(e));
  }
  {
    auto e = make("I-18",
                  "y2(n,0) = 0, y2(n,1) = (-1)^n + 1, y2(n,2) = ((-1)^n+1)/6 + (2^{n-1} - (-2)^{n-1})/3, "
                  "y2(n,3) = ((-1)^n+1)/24 + (2^{n-2} + (-2)^{n-2})/15 + ((-3)^{n-2} + 3^{n-2})/10, n >= 1",
                  "closed-form list for y2(n,k;1), as printed", lambda_free([](long n, long k) {
                    const Rational pm = int_pow(-1, n) + Rational(1);
                    Rational closed;
                    switch (k) {
                      case 0:
                        closed = Rational(0);
                        break;
                      case 1:
                        closed = pm;
                        break;
                      case 2:
                        closed = pm / Rational(6) + (int_pow(2, n - 1) - int_pow(-2, n - 1)) / Rational(3);
                        break;
                      default:
                        closed = pm / Rational(24) + (int_pow(2, n - 2) + int_pow(-2, n - 2)) / Rational(15) +
                                 (int_pow(-3, n - 2) + int_pow(3, n - 2)) / Rational(10);
                        break;
                    }
                    return compare(y2(n, k, Rational(1)), closed);
                  }));
    stated_discrepancy(e, "I-18c");
    e.lambda_use = LambdaUse::none;
    e.n_min = 1;
    e.k_cap = 3;
    e.note = "the listed forms disagree with the series coefficients; halving them is not enough for k = 2, 3";
    reg.push_back(std::move(e));
  }
  {
    auto e = make("I-18c",
                  "y2(n,1) = ((-1)^n+1)/2, y2(n,2) = ((-1)^n+1)/6 + (2^n + (-2)^n)/24, "
                  "y2(n,3) = ((-1)^n+1)/48 + (2^{n-2} + (-2)^{n-2})/30 + (3^{n-2} + (-3)^{n-2})/80, n >= 1",
                  "closed forms for y2(n,k;1) recomputed from the binomial expansion",
                  lambda_free([](long n, long k) {
                    const Rational pm = int_pow(-1, n) + Rational(1);
                    Rational closed;
                    switch (k) {
                      case 0:
                        closed = Rational(0);
                        break;
                      case 1:
                        closed = pm / Rational(2);
                        break;
                      case 2:
                        closed = pm / Rational(6) + (int_pow(2, n) + int_pow(-2, n)) / Rational(24);
                        break;
                      default:
                        closed = pm / Rational(48) + (int_pow(2, n - 2) + int_pow(-2, n - 2)) / Rational(30) +
                                 (int_pow(3, n - 2) + int_pow(-3, n - 2)) / Rational(80);
                        break;
                    }
                    return compare(y2(n, k, Rational(1)), closed);
                  }));
    derived(e);
    e.lambda_use = LambdaUse::none;
    e.n_min = 1;
    e.k_cap = 3;
    reg.push_back(std::move(e));
  }
  {
    auto e = make("I-19",
                  "L_n^(k) = sum_j C(k,j) (2j)! (-2)^{k-j} sum_{m<=n/2} C(n,2m) c^{2m} y2(m,j;1) (k/2)^{n-2m}, "
                  "c = sqrt5/2",
                  "Lucas numbers of order k through y2, as printed", lambda_free([](long n, long k) {
                    const Rational c2(5, 4);
                    Rational rhs;
                    for (long j = 0; j <= k; ++j) {
                      Rational inner;
                      for (long m = 0; 2 * m <= n; ++m) {
                        inner += binomial(n, 2 * m) * c2.pow(m) * y2(m, j, Rational(1)) * Rational(k, 2).pow(n - 2 * m);
                      }
                      rhs += binomial(k, j) * factorial(2 * j) * int_pow(-2, k - j) * inner;
                    }
                    return compare(lucas_order(n, k), rhs);
                  }));
    stated_discrepancy(e, "I-19c");
    e.lambda_use = LambdaUse::none;
    e.note = "holds when y2(m,j;1) is read as the t^{2m}/(2m)! coefficient y2(2m,j;1)";
    reg.push_back(std::move(e));
  }
  {
    auto e = make("I-19c",
                  "n-th EGF coefficient of (e^{at} + e^{bt})^k = sum_j C(k,j) (j a + (k-j) b)^n in Q(sqrt5)",
                  "generating function of the Lucas numbers of order k", lambda_free([](long n, long k) {
                    const QuadNum a = QuadNum::golden();
                    const QuadNum b = QuadNum::golden_conjugate();
                    const auto N = truncation_order(n);
                    auto f = Egf<QuadNum>::exp(QuadNum(1), a, N) + Egf<QuadNum>::exp(QuadNum(1), b, N);
                    QuadNum sum;
                    for (long j = 0; j <= k; ++j) sum += (a * Rational(j) + b * Rational(k - j)).pow(n) * binomial(k, j);
                    return compare(f.pow(static_cast<unsigned>(k)).coeff(n), sum);
                  }));
    derived(e);
    e.lambda_use = LambdaUse::none;
    reg.push_back(std::move(e));
  }
  {
    auto e = make("I-20",
                  "L_n^(k) = k! sum_j C(n,j) (2c)^{n-j} y1(n-j,k;1) (f_j (a - 2c k^j) + f_{j-1}), c = sqrt5/2",
                  "Lucas numbers of order k through y1 and Fibonacci numbers, as printed",
                  lambda_free([](long n, long k) {
                    const QuadNum a = QuadNum::golden();
                    const QuadNum two_c = QuadNum::sqrt5();
                    QuadNum rhs;
                    for (long j = 0; j <= n; ++j) {
                      const QuadNum bracket =
                          (a - two_c * int_pow(k, j)) * fib_ext(j) + QuadNum(fib_ext(j - 1));
                      rhs += two_c.pow(n - j) * bracket * (binomial(n, j) * y1(n - j, k, Rational(1)));
                    }
                    rhs *= factorial(k);
                    return compare(QuadNum(lucas_order(n, k)), rhs);
                  }));
    stated_discrepancy(e, std::nullopt);
    e.lambda_use = LambdaUse::none;
    e.note = "f_{-1} = 1; the bracket would need k^j b^j with b^j = f_j (a - 2c) + f_{j-1}";
    reg.push_back(std::move(e));
  }
  {
    auto e = make("I-21",
                  "y2(n+1,k;lambda) = k y2(n,k;lambda) - y2(n,k-1;lambda) - (1/lambda) sum_j C(n,j) (-1)^{n-j} "
                  "y2(j,k-1;lambda)",
                  "recurrence for y2, as printed", with_lambda([](long n, long k, const auto& lam) {
                    using R = std::decay_t<decltype(lam)>;
                    R conv = R(Rational(0));
                    for (long j = 0; j <= n; ++j) conv = conv + y2(j, k - 1, lam) * (binomial(n, j) * int_pow(-1, n - j));
                    const R rhs = y2(n, k, lam) * Rational(k) - y2(n, k - 1, lam) - inv(lam) * conv;
                    return compare(y2(n + 1, k, lam), rhs);
                  }));
    stated_discrepancy(e, "I-21c");
    e.k_min = 1;
    e.note = "the k-1 terms lack the factor 1/(2k-1) coming from (2k)!/(2k-2)!";
    reg.push_back(std::move(e));
  }
  {
    auto e = make("I-21c",
                  "y2(n+1,k;lambda) = k y2(n,k;lambda) - 1/(2k-1) [y2(n,k-1;lambda) + (1/lambda) sum_j C(n,j) "
                  "(-1)^{n-j} y2(j,k-1;lambda)]",
                  "t-derivative of the y2 generating function", with_lambda([](long n, long k, const auto& lam) {
                    using R = std::decay_t<decltype(lam)>;
                    R conv = R(Rational(0));
                    for (long j = 0; j <= n; ++j) conv = conv + y2(j, k - 1, lam) * (binomial(n, j) * int_pow(-1, n - j));
                    const R bracket = y2(n, k - 1, lam) + inv(lam) * conv;
                    const R rhs = y2(n, k, lam) * Rational(k) - bracket * Rational(1, 2 * k - 1);
                    return compare(y2(n + 1, k, lam), rhs);
                  }));
    derived(e);
    e.k_min = 1;
    reg.push_back(std::move(e));
  }
  {
    auto e = make("I-22", "d/dlambda y2(n,k;lambda) = lambda y2(n,k;lambda) - lambda/(k(2k-1)) y2(n,k-1;lambda)",
                  "lambda-derivative of y2, as printed", with_lambda([](long n, long k, const auto& lam) {
                    using R = std::decay_t<decltype(lam)>;
                    const R lhs = d_lambda([&](const Laurent& s) { return y2(n, k, s); }, lam);
                    const R rhs = lam * y2(n, k, lam) - lam * y2(n, k - 1, lam) * Rational(1, k * (2 * k - 1));
                    return compare(lhs, rhs);
                  }));
    stated_discrepancy(e, "I-22c");
    e.k_min = 1;
    e.note = "the printed left side reads d/dt; the lambda-derivative is checked";
    reg.push_back(std::move(e));
  }
  {
    auto e = make("I-22c",
                  "lambda d/dlambda y2(n,k;lambda) = y2(n+1,k;lambda) and lambda d/dlambda C(n,k;lambda) = "
                  "C(n+1,k;lambda)",
                  "lambda d/dlambda equals d/dt on lambda e^t + e^-t/lambda",
                  with_lambda([](long n, long k, const auto& lam) {
                    using R = std::decay_t<decltype(lam)>;
                    const R dy = lam * d_lambda([&](const Laurent& s) { return y2(n, k, s); }, lam);
                    const R dc = lam * d_lambda([&](const Laurent& s) { return c_central(n, k, s); }, lam);
                    return compare_all({compare(dy, y2(n + 1, k, lam)), compare(dc, c_central(n + 1, k, lam))});
                  }));
    derived(e);
    reg.push_back(std::move(e));
  }

  // ---- central factorial ------------------------------------------------------------

  reg.push_back(make("I-23", "2^n C(n,k;lambda^2) = (2k)! sum_j C(n,j) C(j,k;lambda) y2(n-j,k;lambda)",
                     "C at lambda^2 as a convolution of C and y2",
                     with_lambda([](long n, long k, const auto& lam) {
                       using R = std::decay_t<decltype(lam)>;
                       R rhs = R(Rational(0));
                       for (long j = 0; j <= n; ++j) rhs = rhs + c_central(j, k, lam) * y2(n - j, k, lam) * binomial(n, j);
                       return compare(c_central(n, k, R(lam * lam)) * int_pow(2, n), rhs * factorial(2 * k));
                     })));
  {
    auto e = make("I-24", "2^n C(n,k;1) = (2k)! sum_j C(n,j) y2(j,k;1) C(n-j,k;1)",
                  "central factorial numbers through y2, at uniform t^n/n! indexing",
                  lambda_free([](long n, long k) {
                    Rational rhs;
                    for (long j = 0; j <= n; ++j) {
                      rhs += binomial(n, j) * y2(j, k, Rational(1)) * c_central(n - j, k, Rational(1));
                    }
                    return compare(int_pow(2, n) * c_central(n, k, Rational(1)), factorial(2 * k) * rhs);
                  }));
    e.lambda_use = LambdaUse::none;
    e.note = "the printed form mixes t^{2n}/(2n)! and t^n/n! indexing; only the uniform form is checked";
    reg.push_back(std::move(e));
  }

  // ---- Euler numbers of negative order --------------------------------------------

  reg.push_back(make("I-25",
                     "E_n^(-k)(lambda) = k! 2^{-k} y1(n,k;lambda); E_n^(-k)(1) = 2^{-k} sum_j C(k,j) j^n",
                     "negative-order Apostol-Euler numbers through y1",
                     with_lambda([](long n, long k, const auto& lam) {
                       Rational direct;
                       for (long j = 0; j <= k; ++j) direct += binomial(k, j) * int_pow(j, n);
                       direct *= Rational(2).pow(-k);
                       return compare_all({compare(euler_first_neg(n, k, lam),
                                                   y1(n, k, lam) * (factorial(k) * Rational(2).pow(-k))),
                                           compare(euler_first_neg(n, k, Rational(1)), direct)});
                     })));
  {
    auto e = make("I-26",
                  "E*_n^(-k)(lambda) = sum_j C(k,j) sum_{l<=n-k+j} (-1)^{n+j-k-l} C(n-k+j,l) 2^{j-k} (n)_{k-j} "
                  "E_l^(-j)(lambda) B_{n+j-k-l}^(-k+j)(1/lambda)",
                  "second-kind numbers through Euler and Apostol-Bernoulli numbers, as printed",
                  with_lambda([](long n, long k, const auto& lam) {
                    using R = std::decay_t<decltype(lam)>;
                    const R li = inv(lam);
                    R rhs = R(Rational(0));
                    for (long j = 0; j <= k; ++j) {
                      const long top = n - k + j;
                      for (long l = 0; l <= top; ++l) {
                        const Rational w = binomial(k, j) * int_pow(-1, top - l) * binomial(top, l) *
                                           Rational(2).pow(j - k) * falling_factorial(n, k - j);
                        rhs = rhs + euler_first_neg(l, j, lam) * apostol_bernoulli_neg(top - l, k - j, li) * w;
                      }
                    }
                    return compare(euler_second_neg(n, k, lam), rhs);
                  }));
    stated_discrepancy(e, std::nullopt);
    e.lambda_use = LambdaUse::numeric_only;
    e.note = "the stray t^n/n! on the left is dropped; the functional equation rebuilds a different function";
    reg.push_back(std::move(e));
  }
  reg.push_back(make("I-27", "y2(n,k;lambda) = 2^k/(2k)! sum_l C(k,l) E*_n^(-l)(lambda)",
                     "y2 through second-kind Euler numbers of negative order",
                     with_lambda([](long n, long k, const auto& lam) {
                       using R = std::decay_t<decltype(lam)>;
                       R rhs = R(Rational(0));
                       for (long l = 0; l <= k; ++l) rhs = rhs + euler_second_neg(n, l, lam) * binomial(k, l);
                       return compare(y2(n, k, lam), rhs * (int_pow(2, k) / factorial(2 * k)));
                     })));
  {
    auto e = make("I-28",
                  "y2(n,k;lambda) = (-1)^n 2^{n+k}/(2k)! sum_l C(k,l) lambda^{-l} E_n^(-l)(-l/2;lambda^2)",
                  "y2 through shifted Euler polynomials of negative order, as printed",
                  with_lambda([](long n, long k, const auto& lam) {
                    using R = std::decay_t<decltype(lam)>;
                    const R sq = lam * lam;
                    R rhs = R(Rational(0));
                    for (long l = 0; l <= k; ++l) {
                      rhs = rhs + lpow(lam, -l) * euler_first_neg_poly(n, l, Rational(-l, 2), sq) * binomial(k, l);
                    }
                    return compare(y2(n, k, lam), rhs * (int_pow(-1, n) * int_pow(2, n + k) / factorial(2 * k)));
                  }));
    stated_discrepancy(e, "I-28c");
    reg.push_back(std::move(e));
  }
  {
    auto e = make("I-28c", "y2(n,k;lambda) = 2^{n+k}/(2k)! sum_l C(k,l) lambda^{-l} E_n^(-l)(-l/2;lambda^2)",
                  "the same expansion without the sign (-1)^n", with_lambda([](long n, long k, const auto& lam) {
                    using R = std::decay_t<decltype(lam)>;
                    const R sq = lam * lam;
                    R rhs = R(Rational(0));
                    for (long l = 0; l <= k; ++l) {
                      rhs = rhs + lpow(lam, -l) * euler_first_neg_poly(n, l, Rational(-l, 2), sq) * binomial(k, l);
                    }
                    return compare(y2(n, k, lam), rhs * (int_pow(2, n + k) / factorial(2 * k)));
                  }));
    derived(e);
    reg.push_back(std::move(e));
  }
  {
    auto e = make("I-29",
                  "y1(n+2,k;lambda) = k y1(n,k;lambda) + y1(n,k-2;lambda) - y1(n,k-1;lambda) + 2k sum_l C(n,l) "
                  "E_l^(-1)(lambda) y1(n-l,k;lambda)",
                  "second-order recurrence for y1, as printed, reading the Euler factor at order -1",
                  with_lambda([](long n, long k, const auto& lam) {
                    using R = std::decay_t<decltype(lam)>;
                    R conv = R(Rational(0));
                    for (long l = 0; l <= n; ++l) conv = conv + euler_first_neg(l, 1, lam) * y1(n - l, k, lam) * binomial(n, l);
                    const R rhs = y1(n, k, lam) * Rational(k) + y1(n, k - 2, lam) - y1(n, k - 1, lam) + conv * Rational(2 * k);
                    return compare(y1(n + 2, k, lam), rhs);
                  }));
    stated_discrepancy(e, "I-29c");
    e.k_min = 2;
    reg.push_back(std::move(e));
  }
  {
    auto e = make("I-29b",
                  "y1(n+2,k;lambda) = k y1(n,k;lambda) + y1(n,k-2;lambda) - y1(n,k-1;lambda) + 2k sum_l C(n,l) "
                  "E_l^(1)(lambda) y1(n-l,k;lambda)",
                  "second-order recurrence for y1, as printed, reading the Euler factor at order +1",
                  with_lambda([](long n, long k, const auto& lam) -> CaseResult {
                    using R = std::decay_t<decltype(lam)>;
                    if constexpr (std::is_same_v<R, Laurent>) {
                      throw std::domain_error("positive-order Euler numbers have no symbolic mode");
                    } else {
                      Rational conv;
                      for (long l = 0; l <= n; ++l) {
                        conv += euler_first_pos(l, 1, Rational(0), lam) * y1(n - l, k, lam) * binomial(n, l);
                      }
                      const Rational rhs = y1(n, k, lam) * Rational(k) + y1(n, k - 2, lam) - y1(n, k - 1, lam) +
                                           conv * Rational(2 * k);
                      return compare(y1(n + 2, k, lam), rhs);
                    }
                  }));
    stated_discrepancy(e, "I-29c");
    e.lambda_use = LambdaUse::numeric_only;
    e.lambda_ok = not_minus_one;
    e.k_min = 2;
    reg.push_back(std::move(e));
  }
  {
    auto e = make("I-29c",
                  "y1(n+2,k;lambda) = k^2 y1(n,k;lambda) - (2k-1) y1(n,k-1;lambda) + y1(n,k-2;lambda)",
                  "second t-derivative of the y1 generating function",
                  with_lambda([](long n, long k, const auto& lam) {
                    const auto rhs = y1(n, k, lam) * Rational(k * k) - y1(n, k - 1, lam) * Rational(2 * k - 1) +
                                     y1(n, k - 2, lam);
                    return compare(y1(n + 2, k, lam), rhs);
                  }));
    derived(e);
    e.k_min = 2;
    reg.push_back(std::move(e));
  }

  // ---- statistics -------------------------------------------------------------------

  {
    auto e = make("I-30", "y1(r,n;1) = 2^n/n! E(S_n(1/2))^r, with n trials and r = k",
                  "binomial moments at x = 1/2", lambda_free([](long n, long r) {
                    const Rational rhs = int_pow(2, n) / factorial(n) * binomial_moment(n, r, Rational(1, 2));
                    return compare(y1(r, n, Rational(1)), rhs);
                  }));
    e.lambda_use = LambdaUse::none;
    reg.push_back(std::move(e));
  }
  {
    auto e = make("I-31",
                  "integral_0^1 E(S_n(x))^r dx = (B_{r+1}(n+1) - B_{r+1}(0)) / ((n+1)(r+1)), with r = k",
                  "integrated binomial moments", lambda_free([](long n, long r) {
                    const Rational rhs =
                        (bernoulli_poly(r + 1, Rational(n + 1)) - bernoulli_poly(r + 1, Rational(0))) /
                        Rational((n + 1) * (r + 1));
                    return compare(moment_integral(n, r), rhs);
                  }));
    e.lambda_use = LambdaUse::none;
    reg.push_back(std::move(e));
  }

  return reg;
}

}  // namespace

const std::vector<Identity>& list_identities() {
  static const std::vector<Identity> registry = build();
  return registry;
}

}  // namespace negord
