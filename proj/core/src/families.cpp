#include "negord/families.hpp"

#include <atomic>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

#include "negord/egf.hpp"
#include "negord/ring.hpp"

namespace negord {

namespace {

// ---- memo ------------------------------------------------------------------

template <typename V>
class ValueCache {
 public:
  std::optional<V> find(const std::string& key) const {
    std::shared_lock lock(mu_);
    auto it = map_.find(key);
    if (it == map_.end()) return std::nullopt;
    return it->second;
  }

  void insert(const std::string& key, const V& value) {
    std::unique_lock lock(mu_);
    map_.try_emplace(key, value);
  }

  void clear() {
    std::unique_lock lock(mu_);
    map_.clear();
  }

 private:
  mutable std::shared_mutex mu_;
  std::unordered_map<std::string, V> map_;
};

template <typename V>
ValueCache<V>& cache() {
  static ValueCache<V> instance;
  return instance;
}

std::atomic<bool> g_cache_enabled{true};

std::mutex g_override_mu;
std::optional<std::size_t> g_override;

std::string lambda_key(const Rational& l) { return l.str(); }
std::string lambda_key(const Laurent& l) { return "L" + l.to_json(); }

std::string override_key() {
  const auto o = truncation_override();
  return o ? std::to_string(*o) : "-";
}

template <typename V, typename F>
V memo(std::string_view family, Method m, long n, long k, const std::string& extra, F&& compute) {
  if (!g_cache_enabled.load(std::memory_order_relaxed)) return compute();
  std::string key(family);
  key += '|';
  key += method_name(m);
  key += '|' + std::to_string(n) + '|' + std::to_string(k) + '|' + extra + '|' + override_key();
  if (auto hit = cache<V>().find(key)) return *hit;
  V value = compute();
  cache<V>().insert(key, value);
  return value;
}

// ---- helpers ---------------------------------------------------------------

void require_nonnegative(long n, long k) {
  if (n < 0 || k < 0) throw std::invalid_argument("indices must be nonnegative");
}

template <LambdaRing R>
R inverse_of(const R& lambda) {
  auto inv = try_inverse(lambda);
  if (!inv) throw std::domain_error("lambda must be a unit (nonzero)");
  return *inv;
}

/// lambda^e for any integer e; negative e needs a unit.
template <LambdaRing R>
R lam_pow(const R& lambda, long e) {
  if (e >= 0) return ring_pow(lambda, e);
  return ring_pow(inverse_of(lambda), -e);
}

Rational rpow(const Rational& base, long e) { return base.pow(e); }

std::size_t order_for(long n) { return truncation_order(n); }

[[noreturn]] void unsupported(std::string_view family, Method m) {
  throw std::invalid_argument(std::string("method '") + std::string(method_name(m)) +
                              "' is not available for " + std::string(family));
}

template <CoefficientRing R>
R series_coeff(const Egf<R>& f, long n) {
  return f.coeff(n);
}

// ---- y1 --------------------------------------------------------------------

template <LambdaRing R>
R y1_explicit(long n, long k, const R& lambda) {
  R sum = ring_zero<R>();
  for (long j = 0; j <= k; ++j) sum = sum + lam_pow(lambda, j) * (binomial(k, j) * int_pow(j, n));
  return sum * factorial(k).inverse();
}

template <LambdaRing R>
R y1_series(long n, long k, const R& lambda) {
  const auto N = order_for(n);
  auto base = Egf<R>::exp(lambda, ring_one<R>(), N) + Egf<R>::one(N);
  return series_coeff(base.pow(static_cast<unsigned>(k)).scale(factorial(k).inverse()), n);
}

template <LambdaRing R>
R y1_recurrence(long n, long k, const R& lambda) {
  // column-wise: row[k'] holds y1(m, k') for the current m.
  std::vector<R> row(static_cast<std::size_t>(k) + 1);
  const R lp1 = lambda + ring_one<R>();
  for (long j = 0; j <= k; ++j) row[j] = ring_pow(lp1, j) * factorial(j).inverse();
  for (long m = 0; m < n; ++m) {
    std::vector<R> next(row.size());
    for (long j = 0; j <= k; ++j) {
      next[j] = row[j] * Rational(j);
      if (j > 0) next[j] = next[j] - row[j - 1];
    }
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(k)];
}

// ---- y2 and C ----------------------------------------------------------------

// sign = +1 gives y2, sign = -1 gives C.
template <LambdaRing R>
R central_explicit(long n, long k, const R& lambda, int sign) {
  R sum = ring_zero<R>();
  for (long j = 0; j <= k; ++j) {
    R inner = ring_zero<R>();
    for (long l = 0; l <= j; ++l) {
      const long e = 2 * l - j;
      inner = inner + lam_pow(lambda, e) * (binomial(j, l) * int_pow(e, n));
    }
    sum = sum + inner * (binomial(k, j) * int_pow(2 * sign, k - j));
  }
  return sum * factorial(2 * k).inverse();
}

template <LambdaRing R>
Egf<R> central_base(const R& lambda, int sign, std::size_t N) {
  const R inv = inverse_of(lambda);
  return Egf<R>::exp(lambda, ring_one<R>(), N) + Egf<R>::exp(inv, -ring_one<R>(), N) +
         Egf<R>::one(N).scale(R(Rational(2 * sign)));
}

template <LambdaRing R>
R central_series(long n, long k, const R& lambda, int sign) {
  const auto N = order_for(n);
  auto f = central_base(lambda, sign, N).pow(static_cast<unsigned>(k));
  return series_coeff(f.scale(factorial(2 * k).inverse()), n);
}

// d/dt F(t,k) = k F(t,k) - sign/(2k-1) (1 + sign e^-t/lambda) F(t,k-1)
template <LambdaRing R>
R central_recurrence(long n, long k, const R& lambda, int sign) {
  const R inv = inverse_of(lambda);
  // table[j][m] = value at (m, j)
  std::vector<std::vector<R>> table(static_cast<std::size_t>(k) + 1,
                                    std::vector<R>(static_cast<std::size_t>(n) + 1));
  const R g0 = lambda + inv + R(Rational(2 * sign));
  for (long j = 0; j <= k; ++j) {
    auto& col = table[j];
    col[0] = ring_pow(g0, j) * factorial(2 * j).inverse();
    for (long m = 0; m < n; ++m) {
      if (j == 0) {
        col[m + 1] = ring_zero<R>();
        continue;
      }
      const auto& prev = table[j - 1];
      R conv = ring_zero<R>();
      for (long i = 0; i <= m; ++i) conv = conv + prev[i] * (binomial(m, i) * int_pow(-1, m - i));
      R bracket = prev[m] + inv * conv * Rational(sign);
      col[m + 1] = col[m] * Rational(j) - bracket * Rational(sign, 2 * j - 1);
    }
  }
  return table[k][n];
}

// ---- S2 and array polynomials ------------------------------------------------

template <LambdaRing R>
R array_explicit(long n, long v, const Rational& x, const R& lambda) {
  R sum = ring_zero<R>();
  for (long j = 0; j <= v; ++j) {
    sum = sum + lam_pow(lambda, j) * (int_pow(-1, v - j) * binomial(v, j) * rpow(x + Rational(j), n));
  }
  return sum * factorial(v).inverse();
}

template <LambdaRing R>
R array_series(long n, long v, const Rational& x, const R& lambda) {
  const auto N = order_for(n);
  auto base = Egf<R>::exp(lambda, ring_one<R>(), N) - Egf<R>::one(N);
  auto f = base.pow(static_cast<unsigned>(v)).mul(Egf<R>::exp(ring_one<R>(), R(x), N));
  return series_coeff(f.scale(factorial(v).inverse()), n);
}

// S_v^{n+1}(x) = (v + x) S_v^n(x) + S_{v-1}^n(x)
template <LambdaRing R>
R array_recurrence(long n, long v, const Rational& x, const R& lambda) {
  std::vector<R> row(static_cast<std::size_t>(v) + 1);
  const R lm1 = lambda - ring_one<R>();
  for (long j = 0; j <= v; ++j) row[j] = ring_pow(lm1, j) * factorial(j).inverse();
  for (long m = 0; m < n; ++m) {
    std::vector<R> next(row.size());
    for (long j = 0; j <= v; ++j) {
      next[j] = row[j] * (Rational(j) + x);
      if (j > 0) next[j] = next[j] + row[j - 1];
    }
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(v)];
}

// ---- negative-order Euler ----------------------------------------------------

template <LambdaRing R>
R eneg_poly_explicit(long n, long k, const Rational& x, const R& lambda) {
  R sum = ring_zero<R>();
  for (long j = 0; j <= k; ++j) sum = sum + lam_pow(lambda, j) * (binomial(k, j) * rpow(x + Rational(j), n));
  return sum * Rational(2).pow(-k);
}

template <LambdaRing R>
R eneg_poly_series(long n, long k, const Rational& x, const R& lambda) {
  const auto N = order_for(n);
  auto base = (Egf<R>::exp(lambda, ring_one<R>(), N) + Egf<R>::one(N)).scale(Rational(1, 2));
  auto f = base.pow(static_cast<unsigned>(k)).mul(Egf<R>::exp(ring_one<R>(), R(x), N));
  return series_coeff(f, n);
}

// E(n+1,k) = (k + x) E(n,k) - (k/2) E(n,k-1)
template <LambdaRing R>
R eneg_poly_recurrence(long n, long k, const Rational& x, const R& lambda) {
  std::vector<R> row(static_cast<std::size_t>(k) + 1);
  const R half = (lambda + ring_one<R>()) * Rational(1, 2);
  for (long j = 0; j <= k; ++j) row[j] = ring_pow(half, j);
  for (long m = 0; m < n; ++m) {
    std::vector<R> next(row.size());
    for (long j = 0; j <= k; ++j) {
      next[j] = row[j] * (Rational(j) + x);
      if (j > 0) next[j] = next[j] - row[j - 1] * Rational(j, 2);
    }
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(k)];
}

template <LambdaRing R>
R estar_neg_explicit(long n, long k, const R& lambda) {
  R sum = ring_zero<R>();
  for (long j = 0; j <= k; ++j) {
    const long e = 2 * j - k;
    sum = sum + lam_pow(lambda, e) * (binomial(k, j) * int_pow(e, n));
  }
  return sum * Rational(2).pow(-k);
}

template <LambdaRing R>
R estar_neg_series(long n, long k, const R& lambda) {
  const auto N = order_for(n);
  const R inv = inverse_of(lambda);
  auto base = (Egf<R>::exp(lambda, ring_one<R>(), N) + Egf<R>::exp(inv, -ring_one<R>(), N))
                  .scale(Rational(1, 2));
  return series_coeff(base.pow(static_cast<unsigned>(k)), n);
}

// E*(n+1,k) = k E*(n,k) - k/lambda sum_j C(n,j) (-1)^{n-j} E*(j,k-1)
template <LambdaRing R>
R estar_neg_recurrence(long n, long k, const R& lambda) {
  const R inv = inverse_of(lambda);
  std::vector<std::vector<R>> table(static_cast<std::size_t>(k) + 1,
                                    std::vector<R>(static_cast<std::size_t>(n) + 1));
  const R g0 = (lambda + inv) * Rational(1, 2);
  for (long j = 0; j <= k; ++j) {
    auto& col = table[j];
    col[0] = ring_pow(g0, j);
    for (long m = 0; m < n; ++m) {
      if (j == 0) {
        col[m + 1] = ring_zero<R>();
        continue;
      }
      const auto& prev = table[j - 1];
      R conv = ring_zero<R>();
      for (long i = 0; i <= m; ++i) conv = conv + prev[i] * (binomial(m, i) * int_pow(-1, m - i));
      col[m + 1] = col[m] * Rational(j) - inv * conv * Rational(j);
    }
  }
  return table[k][n];
}

}  // namespace

// ---- plumbing ----------------------------------------------------------------

std::string_view method_name(Method m) {
  switch (m) {
    case Method::explicit_sum:
      return "explicit";
    case Method::series:
      return "series";
    case Method::recurrence:
      return "recurrence";
  }
  return "?";
}

std::optional<Method> parse_method(std::string_view text) {
  if (text == "explicit") return Method::explicit_sum;
  if (text == "series") return Method::series;
  if (text == "recurrence") return Method::recurrence;
  return std::nullopt;
}

std::string value_str(const Value& v) {
  return std::visit([](const auto& x) { return to_string(x); }, v);
}

std::optional<std::size_t> truncation_override() {
  {
    std::lock_guard lock(g_override_mu);
    if (g_override) return g_override;
  }
  const char* env = std::getenv("NEGORD_TRUNC_ORDER");
  if (env == nullptr || *env == '\0') return std::nullopt;
  char* end = nullptr;
  const unsigned long long parsed = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0') {
    throw std::invalid_argument(std::string("NEGORD_TRUNC_ORDER is not a nonnegative integer: ") + env);
  }
  return static_cast<std::size_t>(parsed);
}

void set_truncation_override(std::optional<std::size_t> order) {
  std::lock_guard lock(g_override_mu);
  g_override = order;
}

std::size_t truncation_order(long n) {
  if (n < 0) throw std::invalid_argument("coefficient index must be nonnegative");
  const auto o = truncation_override();
  if (!o) return static_cast<std::size_t>(n) + 2;
  if (*o < static_cast<std::size_t>(n)) {
    throw std::invalid_argument("truncation order " + std::to_string(*o) +
                                " is below the requested coefficient " + std::to_string(n));
  }
  return *o;
}

void clear_family_caches() {
  cache<Rational>().clear();
  cache<Laurent>().clear();
}

void set_family_cache_enabled(bool enabled) { g_cache_enabled.store(enabled); }

// ---- lambda families -----------------------------------------------------------

template <LambdaRing R>
R y1(long n, long k, const R& lambda, Method m) {
  require_nonnegative(n, k);
  return memo<R>("y1", m, n, k, lambda_key(lambda), [&] {
    switch (m) {
      case Method::explicit_sum:
        return y1_explicit(n, k, lambda);
      case Method::series:
        return y1_series(n, k, lambda);
      case Method::recurrence:
        return y1_recurrence(n, k, lambda);
    }
    unsupported("y1", m);
  });
}

template <LambdaRing R>
R y2(long n, long k, const R& lambda, Method m) {
  require_nonnegative(n, k);
  inverse_of(lambda);
  return memo<R>("y2", m, n, k, lambda_key(lambda), [&] {
    switch (m) {
      case Method::explicit_sum:
        return central_explicit(n, k, lambda, 1);
      case Method::series:
        return central_series(n, k, lambda, 1);
      case Method::recurrence:
        return central_recurrence(n, k, lambda, 1);
    }
    unsupported("y2", m);
  });
}

template <LambdaRing R>
R c_central(long n, long k, const R& lambda, Method m) {
  require_nonnegative(n, k);
  inverse_of(lambda);
  return memo<R>("C", m, n, k, lambda_key(lambda), [&] {
    switch (m) {
      case Method::explicit_sum:
        return central_explicit(n, k, lambda, -1);
      case Method::series:
        return central_series(n, k, lambda, -1);
      case Method::recurrence:
        return central_recurrence(n, k, lambda, -1);
    }
    unsupported("C", m);
  });
}

template <LambdaRing R>
R stirling2_lambda(long n, long v, const R& lambda, Method m) {
  require_nonnegative(n, v);
  return memo<R>("S2", m, n, v, lambda_key(lambda), [&] {
    switch (m) {
      case Method::explicit_sum:
        return array_explicit(n, v, Rational(0), lambda);
      case Method::series:
        return array_series(n, v, Rational(0), lambda);
      case Method::recurrence:
        return array_recurrence(n, v, Rational(0), lambda);
    }
    unsupported("S2", m);
  });
}

template <LambdaRing R>
R array_poly(long n, long v, const Rational& x, const R& lambda, Method m) {
  require_nonnegative(n, v);
  return memo<R>("array", m, n, v, x.str() + '|' + lambda_key(lambda), [&] {
    switch (m) {
      case Method::explicit_sum:
        return array_explicit(n, v, x, lambda);
      case Method::series:
        return array_series(n, v, x, lambda);
      case Method::recurrence:
        return array_recurrence(n, v, x, lambda);
    }
    unsupported("array", m);
  });
}

template <LambdaRing R>
R euler_first_neg(long n, long k, const R& lambda, Method m) {
  return euler_first_neg_poly(n, k, Rational(0), lambda, m);
}

template <LambdaRing R>
R euler_first_neg_poly(long n, long k, const Rational& x, const R& lambda, Method m) {
  require_nonnegative(n, k);
  return memo<R>("e-neg-poly", m, n, k, x.str() + '|' + lambda_key(lambda), [&] {
    switch (m) {
      case Method::explicit_sum:
        return eneg_poly_explicit(n, k, x, lambda);
      case Method::series:
        return eneg_poly_series(n, k, x, lambda);
      case Method::recurrence:
        return eneg_poly_recurrence(n, k, x, lambda);
    }
    unsupported("e-neg-poly", m);
  });
}

template <LambdaRing R>
R euler_second_neg(long n, long k, const R& lambda, Method m) {
  require_nonnegative(n, k);
  inverse_of(lambda);
  return memo<R>("e-star-neg", m, n, k, lambda_key(lambda), [&] {
    switch (m) {
      case Method::explicit_sum:
        return estar_neg_explicit(n, k, lambda);
      case Method::series:
        return estar_neg_series(n, k, lambda);
      case Method::recurrence:
        return estar_neg_recurrence(n, k, lambda);
    }
    unsupported("e-star-neg", m);
  });
}

template <LambdaRing R>
R apostol_bernoulli_neg(long n, long k, const R& lambda, Method m) {
  require_nonnegative(n, k);
  return memo<R>("b-neg", m, n, k, lambda_key(lambda), [&]() -> R {
    // n! k! / (n+k)!
    const Rational scale = (factorial(n) * factorial(k)) / factorial(n + k);
    switch (m) {
      case Method::explicit_sum:
        return array_explicit(n + k, k, Rational(0), lambda) * scale;
      case Method::recurrence:
        return array_recurrence(n + k, k, Rational(0), lambda) * scale;
      case Method::series: {
        const auto N = order_for(n);
        const auto K = static_cast<std::size_t>(k);
        auto base = Egf<R>::exp(lambda, ring_one<R>(), N + K) - Egf<R>::one(N + K);
        // Away from lambda = 1 the quotient has a polar part in t; only the
        // regular part carries B_n^(-k), so the low coefficients are dropped.
        auto coeffs = base.pow(static_cast<unsigned>(k)).coeffs();
        for (std::size_t j = 0; j < K; ++j) coeffs[j] = ring_zero<R>();
        return series_coeff(Egf<R>(std::move(coeffs)).shift_div_t(K), n);
      }
    }
    unsupported("b-neg", m);
  });
}

#define NEGORD_INSTANTIATE(R)                                                          \
  template R y1<R>(long, long, const R&, Method);                                      \
  template R y2<R>(long, long, const R&, Method);                                      \
  template R c_central<R>(long, long, const R&, Method);                               \
  template R stirling2_lambda<R>(long, long, const R&, Method);                        \
  template R array_poly<R>(long, long, const Rational&, const R&, Method);             \
  template R euler_first_neg<R>(long, long, const R&, Method);                         \
  template R euler_first_neg_poly<R>(long, long, const Rational&, const R&, Method);   \
  template R euler_second_neg<R>(long, long, const R&, Method);                        \
  template R apostol_bernoulli_neg<R>(long, long, const R&, Method);

NEGORD_INSTANTIATE(Rational)
NEGORD_INSTANTIATE(Laurent)

#undef NEGORD_INSTANTIATE

// ---- numeric families -----------------------------------------------------------

Rational central_T(long n, long k, Method m) {
  require_nonnegative(n, k);
  return memo<Rational>("T", m, n, k, "", [&]() -> Rational {
    switch (m) {
      case Method::explicit_sum: {
        Rational sum;
        for (long j = 0; j <= 2 * k; ++j) {
          sum += int_pow(-1, j) * binomial(2 * k, j) * int_pow(k - j, 2 * n);
        }
        return sum / factorial(2 * k);
      }
      case Method::series:
        return central_series(2 * n, k, Rational(1), -1);
      case Method::recurrence: {
        // T(m,j) = T(m-1,j-1) + j^2 T(m-1,j), T(0,0) = 1
        std::vector<Rational> row(static_cast<std::size_t>(k) + 1);
        row[0] = Rational(1);
        for (long i = 0; i < n; ++i) {
          std::vector<Rational> next(row.size());
          for (long j = 1; j <= k; ++j) next[j] = row[j - 1] + Rational(j * j) * row[j];
          row = std::move(next);
        }
        return row[static_cast<std::size_t>(k)];
      }
    }
    unsupported("T", m);
  });
}

Rational golombek_B(long n, long k, Method m) {
  require_nonnegative(n, k);
  return memo<Rational>("B", m, n, k, "", [&]() -> Rational {
    switch (m) {
      case Method::explicit_sum: {
        Rational sum;
        for (long j = 0; j <= k; ++j) sum += binomial(k, j) * int_pow(j, n);
        return sum;
      }
      case Method::series: {
        const auto N = order_for(n);
        auto base = Egf<Rational>::exp(Rational(1), Rational(1), N) + Egf<Rational>::one(N);
        return base.pow(static_cast<unsigned>(k)).coeff(n);
      }
      case Method::recurrence: {
        // B(m+1,j) = j B(m,j) - j B(m,j-1), B(0,j) = 2^j
        std::vector<Rational> row(static_cast<std::size_t>(k) + 1);
        for (long j = 0; j <= k; ++j) row[j] = int_pow(2, j);
        for (long i = 0; i < n; ++i) {
          std::vector<Rational> next(row.size());
          for (long j = 0; j <= k; ++j) {
            next[j] = Rational(j) * row[j];
            if (j > 0) next[j] -= Rational(j) * row[j - 1];
          }
          row = std::move(next);
        }
        return row[static_cast<std::size_t>(k)];
      }
    }
    unsupported("B", m);
  });
}

Rational bernoulli_number(long n, Method m) { return bernoulli_poly(n, Rational(0), m); }

Rational bernoulli_poly(long n, const Rational& x, Method m) {
  require_nonnegative(n, 0);
  return memo<Rational>("bernoulli", m, n, 0, x.str(), [&]() -> Rational {
    switch (m) {
      case Method::explicit_sum: {
        // sum_{k=0}^{j} C(j+1,k) B_k = 0 for j >= 1, B_0 = 1
        std::vector<Rational> b(static_cast<std::size_t>(n) + 1);
        b[0] = Rational(1);
        for (long j = 1; j <= n; ++j) {
          Rational acc;
          for (long i = 0; i < j; ++i) acc += binomial(j + 1, i) * b[i];
          b[j] = -acc / Rational(j + 1);
        }
        Rational sum;
        for (long i = 0; i <= n; ++i) sum += binomial(n, i) * b[i] * x.pow(n - i);
        return sum;
      }
      case Method::series: {
        const auto N = order_for(n);
        auto em1 = Egf<Rational>::exp(Rational(1), Rational(1), N + 1) - Egf<Rational>::one(N + 1);
        auto gen = em1.shift_div_t(1).reciprocal();
        return gen.mul(Egf<Rational>::exp(Rational(1), x, N)).coeff(n);
      }
      case Method::recurrence:
        break;
    }
    unsupported("bernoulli", m);
  });
}

Rational euler_first_pos(long n, long k, const Rational& x, const Rational& lambda, Method m) {
  require_nonnegative(n, k);
  if (lambda == Rational(-1)) throw std::domain_error("E^(k) needs lambda != -1");
  return memo<Rational>("e-pos", m, n, k, x.str() + '|' + lambda.str(), [&]() -> Rational {
    const auto N = order_for(n);
    switch (m) {
      case Method::series: {
        auto g = (Egf<Rational>::exp(lambda, Rational(1), N) + Egf<Rational>::one(N)).scale(Rational(1, 2));
        auto f = g.reciprocal().pow(static_cast<unsigned>(k)).mul(Egf<Rational>::exp(Rational(1), x, N));
        return f.coeff(n);
      }
      case Method::explicit_sum: {
        // ((1+lambda)/2)^-k (1 + u (e^t - 1))^-k with u = lambda/(1+lambda),
        // expanded by the negative binomial series and S2(i,j) j!.
        const Rational lp1 = lambda + Rational(1);
        const Rational u = lambda / lp1;
        const Rational front = (Rational(2) / lp1).pow(k);
        if (k == 0) return x.pow(n);
        Rational sum;
        for (long i = 0; i <= n; ++i) {
          Rational at_zero;
          for (long j = 0; j <= i; ++j) {
            const Rational neg_binom = int_pow(-1, j) * binomial(k + j - 1, j);
            at_zero += neg_binom * u.pow(j) * factorial(j) * stirling2_lambda(i, j, Rational(1));
          }
          sum += binomial(n, i) * front * at_zero * x.pow(n - i);
        }
        return sum;
      }
      case Method::recurrence: {
        // sum_j C(i,j) E^(-k)_j E^(k)_{i-j}(x) = x^i, solved for E^(k)_i(x)
        std::vector<Rational> neg(static_cast<std::size_t>(n) + 1);
        for (long j = 0; j <= n; ++j) neg[j] = euler_first_neg(j, k, lambda, Method::recurrence);
        const Rational inv0 = neg[0].inverse();
        std::vector<Rational> out(static_cast<std::size_t>(n) + 1);
        for (long i = 0; i <= n; ++i) {
          Rational acc = x.pow(i);
          for (long j = 1; j <= i; ++j) acc -= binomial(i, j) * neg[j] * out[i - j];
          out[i] = acc * inv0;
        }
        return out[static_cast<std::size_t>(n)];
      }
    }
    unsupported("e-pos", m);
  });
}

Rational euler_second_std(long n, Method m) {
  require_nonnegative(n, 0);
  return memo<Rational>("e-star", m, n, 0, "", [&]() -> Rational {
    switch (m) {
      case Method::series: {
        const auto N = order_for(n);
        auto cosh2 = Egf<Rational>::exp(Rational(1), Rational(1), N) +
                     Egf<Rational>::exp(Rational(1), Rational(-1), N);
        return cosh2.scale(Rational(1, 2)).reciprocal().coeff(n);
      }
      case Method::explicit_sum: {
        // 2/(e^t + e^-t) = e^t * 2/(e^{2t} + 1)
        Rational sum;
        for (long i = 0; i <= n; ++i) {
          sum += binomial(n, i) * int_pow(2, i) * euler_first_pos(i, 1, Rational(0), Rational(1));
        }
        return sum;
      }
      case Method::recurrence:
        break;
    }
    unsupported("e-star", m);
  });
}

namespace {

QuadNum quad_binet(long n, bool lucas_kind) {
  const QuadNum a = QuadNum::golden();
  const QuadNum b = QuadNum::golden_conjugate();
  if (lucas_kind) return a.pow(n) + b.pow(n);
  return (a.pow(n) - b.pow(n)) * *QuadNum::sqrt5().inverse();
}

Rational rational_or_throw(const QuadNum& q, std::string_view what) {
  if (!q.is_rational()) {
    throw std::logic_error(std::string(what) + " produced a nonzero radical part: " + q.str());
  }
  return q.rational_part();
}

Rational fib_lucas(long n, Method m, bool lucas_kind) {
  require_nonnegative(n, 0);
  const char* name = lucas_kind ? "lucas" : "fib";
  switch (m) {
    case Method::recurrence: {
      Rational prev = lucas_kind ? Rational(2) : Rational(0);
      Rational cur = Rational(1);
      if (n == 0) return prev;
      for (long i = 1; i < n; ++i) {
        Rational next = prev + cur;
        prev = std::move(cur);
        cur = std::move(next);
      }
      return cur;
    }
    case Method::explicit_sum:
      return rational_or_throw(quad_binet(n, lucas_kind), name);
    case Method::series: {
      const auto N = order_for(n);
      const QuadNum a = QuadNum::golden();
      const QuadNum b = QuadNum::golden_conjugate();
      auto ea = Egf<QuadNum>::exp(QuadNum(1), a, N);
      auto eb = Egf<QuadNum>::exp(QuadNum(1), b, N);
      // (e^{at} - e^{bt}) / (a - b) with a - b = sqrt 5
      auto f = lucas_kind ? ea + eb : (ea - eb).scale(*QuadNum::sqrt5().inverse());
      return rational_or_throw(f.coeff(n), name);
    }
  }
  unsupported(name, m);
}

}  // namespace

Rational fibonacci(long n, Method m) { return fib_lucas(n, m, false); }

Rational lucas(long n, Method m) { return fib_lucas(n, m, true); }

Rational lucas_order(long n, long k, Method m) {
  require_nonnegative(n, k);
  return memo<Rational>("lucas-order", m, n, k, "", [&]() -> Rational {
    const QuadNum a = QuadNum::golden();
    const QuadNum b = QuadNum::golden_conjugate();
    switch (m) {
      case Method::explicit_sum: {
        QuadNum sum;
        for (long j = 0; j <= k; ++j) {
          const QuadNum rate = a * Rational(j) + b * Rational(k - j);
          sum += rate.pow(n) * binomial(k, j);
        }
        return rational_or_throw(sum, "lucas-order");
      }
      case Method::series: {
        const auto N = order_for(n);
        auto f = Egf<QuadNum>::exp(QuadNum(1), a, N) + Egf<QuadNum>::exp(QuadNum(1), b, N);
        return rational_or_throw(f.pow(static_cast<unsigned>(k)).coeff(n), "lucas-order");
      }
      case Method::recurrence:
        break;
    }
    unsupported("lucas-order", m);
  });
}

}  // namespace negord
