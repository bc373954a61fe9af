#ifndef NEGORD_FAMILIES_HPP
#define NEGORD_FAMILIES_HPP

#include <concepts>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "negord/laurent.hpp"
#include "negord/quadnum.hpp"
#include "negord/rational.hpp"

namespace negord {

enum class Method { explicit_sum, series, recurrence };

/// "explicit", "series", "recurrence".
std::string_view method_name(Method m);
std::optional<Method> parse_method(std::string_view text);

/// Marker for symbolic lambda: values come back as Laurent polynomials.
struct Symbolic {
  friend bool operator==(Symbolic, Symbolic) { return true; }
};

using Lambda = std::variant<Symbolic, Rational>;

/// Either a numeric result or a Laurent polynomial in lambda.
using Value = std::variant<Rational, Laurent>;

/// Wire form: "p/q" for numbers, the Laurent JSON object otherwise.
std::string value_str(const Value& v);

/// Families that take lambda are instantiated for these two rings.
template <typename R>
concept LambdaRing = std::same_as<R, Rational> || std::same_as<R, Laurent>;

// Series truncation. The default order for coefficient n is n + 2.
// NEGORD_TRUNC_ORDER (or set_truncation_override) replaces it; an override
// below the requested n throws std::invalid_argument.
std::size_t truncation_order(long n);
void set_truncation_override(std::optional<std::size_t> order);
std::optional<std::size_t> truncation_override();

/// Drops memoized values. Results never depend on the cache.
void clear_family_caches();
void set_family_cache_enabled(bool enabled);

// ---- lambda families -------------------------------------------------------
// Negative n or k throws std::invalid_argument. Families containing 1/lambda
// throw std::domain_error when a numeric lambda is zero.

/// y1(n,k;lambda): coefficient of t^n/n! in (lambda e^t + 1)^k / k!.
template <LambdaRing R>
R y1(long n, long k, const R& lambda, Method m = Method::explicit_sum);

/// y2(n,k;lambda): coefficient of t^n/n! in (lambda e^t + e^-t/lambda + 2)^k / (2k)!.
template <LambdaRing R>
R y2(long n, long k, const R& lambda, Method m = Method::explicit_sum);

/// C(n,k;lambda): coefficient of t^n/n! in (lambda e^t + e^-t/lambda - 2)^k / (2k)!.
template <LambdaRing R>
R c_central(long n, long k, const R& lambda, Method m = Method::explicit_sum);

/// S2(n,v;lambda): coefficient of t^n/n! in (lambda e^t - 1)^v / v!.
template <LambdaRing R>
R stirling2_lambda(long n, long v, const R& lambda, Method m = Method::explicit_sum);

/// S_v^n(x;lambda): coefficient of t^n/n! in (lambda e^t - 1)^v e^{xt} / v!.
template <LambdaRing R>
R array_poly(long n, long v, const Rational& x, const R& lambda, Method m = Method::explicit_sum);

/// E_n^(-k)(lambda): coefficient of t^n/n! in ((lambda e^t + 1)/2)^k.
template <LambdaRing R>
R euler_first_neg(long n, long k, const R& lambda, Method m = Method::explicit_sum);

/// E_n^(-k)(x;lambda): coefficient of t^n/n! in ((lambda e^t + 1)/2)^k e^{xt}.
template <LambdaRing R>
R euler_first_neg_poly(long n, long k, const Rational& x, const R& lambda,
                       Method m = Method::explicit_sum);

/// E*_n^(-k)(lambda): coefficient of t^n/n! in ((lambda e^t + e^-t/lambda)/2)^k.
template <LambdaRing R>
R euler_second_neg(long n, long k, const R& lambda, Method m = Method::explicit_sum);

/// B_n^(-k)(lambda): coefficient of t^n/n! in ((lambda e^t - 1)/t)^k.
/// The recurrence method runs the S2 recurrence at (n+k, k).
template <LambdaRing R>
R apostol_bernoulli_neg(long n, long k, const R& lambda, Method m = Method::explicit_sum);

// ---- numeric families ------------------------------------------------------

/// T(n,k): coefficient of t^{2n}/(2n)! in (e^t + e^-t - 2)^k / (2k)!, T(0,0) = 1.
Rational central_T(long n, long k, Method m = Method::recurrence);

/// Golombek sum B(n,k) = sum_j C(k,j) j^n.
Rational golombek_B(long n, long k, Method m = Method::explicit_sum);

/// B_n(x) from t e^{xt}/(e^t - 1). Explicit path: the Bernoulli-number recurrence.
Rational bernoulli_poly(long n, const Rational& x, Method m = Method::explicit_sum);
Rational bernoulli_number(long n, Method m = Method::explicit_sum);

/// E_n^(k)(x;lambda) for k >= 0: coefficient of t^n/n! in
/// (2/(lambda e^t + 1))^k e^{xt}. Throws std::domain_error at lambda = -1.
Rational euler_first_pos(long n, long k, const Rational& x, const Rational& lambda,
                         Method m = Method::series);

/// E*_n: coefficient of t^n/n! in 2/(e^t + e^-t).
Rational euler_second_std(long n, Method m = Method::series);

Rational fibonacci(long n, Method m = Method::recurrence);
Rational lucas(long n, Method m = Method::recurrence);

/// L_n^(k) = sum_j C(k,j) (j a + (k-j) b)^n with a, b the roots of x^2 = x + 1.
/// A nonzero radical part throws std::logic_error.
Rational lucas_order(long n, long k, Method m = Method::explicit_sum);

// ---- registry --------------------------------------------------------------

struct FamilyInfo {
  std::string tag;
  std::string summary;
  bool uses_k = true;
  bool uses_x = false;
  bool uses_lambda = true;
  bool symbolic = true;
  std::vector<Method> methods;
};

const std::vector<FamilyInfo>& family_catalog();
/// Throws std::invalid_argument for an unknown tag.
const FamilyInfo& family_info(std::string_view tag);
std::vector<Method> methods_for(std::string_view tag);

/// Dispatches on the tag. Lambda-free families ignore lambda and return a
/// Rational even in symbolic mode. Throws std::invalid_argument for an
/// unknown tag or unsupported method, and std::domain_error when the
/// family cannot be evaluated at the given lambda.
Value evaluate(std::string_view tag, long n, long k, const Rational& x, const Lambda& lambda,
               Method m);

}  // namespace negord

#endif  // NEGORD_FAMILIES_HPP
