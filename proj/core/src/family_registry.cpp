#include <algorithm>
#include <functional>
#include <stdexcept>

#include "negord/families.hpp"

namespace negord {

namespace {

constexpr Method kE = Method::explicit_sum;
constexpr Method kS = Method::series;
constexpr Method kR = Method::recurrence;

std::vector<FamilyInfo> build_catalog() {
  // tag, summary, uses_k, uses_x, uses_lambda, symbolic, methods
  return {
      {"y1", "y1(n,k;lambda), (lambda e^t + 1)^k / k!", true, false, true, true, {kE, kS, kR}},
      {"y2", "y2(n,k;lambda), (lambda e^t + e^-t/lambda + 2)^k / (2k)!", true, false, true, true,
       {kE, kS, kR}},
      {"C", "C(n,k;lambda), (lambda e^t + e^-t/lambda - 2)^k / (2k)!", true, false, true, true,
       {kE, kS, kR}},
      {"S2", "S2(n,k;lambda), (lambda e^t - 1)^k / k!", true, false, true, true, {kE, kS, kR}},
      {"array", "S_k^n(x;lambda), (lambda e^t - 1)^k e^{xt} / k!", true, true, true, true,
       {kE, kS, kR}},
      {"T", "central factorial T(n,k)", true, false, false, false, {kE, kS, kR}},
      {"B", "Golombek sum B(n,k)", true, false, false, false, {kE, kS, kR}},
      {"bernoulli", "Bernoulli polynomial B_n(x)", false, true, false, false, {kE, kS}},
      {"e-neg", "E_n^(-k)(lambda), ((lambda e^t + 1)/2)^k", true, false, true, true, {kE, kS, kR}},
      {"e-neg-poly", "E_n^(-k)(x;lambda), ((lambda e^t + 1)/2)^k e^{xt}", true, true, true, true,
       {kE, kS, kR}},
      {"e-star-neg", "E*_n^(-k)(lambda), ((lambda e^t + e^-t/lambda)/2)^k", true, false, true, true,
       {kE, kS, kR}},
      {"b-neg", "B_n^(-k)(lambda), ((lambda e^t - 1)/t)^k", true, false, true, true, {kE, kS, kR}},
      {"e-pos", "E_n^(k)(x;lambda), (2/(lambda e^t + 1))^k e^{xt}", true, true, true, false,
       {kE, kS, kR}},
      {"e-star", "E*_n, 2/(e^t + e^-t)", false, false, false, false, {kE, kS}},
      {"fib", "Fibonacci f_n", false, false, false, false, {kE, kS, kR}},
      {"lucas", "Lucas L_n", false, false, false, false, {kE, kS, kR}},
      {"lucas-order", "L_n^(k), (e^{at} + e^{bt})^k", true, false, false, false, {kE, kS}},
  };
}

template <LambdaRing R>
R lambda_family(std::string_view tag, long n, long k, const Rational& x, const R& lambda, Method m) {
  if (tag == "y1") return y1(n, k, lambda, m);
  if (tag == "y2") return y2(n, k, lambda, m);
  if (tag == "C") return c_central(n, k, lambda, m);
  if (tag == "S2") return stirling2_lambda(n, k, lambda, m);
  if (tag == "array") return array_poly(n, k, x, lambda, m);
  if (tag == "e-neg") return euler_first_neg(n, k, lambda, m);
  if (tag == "e-neg-poly") return euler_first_neg_poly(n, k, x, lambda, m);
  if (tag == "e-star-neg") return euler_second_neg(n, k, lambda, m);
  if (tag == "b-neg") return apostol_bernoulli_neg(n, k, lambda, m);
  throw std::invalid_argument("unknown family '" + std::string(tag) + "'");
}

Rational plain_family(std::string_view tag, long n, long k, const Rational& x, const Rational& lambda,
                      Method m) {
  if (tag == "T") return central_T(n, k, m);
  if (tag == "B") return golombek_B(n, k, m);
  if (tag == "bernoulli") return bernoulli_poly(n, x, m);
  if (tag == "e-pos") return euler_first_pos(n, k, x, lambda, m);
  if (tag == "e-star") return euler_second_std(n, m);
  if (tag == "fib") return fibonacci(n, m);
  if (tag == "lucas") return lucas(n, m);
  if (tag == "lucas-order") return lucas_order(n, k, m);
  throw std::invalid_argument("unknown family '" + std::string(tag) + "'");
}

}  // namespace

const std::vector<FamilyInfo>& family_catalog() {
  static const std::vector<FamilyInfo> catalog = build_catalog();
  return catalog;
}

const FamilyInfo& family_info(std::string_view tag) {
  const auto& cat = family_catalog();
  auto it = std::find_if(cat.begin(), cat.end(), [&](const FamilyInfo& f) { return f.tag == tag; });
  if (it == cat.end()) throw std::invalid_argument("unknown family '" + std::string(tag) + "'");
  return *it;
}

std::vector<Method> methods_for(std::string_view tag) { return family_info(tag).methods; }

Value evaluate(std::string_view tag, long n, long k, const Rational& x, const Lambda& lambda,
               Method m) {
  const FamilyInfo& info = family_info(tag);
  if (std::find(info.methods.begin(), info.methods.end(), m) == info.methods.end()) {
    throw std::invalid_argument("method '" + std::string(method_name(m)) + "' is not available for " +
                                info.tag);
  }
  const bool symbolic = std::holds_alternative<Symbolic>(lambda);
  if (info.uses_lambda && !info.symbolic && symbolic) {
    throw std::domain_error(info.tag + " has no symbolic-lambda mode");
  }
  if (info.uses_lambda && info.symbolic) {
    if (symbolic) return lambda_family(tag, n, k, x, Laurent::lambda(1), m);
    return lambda_family(tag, n, k, x, std::get<Rational>(lambda), m);
  }
  const Rational numeric = symbolic ? Rational(1) : std::get<Rational>(lambda);
  return plain_family(tag, n, k, x, numeric, m);
}

}  // namespace negord
