#include "negord/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace negord {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_integer_literal(std::string_view s, bool allow_sign) {
  if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  value_ = mpq_class(mpz_class(static_cast<signed long>(num)), mpz_class(static_cast<signed long>(den)));
  value_.canonicalize();
}

Rational::Rational(const mpz_class& integer) : value_(integer) {}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  const std::string_view s = trim(text);
  const auto slash = s.find('/');
  const std::string_view num = s.substr(0, slash);
  if (!is_integer_literal(num, true)) {
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  }
  std::string num_str(num.front() == '+' ? num.substr(1) : num);
  mpz_class n(num_str, 10);
  if (slash == std::string_view::npos) return Rational(n);

  const std::string_view den = s.substr(slash + 1);
  if (!is_integer_literal(den, true)) {
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  }
  mpz_class d(std::string(den.front() == '+' ? den.substr(1) : den), 10);
  if (d == 0) throw std::invalid_argument("rational with zero denominator: '" + std::string(text) + "'");
  return Rational(mpq_class(n, d));
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  return Rational(mpq_class(1 / value_));
}

Rational Rational::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(mpq_class(num, den));
}

std::string Rational::str() const { return value_.get_str(10); }

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("division by zero");
  value_ /= rhs.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

std::optional<Rational> try_inverse(const Rational& q) {
  if (q.is_zero()) return std::nullopt;
  return q.inverse();
}

std::string to_string(const Rational& q) { return q.str(); }

Rational binomial(long n, long k) {
  if (n < 0) throw std::domain_error("binomial with negative upper index");
  if (k < 0 || k > n) return Rational(0);
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(r);
}

Rational factorial(long n) {
  if (n < 0) throw std::domain_error("factorial of a negative integer");
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(r);
}

Rational falling_factorial(long n, long k) {
  if (k < 0) throw std::domain_error("falling factorial with negative length");
  mpz_class r(1);
  for (long i = 0; i < k; ++i) r *= (n - i);
  return Rational(r);
}

Rational int_pow(long base, long exponent) { return Rational(base).pow(exponent); }

}  // namespace negord
