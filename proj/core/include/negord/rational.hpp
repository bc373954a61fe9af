#ifndef NEGORD_RATIONAL_HPP
#define NEGORD_RATIONAL_HPP

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace negord {

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Zero is 0/1.
class Rational {
 public:
  Rational() = default;

  template <std::integral I>
  Rational(I value) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_signed_v<I>) {
      value_ = mpq_class(mpz_class(static_cast<signed long>(value)));
    } else {
      value_ = mpq_class(mpz_class(static_cast<unsigned long>(value)));
    }
  }

  /// Throws std::domain_error when `den` is zero.
  Rational(std::int64_t num, std::int64_t den);

  explicit Rational(const mpz_class& integer);
  explicit Rational(mpq_class value);

  /// Accepts "p", "-p", "p/q" and "-p/q" (surrounding blanks ignored).
  /// Throws std::invalid_argument on malformed input or a zero denominator.
  static Rational parse(std::string_view text);

  const mpq_class& gmp() const { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  /// Throws std::domain_error for zero.
  Rational inverse() const;

  /// Integer power; negative exponents require a nonzero base. 0^0 = 1.
  Rational pow(long exponent) const;

  /// "p/q", or "p" when the denominator is 1.
  std::string str() const;

  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

std::optional<Rational> try_inverse(const Rational& q);

std::string to_string(const Rational& q);

/// Binomial coefficient C(n, k); zero when k < 0 or k > n. Requires n >= 0.
Rational binomial(long n, long k);

Rational factorial(long n);

/// Falling factorial (n)_k = n(n-1)...(n-k+1); (n)_0 = 1.
Rational falling_factorial(long n, long k);

/// base^exponent for machine integers with the convention 0^0 = 1.
Rational int_pow(long base, long exponent);

}  // namespace negord

#endif  // NEGORD_RATIONAL_HPP
