#ifndef NEGORD_LAURENT_HPP
#define NEGORD_LAURENT_HPP

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "negord/rational.hpp"

namespace negord {

/// Laurent polynomial in a single indeterminate lambda with exact rational
/// coefficients. Negative exponents are allowed; zero coefficients are never
/// stored, so structural equality is mathematical equality.
class Laurent {
 public:
  using Terms = std::map<int, Rational>;

  Laurent() = default;
  Laurent(const Rational& constant);  // NOLINT(google-explicit-constructor)
  template <std::integral I>
  Laurent(I constant) : Laurent(Rational(constant)) {}  // NOLINT(google-explicit-constructor)

  static Laurent monomial(const Rational& coeff, int exponent);
  /// lambda^exponent with unit coefficient.
  static Laurent lambda(int exponent = 1) { return monomial(Rational(1), exponent); }

  const Terms& terms() const { return terms_; }
  Rational coeff(int exponent) const;
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }

  /// Exact value at lambda = at. Throws std::domain_error when at is zero.
  Rational eval(const Rational& at) const;

  /// Replaces lambda by lambda^m. Throws std::invalid_argument when m is zero.
  Laurent substitute_power(int m) const;

  /// Formal derivative d/dlambda.
  Laurent d_lambda() const;

  /// Only monomials are units of the Laurent ring.
  std::optional<Laurent> inverse() const;

  /// JSON object mapping exponent strings to rational strings, in ascending
  /// exponent order, e.g. {"-1":"-1/2","1":"1/2"}. Zero is {}.
  std::string to_json() const;
  /// Inverse of to_json. Throws std::invalid_argument on malformed input.
  static Laurent from_json(std::string_view text);

  /// Human-readable form, highest power first: "1/2*L^2 + L - 1/2*L^-1".
  std::string pretty(std::string_view symbol = "L") const;

  Laurent operator-() const;
  Laurent& operator+=(const Laurent& rhs);
  Laurent& operator-=(const Laurent& rhs);
  Laurent& operator*=(const Laurent& rhs);
  Laurent& operator*=(const Rational& rhs);

  friend Laurent operator+(Laurent lhs, const Laurent& rhs) { return lhs += rhs; }
  friend Laurent operator-(Laurent lhs, const Laurent& rhs) { return lhs -= rhs; }
  friend Laurent operator*(const Laurent& lhs, const Laurent& rhs);
  friend Laurent operator*(Laurent lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Laurent operator*(const Rational& lhs, Laurent rhs) { return rhs *= lhs; }
  template <std::integral I>
  friend Laurent operator*(Laurent lhs, I rhs) {
    return lhs *= Rational(rhs);
  }
  template <std::integral I>
  friend Laurent operator*(I lhs, Laurent rhs) {
    return rhs *= Rational(lhs);
  }

  friend bool operator==(const Laurent& a, const Laurent& b) = default;

 private:
  void add_term(int exponent, const Rational& coeff);

  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const Laurent& p);

std::optional<Laurent> try_inverse(const Laurent& p);

std::string to_string(const Laurent& p);

}  // namespace negord

#endif  // NEGORD_LAURENT_HPP
