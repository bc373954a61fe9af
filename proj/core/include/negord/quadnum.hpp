#ifndef NEGORD_QUADNUM_HPP
#define NEGORD_QUADNUM_HPP

#include <iosfwd>
#include <optional>
#include <string>

#include "negord/rational.hpp"

namespace negord {

/// Element a + b*sqrt(5) of the field Q(sqrt 5).
class QuadNum {
 public:
  QuadNum() = default;
  QuadNum(const Rational& rational_part, const Rational& radical_part = Rational(0))  // NOLINT
      : a_(rational_part), b_(radical_part) {}
  template <std::integral I>
  QuadNum(I value) : a_(value) {}  // NOLINT(google-explicit-constructor)

  static QuadNum sqrt5() { return {Rational(0), Rational(1)}; }
  /// (1 + sqrt 5) / 2
  static QuadNum golden();
  /// (1 - sqrt 5) / 2
  static QuadNum golden_conjugate();

  const Rational& rational_part() const { return a_; }
  const Rational& radical_part() const { return b_; }
  bool is_rational() const { return b_.is_zero(); }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

  QuadNum conjugate() const { return {a_, -b_}; }
  /// a^2 - 5 b^2
  Rational norm() const { return a_ * a_ - Rational(5) * b_ * b_; }
  std::optional<QuadNum> inverse() const;
  QuadNum pow(long exponent) const;

  /// "a+b*sqrt5" (the radical term is omitted when b = 0).
  std::string str() const;

  QuadNum operator-() const { return {-a_, -b_}; }
  QuadNum& operator+=(const QuadNum& rhs);
  QuadNum& operator-=(const QuadNum& rhs);
  QuadNum& operator*=(const QuadNum& rhs);
  QuadNum& operator*=(const Rational& rhs);

  friend QuadNum operator+(QuadNum lhs, const QuadNum& rhs) { return lhs += rhs; }
  friend QuadNum operator-(QuadNum lhs, const QuadNum& rhs) { return lhs -= rhs; }
  friend QuadNum operator*(QuadNum lhs, const QuadNum& rhs) { return lhs *= rhs; }
  friend QuadNum operator*(QuadNum lhs, const Rational& rhs) { return lhs *= rhs; }
  friend QuadNum operator*(const Rational& lhs, QuadNum rhs) { return rhs *= lhs; }
  template <std::integral I>
  friend QuadNum operator*(QuadNum lhs, I rhs) {
    return lhs *= Rational(rhs);
  }

  friend bool operator==(const QuadNum&, const QuadNum&) = default;

 private:
  Rational a_;
  Rational b_;
};

std::ostream& operator<<(std::ostream& os, const QuadNum& x);

std::optional<QuadNum> try_inverse(const QuadNum& x);

std::string to_string(const QuadNum& x);

}  // namespace negord

#endif  // NEGORD_QUADNUM_HPP
