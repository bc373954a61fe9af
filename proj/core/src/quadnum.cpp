#include "negord/quadnum.hpp"

#include <ostream>

namespace negord {

QuadNum QuadNum::golden() { return {Rational(1, 2), Rational(1, 2)}; }

QuadNum QuadNum::golden_conjugate() { return {Rational(1, 2), Rational(-1, 2)}; }

std::optional<QuadNum> QuadNum::inverse() const {
  // sqrt 5 is irrational, so the norm vanishes only at zero.
  const Rational n = norm();
  if (n.is_zero()) return std::nullopt;
  const Rational inv = n.inverse();
  return QuadNum{a_ * inv, -b_ * inv};
}

QuadNum QuadNum::pow(long exponent) const {
  QuadNum base = *this;
  if (exponent < 0) {
    auto inv = inverse();
    if (!inv) throw std::domain_error("negative power of zero in Q(sqrt 5)");
    base = *inv;
    exponent = -exponent;
  }
  QuadNum result(1);
  for (long i = 0; i < exponent; ++i) result *= base;
  return result;
}

std::string QuadNum::str() const {
  if (b_.is_zero()) return a_.str();
  std::string out = a_.is_zero() ? "" : a_.str();
  if (b_.sign() > 0 && !out.empty()) out += '+';
  return out + b_.str() + "*sqrt5";
}

QuadNum& QuadNum::operator+=(const QuadNum& rhs) {
  a_ += rhs.a_;
  b_ += rhs.b_;
  return *this;
}

QuadNum& QuadNum::operator-=(const QuadNum& rhs) {
  a_ -= rhs.a_;
  b_ -= rhs.b_;
  return *this;
}

QuadNum& QuadNum::operator*=(const QuadNum& rhs) {
  const Rational a = a_ * rhs.a_ + Rational(5) * b_ * rhs.b_;
  const Rational b = a_ * rhs.b_ + b_ * rhs.a_;
  a_ = a;
  b_ = b;
  return *this;
}

QuadNum& QuadNum::operator*=(const Rational& rhs) {
  a_ *= rhs;
  b_ *= rhs;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const QuadNum& x) { return os << x.str(); }

std::optional<QuadNum> try_inverse(const QuadNum& x) { return x.inverse(); }

std::string to_string(const QuadNum& x) { return x.str(); }

}  // namespace negord
