#ifndef NEGORD_EGF_HPP
#define NEGORD_EGF_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "negord/rational.hpp"
#include "negord/ring.hpp"

namespace negord {

/// Truncated exponential generating function sum_{n<=N} a_n t^n / n!.
/// Coefficient a_n is stored already scaled by n!.
template <CoefficientRing R>
class Egf {
 public:
  /// Zero series of the given order.
  explicit Egf(std::size_t order) : coeffs_(order + 1, ring_zero<R>()) {}

  explicit Egf(std::vector<R> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("Egf needs at least one coefficient");
  }

  static Egf one(std::size_t order) {
    Egf f(order);
    f.coeffs_[0] = ring_one<R>();
    return f;
  }

  /// prefactor * e^{rate t}: a_n = prefactor * rate^n, with rate^0 = 1.
  static Egf exp(const R& prefactor, const R& rate, std::size_t order) {
    Egf f(order);
    R power = ring_one<R>();
    for (std::size_t n = 0; n <= order; ++n) {
      f.coeffs_[n] = prefactor * power;
      power = power * rate;
    }
    return f;
  }

  /// The monomial t^k, i.e. a_k = k! and every other coefficient zero.
  static Egf t_power(std::size_t k, std::size_t order) {
    Egf f(order);
    if (k <= order) f.coeffs_[k] = R(factorial(static_cast<long>(k)));
    return f;
  }

  std::size_t order() const { return coeffs_.size() - 1; }
  const std::vector<R>& coeffs() const { return coeffs_; }

  /// Throws std::out_of_range unless 0 <= n <= order.
  const R& coeff(long n) const {
    if (n < 0 || static_cast<std::size_t>(n) > order()) {
      throw std::out_of_range("coefficient index " + std::to_string(n) + " outside 0.." +
                              std::to_string(order()));
    }
    return coeffs_[static_cast<std::size_t>(n)];
  }

  Egf operator+(const Egf& rhs) const {
    check_order(rhs);
    Egf out = *this;
    for (std::size_t n = 0; n < coeffs_.size(); ++n) out.coeffs_[n] = out.coeffs_[n] + rhs.coeffs_[n];
    return out;
  }

  Egf operator-(const Egf& rhs) const {
    check_order(rhs);
    Egf out = *this;
    for (std::size_t n = 0; n < coeffs_.size(); ++n) out.coeffs_[n] = out.coeffs_[n] - rhs.coeffs_[n];
    return out;
  }

  Egf operator-() const {
    Egf out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
  }

  Egf scale(const R& s) const {
    Egf out = *this;
    for (auto& c : out.coeffs_) c = c * s;
    return out;
  }

  Egf scale(const Rational& s) const
    requires(!std::same_as<R, Rational>)
  {
    Egf out = *this;
    for (auto& c : out.coeffs_) c = c * s;
    return out;
  }

  /// Binomial convolution c_n = sum_j C(n,j) a_j b_{n-j}.
  Egf mul(const Egf& rhs) const {
    check_order(rhs);
    const std::size_t order_n = order();
    Egf out(order_n);
    for (std::size_t n = 0; n <= order_n; ++n) {
      R acc = ring_zero<R>();
      for (std::size_t j = 0; j <= n; ++j) {
        acc = acc + coeffs_[j] * rhs.coeffs_[n - j] * binomial(static_cast<long>(n), static_cast<long>(j));
      }
      out.coeffs_[n] = acc;
    }
    return out;
  }

  Egf pow(unsigned k) const {
    Egf out = one(order());
    for (unsigned i = 0; i < k; ++i) out = out.mul(*this);
    return out;
  }

  /// Multiplicative inverse through the truncation order. Throws
  /// std::domain_error when a_0 is not a unit.
  Egf reciprocal() const {
    auto inv0 = try_inverse(coeffs_[0]);
    if (!inv0) throw std::domain_error("reciprocal of a series with non-unit constant term");
    const std::size_t order_n = order();
    Egf out(order_n);
    out.coeffs_[0] = *inv0;
    for (std::size_t n = 1; n <= order_n; ++n) {
      R acc = ring_zero<R>();
      for (std::size_t j = 1; j <= n; ++j) {
        acc = acc + coeffs_[j] * out.coeffs_[n - j] * binomial(static_cast<long>(n), static_cast<long>(j));
      }
      out.coeffs_[n] = -(*inv0 * acc);
    }
    return out;
  }

  /// Divides by t^k; the result has order N - k. Throws std::domain_error
  /// when one of a_0..a_{k-1} is nonzero and std::invalid_argument when k > N.
  Egf shift_div_t(std::size_t k) const {
    if (k > order()) throw std::invalid_argument("shift_div_t beyond truncation order");
    const R zero = ring_zero<R>();
    for (std::size_t j = 0; j < k; ++j) {
      if (!(coeffs_[j] == zero)) throw std::domain_error("shift_div_t: series not divisible by t^k");
    }
    Egf out(order() - k);
    for (std::size_t n = 0; n <= out.order(); ++n) {
      // n!/(n+k)!
      const Rational ratio =
          falling_factorial(static_cast<long>(n + k), static_cast<long>(k)).inverse();
      out.coeffs_[n] = coeffs_[n + k] * ratio;
    }
    return out;
  }

  /// f(t) -> f(-t).
  Egf negate_t() const { return dilate(Rational(-1)); }

  /// f(t) -> f(c t): a_n -> c^n a_n.
  Egf dilate(const Rational& c) const {
    Egf out = *this;
    Rational power(1);
    for (auto& a : out.coeffs_) {
      a = a * power;
      power *= c;
    }
    return out;
  }

  /// Drops coefficients above the new order.
  Egf truncate(std::size_t new_order) const {
    if (new_order > order()) throw std::invalid_argument("truncate cannot raise the order");
    return Egf(std::vector<R>(coeffs_.begin(), coeffs_.begin() + static_cast<long>(new_order) + 1));
  }

  friend bool operator==(const Egf&, const Egf&) = default;

 private:
  void check_order(const Egf& rhs) const {
    if (rhs.order() != order()) throw std::invalid_argument("series truncation orders differ");
  }

  std::vector<R> coeffs_;
};

}  // namespace negord

#endif  // NEGORD_EGF_HPP
