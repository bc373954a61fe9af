#ifndef NEGORD_RING_HPP
#define NEGORD_RING_HPP

#include <concepts>
#include <optional>

#include "negord/laurent.hpp"
#include "negord/quadnum.hpp"
#include "negord/rational.hpp"

namespace negord {

/// Coefficient ring accepted by the series engine. Units are detected through
/// an ADL-visible try_inverse returning std::nullopt for non-units.
template <typename R>
concept CoefficientRing = std::regular<R> && requires(const R& a, const R& b, const Rational& q) {
  { a + b } -> std::convertible_to<R>;
  { a - b } -> std::convertible_to<R>;
  { a * b } -> std::convertible_to<R>;
  { -a } -> std::convertible_to<R>;
  { a * q } -> std::convertible_to<R>;
  R(q);
  { try_inverse(a) } -> std::same_as<std::optional<R>>;
};

template <CoefficientRing R>
R ring_zero() {
  return R(Rational(0));
}

template <CoefficientRing R>
R ring_one() {
  return R(Rational(1));
}

/// Nonnegative power by repeated multiplication; x^0 = 1 for every x.
template <CoefficientRing R>
R ring_pow(const R& x, long exponent) {
  R out = ring_one<R>();
  for (long i = 0; i < exponent; ++i) out = out * x;
  return out;
}

static_assert(CoefficientRing<Rational>);
static_assert(CoefficientRing<Laurent>);
static_assert(CoefficientRing<QuadNum>);

}  // namespace negord

#endif  // NEGORD_RING_HPP
