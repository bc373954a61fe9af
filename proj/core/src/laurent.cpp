#include "negord/laurent.hpp"

#include <cassert>
#include <charconv>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace negord {

namespace {

// Exponents are machine ints; the families never get near the limits.
[[maybe_unused]] bool fits_sum(int a, int b) {
  int r;
  return !__builtin_add_overflow(a, b, &r);
}

[[maybe_unused]] bool fits_product(int a, int b) {
  int r;
  return !__builtin_mul_overflow(a, b, &r);
}

int parse_exponent(std::string_view key) {
  int value = 0;
  const char* first = key.data();
  const char* last = key.data() + key.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw std::invalid_argument("malformed Laurent exponent: '" + std::string(key) + "'");
  }
  return value;
}

}  // namespace

Laurent::Laurent(const Rational& constant) { add_term(0, constant); }

Laurent Laurent::monomial(const Rational& coeff, int exponent) {
  Laurent p;
  p.add_term(exponent, coeff);
  return p;
}

Rational Laurent::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Laurent::eval(const Rational& at) const {
  if (at.is_zero()) throw std::domain_error("Laurent polynomial evaluated at zero");
  Rational sum;
  for (const auto& [e, c] : terms_) sum += c * at.pow(e);
  return sum;
}

Laurent Laurent::substitute_power(int m) const {
  if (m == 0) throw std::invalid_argument("substitute_power with m = 0");
  Laurent out;
  for (const auto& [e, c] : terms_) {
    assert(fits_product(e, m));
    out.terms_.emplace(e * m, c);
  }
  return out;
}

Laurent Laurent::d_lambda() const {
  Laurent out;
  for (const auto& [e, c] : terms_) {
    if (e != 0) out.add_term(e - 1, c * Rational(e));
  }
  return out;
}

std::optional<Laurent> Laurent::inverse() const {
  if (!is_monomial()) return std::nullopt;
  const auto& [e, c] = *terms_.begin();
  return monomial(c.inverse(), -e);
}

std::string Laurent::to_json() const {
  nlohmann::ordered_json obj = nlohmann::ordered_json::object();
  for (const auto& [e, c] : terms_) obj[std::to_string(e)] = c.str();
  return obj.dump();
}

Laurent Laurent::from_json(std::string_view text) {
  nlohmann::json parsed;
  try {
    parsed = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed Laurent JSON: ") + e.what());
  }
  if (!parsed.is_object()) throw std::invalid_argument("Laurent JSON must be an object");
  Laurent out;
  for (const auto& [key, value] : parsed.items()) {
    if (!value.is_string()) throw std::invalid_argument("Laurent coefficient must be a string");
    out.add_term(parse_exponent(key), Rational::parse(value.get<std::string>()));
  }
  return out;
}

std::string Laurent::pretty(std::string_view symbol) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << '-';
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == Rational(1);
    if (e == 0) {
      os << mag;
      continue;
    }
    if (!unit) os << mag << '*';
    os << symbol;
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

Laurent Laurent::operator-() const {
  Laurent out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

Laurent& Laurent::operator+=(const Laurent& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

Laurent& Laurent::operator*=(const Laurent& rhs) {
  *this = *this * rhs;
  return *this;
}

Laurent& Laurent::operator*=(const Rational& rhs) {
  if (rhs.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= rhs;
  return *this;
}

Laurent operator*(const Laurent& lhs, const Laurent& rhs) {
  Laurent out;
  for (const auto& [ea, ca] : lhs.terms_) {
    for (const auto& [eb, cb] : rhs.terms_) {
      assert(fits_sum(ea, eb));
      out.add_term(ea + eb, ca * cb);
    }
  }
  return out;
}

void Laurent::add_term(int exponent, const Rational& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

std::ostream& operator<<(std::ostream& os, const Laurent& p) { return os << p.pretty(); }

std::optional<Laurent> try_inverse(const Laurent& p) { return p.inverse(); }

std::string to_string(const Laurent& p) { return p.to_json(); }

}  // namespace negord
