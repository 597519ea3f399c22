#pragma once

#include <cstdint>
#include <compare>
#include <string>
#include <string_view>

#include "slopecert/laurent.hpp"

namespace slopecert {

/// A nonnegative surgery coefficient p/q in lowest terms, q >= 1.
class Slope {
 public:
  /// Requires gcd(p, q) == 1, p >= 0, q >= 1; throws std::invalid_argument.
  Slope(std::int64_t p, std::int64_t q);

  /// Reduces p/q first. p >= 0, q >= 1.
  static Slope reduced(std::int64_t p, std::int64_t q);

  std::int64_t p() const noexcept { return p_; }
  std::int64_t q() const noexcept { return q_; }

  BigRational value() const { return BigRational(p_, q_); }
  double to_double() const noexcept { return static_cast<double>(p_) / static_cast<double>(q_); }
  std::string to_string() const;

  friend bool operator==(const Slope&, const Slope&) = default;
  friend std::strong_ordering operator<=>(const Slope& a, const Slope& b);

 private:
  std::int64_t p_;
  std::int64_t q_;
};

/// Accepts "p/q" or an integer "p" (q = 1). Non-reduced fractions are
/// reduced. Throws ParseError on malformed text.
Slope parse_slope(std::string_view text);

/// Same syntax as parse_slope but allows any sign and no reduction
/// requirement; used for enumeration bounds.
BigRational parse_rational(std::string_view text);

}  // namespace slopecert
