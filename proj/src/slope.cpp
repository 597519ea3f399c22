#include "slopecert/slope.hpp"

#include <cctype>
#include <charconv>
#include <numeric>
#include <stdexcept>

#include "slopecert/poly_text.hpp"

namespace slopecert {

Slope::Slope(std::int64_t p, std::int64_t q) : p_(p), q_(q) {
  if (q < 1) throw std::invalid_argument("slope denominator must be positive");
  if (p < 0) throw std::invalid_argument("negative slopes are not supported");
  if (std::gcd(p, q) != 1) throw std::invalid_argument("slope " + to_string() + " is not reduced");
}

Slope Slope::reduced(std::int64_t p, std::int64_t q) {
  if (q < 1) throw std::invalid_argument("slope denominator must be positive");
  if (p < 0) throw std::invalid_argument("negative slopes are not supported");
  const std::int64_t g = std::gcd(p, q);
  return Slope(p / g, q / g);
}

std::string Slope::to_string() const { return std::to_string(p_) + "/" + std::to_string(q_); }

std::strong_ordering operator<=>(const Slope& a, const Slope& b) {
  // Cross-multiplication fits: slopes in this library stay far below 2^31.
  const __int128 lhs = static_cast<__int128>(a.p_) * b.q_;
  const __int128 rhs = static_cast<__int128>(b.p_) * a.q_;
  return lhs <=> rhs;
}

namespace {

struct Fraction {
  std::int64_t num;
  std::int64_t den;
};

std::int64_t parse_int(std::string_view text, std::size_t offset, bool allow_sign) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  std::size_t j = text.size();
  while (j > i && std::isspace(static_cast<unsigned char>(text[j - 1]))) --j;
  std::string_view body = text.substr(i, j - i);
  if (body.empty()) throw ParseError("expected an integer", offset + i);
  if (!allow_sign && (body[0] == '-' || body[0] == '+'))
    throw ParseError("sign not allowed here", offset + i);
  if (body[0] == '+') {
    body.remove_prefix(1);
    ++i;
  }
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), value);
  if (ec == std::errc::result_out_of_range) throw ParseError("integer out of range", offset + i);
  if (ec != std::errc() || ptr != body.data() + body.size()) {
    const auto bad = static_cast<std::size_t>(ptr - body.data());
    throw ParseError("expected an integer", offset + i + bad);
  }
  return value;
}

Fraction parse_fraction(std::string_view text, bool allow_sign) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return {parse_int(text, 0, allow_sign), 1};
  const auto num = parse_int(text.substr(0, slash), 0, allow_sign);
  const auto den = parse_int(text.substr(slash + 1), slash + 1, false);
  if (den == 0) throw ParseError("zero denominator", slash + 1);
  return {num, den};
}

}  // namespace

Slope parse_slope(std::string_view text) {
  const auto f = parse_fraction(text, true);
  if (f.num < 0) throw std::invalid_argument("negative slopes are not supported");
  return Slope::reduced(f.num, f.den);
}

BigRational parse_rational(std::string_view text) {
  const auto f = parse_fraction(text, true);
  return BigRational(f.num, f.den);
}

}  // namespace slopecert
