#include "slopecert/poly_text.hpp"

#include <cctype>
#include <limits>
#include <optional>
#include <sstream>

namespace slopecert {

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::invalid_argument(message + " at position " + std::to_string(position)),
      position_(position) {}

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  std::size_t pos() {
    skip_ws();
    return pos_;
  }

  // Unsigned decimal digits; caller handles signs.
  std::optional<BigInt> digits() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) return std::nullopt;
    return BigInt(std::string(s_.substr(start, pos_ - start)));
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

Exponent parse_exponent(Cursor& cur) {
  bool negative = false;
  if (cur.accept('-'))
    negative = true;
  else
    cur.accept('+');
  const std::size_t at = cur.pos();
  auto value = cur.digits();
  if (!value) throw ParseError("expected exponent digits", at);
  if (*value > BigInt(std::numeric_limits<Exponent>::max()))
    throw ParseError("exponent out of range", at);
  const auto e = value->convert_to<Exponent>();
  return negative ? -e : e;
}

}  // namespace

LaurentPoly parse_laurent(std::string_view text) {
  Cursor cur(text);
  if (cur.done()) throw ParseError("empty polynomial", 0);

  LaurentPoly result;
  bool first = true;
  while (!cur.done()) {
    int sign = 1;
    if (cur.accept('+')) {
    } else if (cur.accept('-')) {
      sign = -1;
    } else if (!first) {
      throw ParseError(std::string("expected '+' or '-' but found '") + cur.peek() + "'", cur.pos());
    }
    first = false;

    const std::size_t term_start = cur.pos();
    BigInt coeff = 1;
    bool have_coeff = false;
    if (auto c = cur.digits()) {
      coeff = *c;
      have_coeff = true;
    }
    Exponent exponent = 0;
    bool have_var = false;
    if (have_coeff && cur.accept('*')) {
      if (cur.peek() != 't') throw ParseError("expected 't' after '*'", cur.pos());
    }
    if (cur.accept('t')) {
      have_var = true;
      exponent = 1;
      if (cur.accept('^')) exponent = parse_exponent(cur);
    }
    if (!have_coeff && !have_var) throw ParseError("expected a term", term_start);
    result += LaurentPoly::monomial(sign * coeff, exponent);
  }
  return result;
}

std::string format_laurent(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const Exponent e = it->first;
    const BigInt& c = it->second;
    const bool negative = c < 0;
    const BigInt mag = negative ? BigInt(-c) : c;
    if (first)
      out << (negative ? "-" : "");
    else
      out << (negative ? " - " : " + ");
    first = false;

    if (e == 0) {
      out << mag;
      continue;
    }
    if (mag != 1) out << mag << '*';
    out << 't';
    if (e != 1) out << '^' << e;
  }
  return out.str();
}

std::string describe_parse_error(std::string_view input, const ParseError& err) {
  std::ostringstream out;
  out << "parse error: " << err.what() << '\n'
      << "  " << input << '\n'
      << "  " << std::string(std::min(err.position(), input.size()), ' ') << '^';
  return out.str();
}

}  // namespace slopecert
