#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "slopecert/laurent.hpp"

namespace slopecert {

/// Malformed textual input. position is a 0-based character offset.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& message, std::size_t position);

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Parses terms of the form `c*t^e` joined by `+`/`-`, e.g.
/// `t^2 - t + 1 - t^-1 + t^-2`. Coefficients and exponents may be omitted
/// (`t`, `-3`, `2*t`, `2t`); whitespace is free.
LaurentPoly parse_laurent(std::string_view text);

/// Descending exponents, unit coefficients elided: `t^2 - t + 1 - t^-1 + t^-2`.
std::string format_laurent(const LaurentPoly& p);

/// Renders the error with a caret under the offending column.
std::string describe_parse_error(std::string_view input, const ParseError& err);

}  // namespace slopecert
