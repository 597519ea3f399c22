#pragma once

// Finite group presentations: torus-knot surgery groups, cyclic groups,
// a small text format, and exact abelianization via Smith normal form.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "slopecert/laurent.hpp"
#include "slopecert/slope.hpp"

namespace slopecert {

/// Letters are signed 1-based generator indices: +k is x_k, -k its inverse.
using Word = std::vector<int>;

struct GroupPresentation {
  /// Throws std::invalid_argument if a letter is 0 or exceeds generator_count.
  GroupPresentation(int generator_count, std::vector<Word> relators);

  int generator_count;
  std::vector<Word> relators;

  friend bool operator==(const GroupPresentation&, const GroupPresentation&) = default;
};

/// Cancels adjacent inverse pairs.
Word free_reduce(const Word& w);
Word power(const Word& w, std::int64_t n);
Word inverse(const Word& w);
Word concat(const Word& a, const Word& b);

/// Peripheral words in <x, y | x^a = y^b>: mu = x^-s y^r with r a - s b = 1
/// and r the least nonnegative solution, lambda = x^a mu^(-ab).
struct TorusPeripheral {
  std::int64_t r;
  std::int64_t s;
  Word meridian;
  Word longitude;
};

TorusPeripheral torus_peripheral(std::int64_t a, std::int64_t b);

/// <x, y | x^a y^-b, mu^p lambda^q>, or the knot group alone when unfilled.
/// The abelianization is checked to be Z/p (Z when unfilled); a mismatch
/// throws std::logic_error.
GroupPresentation surgery_presentation(std::int64_t a, std::int64_t b, const Slope& slope,
                                       bool unfilled = false);

/// <x | x^p>, p >= 1.
GroupPresentation lens_presentation(std::int64_t p);

/// Invariant factors of the relation matrix, units dropped, free factors as
/// 0. The trivial group gives {1}.
std::vector<BigInt> abelianization_smith(const GroupPresentation& pres);

/// Text format:
///   gens <n>
///   rel <word>        word = space-separated x1, X1 (inverse), x2, ...
/// Blank lines and lines starting with '#' are ignored.
GroupPresentation parse_presentation(std::string_view text);
GroupPresentation read_presentation_file(const std::string& path);
std::string format_presentation(const GroupPresentation& pres);

}  // namespace slopecert
