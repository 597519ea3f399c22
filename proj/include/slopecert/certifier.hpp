#pragma once

// Slope certification: decides whether known results imply that p/q surgery
// on every nontrivial knot in S^3 has an irreducible SU(2) representation.
//
// Rules, applied in order (all applicable rules are recorded, the first one
// is the headline):
//   R1  p/q in [0, 2]
//   R2  p/q in (2, 3), p a prime power
//   R3  p a power of 2, p/q < 7
//   R4  p an odd prime power, gcd(p, 5) = 1, p/q in [4, 5)
//   R5  p an odd prime power, gcd(p, 5) = 1, p/q in [3, 4),
//       g(S(p, 2q, 10q)) <= (p + 1) / 4
// Without a rule the verdict is "fails_in_general" at p/q = 5 (5-surgery on
// the right-handed trefoil is a lens space) and "open" everywhere else.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "slopecert/slope.hpp"

namespace slopecert {

enum class Verdict { certified, open, fails_in_general };

std::string to_string(Verdict v);
Verdict verdict_from_string(const std::string& s);

/// Process exit code for a verdict: 0 certified, 2 open, 3 fails_in_general.
int exit_code(Verdict v);

using Witnesses = std::map<std::string, std::string>;

struct RuleRecord {
  std::string rule;
  std::string citation;
  Witnesses witnesses;

  friend bool operator==(const RuleRecord&, const RuleRecord&) = default;
};

struct Certificate {
  Slope slope{0, 1};
  Verdict verdict = Verdict::open;
  std::vector<RuleRecord> chain;
  Witnesses witnesses;

  bool cites(const std::string& rule) const;
  friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// n = prime^exponent with exponent >= 1, or nullopt. n >= 2.
std::optional<PrimePower> is_prime_power(std::uint64_t n);

/// 23p - 9 <= 80q <= 25p + 9
bool slope_inequality_holds(const Slope& slope);

Certificate certify(const Slope& slope);

struct EnumerationOptions {
  std::int64_t max_p = 10;
  BigRational lo = 0;
  BigRational hi = 7;
  /// Denominator cap. Required in effect when lo == 0 (otherwise 1/q, 2/q, ...
  /// never end); defaults to max_p there. When lo > 0 the range itself bounds
  /// q by p / lo, and max_q only tightens that.
  std::optional<std::int64_t> max_q;
};

struct EnumerationResult {
  std::vector<Certificate> certificates;  // sorted by slope value
  std::map<Verdict, std::size_t> counts;
};

EnumerationResult enumerate_certified(const EnumerationOptions& options);

}  // namespace slopecert
