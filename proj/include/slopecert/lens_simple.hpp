#pragma once

// Primitive simple knots S(p, 2q, 10q) in the lens space L(p, 2q).
//
// For an odd p coprime to 5 and p/q in [3, 6] this knot is the (5,2) curve on
// the Heegaard torus, its complement has the torus knot group of T(5, d), and
// its knot Floer Euler characteristic is Delta_{T(5,d)} times a window of p
// consecutive monomials.

#include <cstdint>
#include <map>

#include "slopecert/laurent.hpp"
#include "slopecert/slope.hpp"

namespace slopecert {

/// L(a, b): a >= 2, 1 <= b < a, gcd(a, b) = 1.
struct LensSpaceId {
  LensSpaceId(std::int64_t a, std::int64_t b);

  std::int64_t a;
  std::int64_t b;
};

/// Graded Euler characteristic with coefficients in {-1, +1}; zeros are not
/// stored.
class GradedEuler {
 public:
  using Coefficients = std::map<Exponent, int>;

  GradedEuler() = default;
  /// Throws std::invalid_argument unless every coefficient is +1 or -1.
  explicit GradedEuler(Coefficients coefficients);
  /// Throws std::invalid_argument if p has a coefficient outside {-1, 0, +1}.
  static GradedEuler from_laurent(const LaurentPoly& p);

  const Coefficients& coefficients() const noexcept { return coeffs_; }
  LaurentPoly to_laurent() const;
  std::int64_t coefficient_sum() const;

  friend bool operator==(const GradedEuler&, const GradedEuler&) = default;

 private:
  Coefficients coeffs_;
};

struct SimpleKnotInvariants {
  LensSpaceId lens;
  std::int64_t d;
  std::int64_t genus;
  LaurentPoly alexander;
  BigInt cover_order;
  GradedEuler euler;
};

/// d = |2a - 5b'| where b' = min(b mod a, a - b mod a).
/// Requires a odd >= 3, gcd(a, b) = 1, gcd(a, 5) = 1.
std::int64_t simple_knot_d(std::int64_t a, std::int64_t b);

/// Throws std::invalid_argument unless p is odd, gcd(p, 5) = 1 and
/// 3 <= p/q <= 6.
void require_simple_knot_slope(const Slope& slope);

/// | |4p - 10 min(2q, p - 2q)| - 2 |
std::int64_t simple_knot_genus(const Slope& slope);

/// Delta_{T(5,d)} with d = simple_knot_d(p, 2q).
LaurentPoly simple_knot_alexander(const Slope& slope);

/// p * |Delta_S(-1)|: the first homology order of the branched double cover.
BigInt branched_cover_order(const Slope& slope);

/// Delta_S(t) * (t^((p-1)/2) + ... + t^(-(p-1)/2)).
GradedEuler graded_euler(const Slope& slope);

/// Each residue class mod p carries exactly one nonzero coefficient, and it
/// is +1.
bool check_property_star(const GradedEuler& ge, std::int64_t p);

/// (t^p - 1)^2 divides g1 - g2 exactly. p >= 1.
bool homologous_difference_divisible(const GradedEuler& g1, const GradedEuler& g2, std::int64_t p);

SimpleKnotInvariants simple_knot_invariants(const Slope& slope);

}  // namespace slopecert
