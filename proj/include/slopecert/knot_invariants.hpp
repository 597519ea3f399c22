#pragma once

#include <cstdint>
#include <vector>

#include "slopecert/laurent.hpp"
#include "slopecert/slope.hpp"

namespace slopecert {

/// Parameters of the torus knot T(a, b): a >= 2, b >= 1, gcd(a, b) = 1.
struct TorusKnotParams {
  TorusKnotParams(std::int64_t a, std::int64_t b);

  std::int64_t a;
  std::int64_t b;
};

/// Alternating-sign support pattern of an instanton L-space knot's Alexander
/// polynomial. Only the nonnegative half of the support is stored; the
/// polynomial is symmetric.
class LSpaceAlexanderPattern {
 public:
  /// support: strictly increasing, starts at 0, ends with g - 1, g.
  /// Throws std::invalid_argument if the pattern constraints fail.
  explicit LSpaceAlexanderPattern(std::vector<Exponent> support);

  std::int64_t genus() const noexcept { return support_.back(); }
  const std::vector<Exponent>& support() const noexcept { return support_; }

  /// Sign (+1 or -1) at support()[j]: alternating, +1 at the top.
  int sign_at(std::size_t j) const noexcept;

  LaurentPoly polynomial() const;

 private:
  std::vector<Exponent> support_;
};

/// Symmetrized Alexander polynomial of T(a, b).
LaurentPoly torus_alexander(const TorusKnotParams& tk);

/// |p(-1)| for a symmetric p with p(1) = 1.
BigInt determinant(const LaurentPoly& p);

/// (det - 1) / 2 conjugacy classes of non-abelian binary dihedral reps.
BigInt binary_dihedral_count(const BigInt& det);

/// Every Alexander polynomial compatible with the L-space pattern in genus g,
/// in a deterministic order. Size 2^(g-2) for g >= 2, 1 for g = 1.
std::vector<LaurentPoly> enumerate_lspace_alexander(std::int64_t g);

/// Framed instanton homology dimension of p/q surgery on a knot with
/// nu = r0 = r: p when p/q >= r, else 2rq - p.
std::int64_t framed_instanton_dim(const Slope& slope, std::int64_t r);

}  // namespace slopecert
