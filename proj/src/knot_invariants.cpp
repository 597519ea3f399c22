#include "slopecert/knot_invariants.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace slopecert {

TorusKnotParams::TorusKnotParams(std::int64_t a_, std::int64_t b_) : a(a_), b(b_) {
  if (a < 2 || b < 1) throw std::invalid_argument("torus knot needs a >= 2 and b >= 1");
  if (std::gcd(a, b) != 1)
    throw std::invalid_argument("torus knot parameters " + std::to_string(a) + "," +
                                std::to_string(b) + " are not coprime");
}

LSpaceAlexanderPattern::LSpaceAlexanderPattern(std::vector<Exponent> support)
    : support_(std::move(support)) {
  if (support_.size() < 2) throw std::invalid_argument("pattern needs at least {0, g}");
  if (support_.front() != 0) throw std::invalid_argument("pattern support must start at 0");
  for (std::size_t i = 1; i < support_.size(); ++i)
    if (support_[i] <= support_[i - 1])
      throw std::invalid_argument("pattern support must be strictly increasing");
  const Exponent g = support_.back();
  if (support_[support_.size() - 2] != g - 1)
    throw std::invalid_argument("pattern must contain g and g - 1");
  if (polynomial().evaluate(1) != 1) throw std::logic_error("pattern polynomial has p(1) != 1");
}

int LSpaceAlexanderPattern::sign_at(std::size_t j) const noexcept {
  const std::size_t k = support_.size() - 1;
  return ((k - j) % 2 == 0) ? 1 : -1;
}

LaurentPoly LSpaceAlexanderPattern::polynomial() const {
  LaurentPoly p;
  for (std::size_t j = 0; j < support_.size(); ++j) {
    const BigInt c = sign_at(j);
    p += LaurentPoly::monomial(c, support_[j]);
    if (support_[j] != 0) p += LaurentPoly::monomial(c, -support_[j]);
  }
  return p;
}

LaurentPoly torus_alexander(const TorusKnotParams& tk) {
  const auto a = static_cast<std::size_t>(tk.a);
  const auto b = static_cast<std::size_t>(tk.b);
  const IntPoly num = IntPoly::power_minus_one(a * b) * IntPoly::power_minus_one(1);
  const IntPoly den = IntPoly::power_minus_one(a) * IntPoly::power_minus_one(b);
  auto quotient = exact_quotient(num, den);
  if (!quotient) throw std::logic_error("torus knot Alexander quotient is not exact");
  const Exponent half = (tk.a - 1) * (tk.b - 1) / 2;
  return quotient->to_laurent(-half);
}

BigInt determinant(const LaurentPoly& p) {
  if (!p.is_symmetric()) throw std::invalid_argument("determinant needs a symmetric polynomial");
  if (p.evaluate(1) != 1) throw std::invalid_argument("determinant needs p(1) = 1");
  const BigRational v = p.evaluate(-1);
  return boost::multiprecision::abs(boost::multiprecision::numerator(v));
}

BigInt binary_dihedral_count(const BigInt& det) {
  if (det < 1 || det % 2 == 0) throw std::invalid_argument("determinant must be odd and positive");
  return (det - 1) / 2;
}

std::vector<LaurentPoly> enumerate_lspace_alexander(std::int64_t g) {
  if (g < 1) throw std::invalid_argument("genus must be at least 1");
  // Free choice of the interior support within {1, ..., g - 2}.
  const std::int64_t free_slots = g >= 2 ? g - 2 : 0;
  if (free_slots > 40) throw std::invalid_argument("genus too large to enumerate");
  std::vector<LaurentPoly> out;
  out.reserve(std::size_t{1} << free_slots);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free_slots); ++mask) {
    std::vector<Exponent> support{0};
    for (std::int64_t i = 0; i < free_slots; ++i)
      if (mask & (std::uint64_t{1} << i)) support.push_back(i + 1);
    if (g - 1 > 0) support.push_back(g - 1);
    support.push_back(g);
    out.push_back(LSpaceAlexanderPattern(std::move(support)).polynomial());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t framed_instanton_dim(const Slope& slope, std::int64_t r) {
  if (r < 1) throw std::invalid_argument("r must be positive");
  if (slope.p() >= r * slope.q()) return slope.p();
  return 2 * r * slope.q() - slope.p();
}

}  // namespace slopecert
