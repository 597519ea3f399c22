#include "slopecert/lens_simple.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>

#include "slopecert/knot_invariants.hpp"

namespace slopecert {

LensSpaceId::LensSpaceId(std::int64_t a_, std::int64_t b_) : a(a_), b(b_) {
  if (a < 2 || b < 1 || b >= a) throw std::invalid_argument("lens space L(a,b) needs 1 <= b < a");
  if (std::gcd(a, b) != 1) throw std::invalid_argument("lens space parameters must be coprime");
}

GradedEuler::GradedEuler(Coefficients coefficients) : coeffs_(std::move(coefficients)) {
  for (const auto& [e, c] : coeffs_)
    if (c != 1 && c != -1)
      throw std::invalid_argument("graded Euler coefficient at " + std::to_string(e) +
                                  " is not +-1");
}

GradedEuler GradedEuler::from_laurent(const LaurentPoly& p) {
  Coefficients coeffs;
  for (const auto& [e, c] : p.terms()) {
    if (c != 1 && c != -1)
      throw std::invalid_argument("coefficient outside {-1, 0, 1} at exponent " +
                                  std::to_string(e));
    coeffs.emplace(e, c.convert_to<int>());
  }
  return GradedEuler(std::move(coeffs));
}

LaurentPoly GradedEuler::to_laurent() const {
  LaurentPoly::Terms terms;
  for (const auto& [e, c] : coeffs_) terms.emplace(e, c);
  return LaurentPoly(std::move(terms));
}

std::int64_t GradedEuler::coefficient_sum() const {
  std::int64_t sum = 0;
  for (const auto& [e, c] : coeffs_) sum += c;
  return sum;
}

std::int64_t simple_knot_d(std::int64_t a, std::int64_t b) {
  if (a < 3 || a % 2 == 0) throw std::invalid_argument("simple knot order must be odd and >= 3");
  if (std::gcd(a, std::int64_t{5}) != 1)
    throw std::invalid_argument("S(a,b,5b) is not primitive when 5 divides a");
  b %= a;
  if (b < 0) b += a;
  if (std::gcd(a, b) != 1) throw std::invalid_argument("lens space parameters must be coprime");
  // Mirror normalization: S(a, a-b, 5b) is the reversed mirror of S(a, b, 5b).
  const std::int64_t b_norm = std::min(b, a - b);
  return std::llabs(2 * a - 5 * b_norm);
}

void require_simple_knot_slope(const Slope& slope) {
  const std::int64_t p = slope.p();
  const std::int64_t q = slope.q();
  if (p % 2 == 0) throw std::invalid_argument("simple knot invariants need p odd");
  if (p % 5 == 0) throw std::invalid_argument("simple knot invariants need gcd(p, 5) = 1");
  if (p < 3 * q || p > 6 * q)
    throw std::invalid_argument("simple knot invariants need p/q in [3, 6], got " + slope.to_string());
}

std::int64_t simple_knot_genus(const Slope& slope) {
  require_simple_knot_slope(slope);
  const std::int64_t p = slope.p();
  const std::int64_t q = slope.q();
  const std::int64_t m = std::min(2 * q, p - 2 * q);
  return std::llabs(std::llabs(4 * p - 10 * m) - 2);
}

LaurentPoly simple_knot_alexander(const Slope& slope) {
  require_simple_knot_slope(slope);
  const std::int64_t d = simple_knot_d(slope.p(), 2 * slope.q());
  LaurentPoly alex = torus_alexander(TorusKnotParams(5, d));
  if (alex.max_exponent() != simple_knot_genus(slope))
    throw std::logic_error("Alexander degree disagrees with the genus formula at " + slope.to_string());
  return alex;
}

BigInt branched_cover_order(const Slope& slope) {
  return slope.p() * determinant(simple_knot_alexander(slope));
}

GradedEuler graded_euler(const Slope& slope) {
  const LaurentPoly alex = simple_knot_alexander(slope);
  const std::int64_t p = slope.p();
  const std::int64_t half = (p - 1) / 2;
  LaurentPoly::Terms window;
  for (std::int64_t e = -half; e <= half; ++e) window.emplace(e, 1);
  const LaurentPoly product = alex * LaurentPoly(std::move(window));

  GradedEuler ge = GradedEuler::from_laurent(product);
  const std::int64_t n = alex.max_exponent() + half;
  if (product.max_exponent() > n || product.min_exponent() < -n)
    throw std::logic_error("graded Euler characteristic exceeds its Alexander range");
  if (ge.coefficient_sum() != p)
    throw std::logic_error("graded Euler characteristic does not sum to p");
  return ge;
}

bool check_property_star(const GradedEuler& ge, std::int64_t p) {
  if (p < 1) throw std::invalid_argument("modulus must be positive");
  std::map<std::int64_t, int> hits;
  for (const auto& [e, c] : ge.coefficients()) {
    if (c != 1) return false;
    std::int64_t r = e % p;
    if (r < 0) r += p;
    if (++hits[r] > 1) return false;
  }
  return static_cast<std::int64_t>(hits.size()) == p;
}

bool homologous_difference_divisible(const GradedEuler& g1, const GradedEuler& g2, std::int64_t p) {
  if (p < 1) throw std::invalid_argument("modulus must be positive");
  const IntPoly base = IntPoly::power_minus_one(static_cast<std::size_t>(p));
  return divides(base * base, g1.to_laurent() - g2.to_laurent());
}

SimpleKnotInvariants simple_knot_invariants(const Slope& slope) {
  require_simple_knot_slope(slope);
  const std::int64_t p = slope.p();
  const std::int64_t q = slope.q();
  std::int64_t b = (2 * q) % p;
  LaurentPoly alex = simple_knot_alexander(slope);
  BigInt order = p * determinant(alex);
  return SimpleKnotInvariants{LensSpaceId(p, b), simple_knot_d(p, b), simple_knot_genus(slope),
                              std::move(alex), std::move(order), graded_euler(slope)};
}

}  // namespace slopecert
