#include "slopecert/cover_arith.hpp"

#include <numbers>
#include <stdexcept>
#include <string>

namespace slopecert {

namespace {

void require_knot_polynomial(const LaurentPoly& delta) {
  if (!delta.is_symmetric()) throw std::invalid_argument("Alexander polynomial must be symmetric");
  if (delta.evaluate(1) != 1) throw std::invalid_argument("Alexander polynomial must satisfy delta(1) = 1");
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t f = 2; f * f <= n; ++f)
    if (n % f == 0) return false;
  return true;
}

BigInt fox_branched_order(const LaurentPoly& delta, std::uint64_t n) {
  require_knot_polynomial(delta);
  return root_of_unity_product(delta, n);
}

std::vector<std::uint64_t> dividing_cyclotomic_orders(const LaurentPoly& delta, std::uint64_t n) {
  std::vector<std::uint64_t> hits;
  for (std::uint64_t d = 2; d <= n; ++d)
    if (n % d == 0 && divides(cyclotomic(d), delta)) hits.push_back(d);
  return hits;
}

NondegeneracyReport nondegeneracy_report(const LaurentPoly& delta, std::uint64_t p, unsigned e) {
  require_knot_polynomial(delta);
  if (p % 2 == 0 || !is_prime(p)) throw std::invalid_argument("p must be an odd prime");
  if (e < 1) throw std::invalid_argument("exponent e must be at least 1");

  NondegeneracyReport report;
  report.n = 2;
  for (unsigned i = 0; i < e; ++i) report.n *= p;
  report.dividing_orders = dividing_cyclotomic_orders(delta, report.n);
  report.by_cyclotomic = report.dividing_orders.empty();
  report.fox_order = root_of_unity_product(delta, report.n);
  report.by_fox = report.fox_order != 0;
  if (report.by_cyclotomic != report.by_fox)
    throw std::logic_error("cyclotomic sweep and Fox order disagree for n = " + std::to_string(report.n));
  return report;
}

bool nondegeneracy_check(const LaurentPoly& delta, std::uint64_t p, unsigned e) {
  return nondegeneracy_report(delta, p, e).nondegenerate();
}

std::vector<double> CyclicRepSet::angles_radians() const {
  std::vector<double> out;
  out.reserve(angles_over_pi.size());
  for (const auto& a : angles_over_pi) out.push_back(a.convert_to<double>() * std::numbers::pi);
  return out;
}

CyclicRepSet cyclic_reps(std::int64_t h) {
  if (h < 1) throw std::invalid_argument("|H_1(L)| must be positive");
  if (h % 2 == 0) throw std::invalid_argument("|H_1(L)| must be odd");
  CyclicRepSet set;
  set.order = h;
  set.angles_over_pi.reserve(static_cast<std::size_t>(h));
  for (std::int64_t m = 0; m < h; ++m) set.angles_over_pi.emplace_back(1 + 4 * m, 2 * h);
  return set;
}

bool satisfies_meridian_condition(std::int64_t h, const BigRational& angle_over_pi) {
  // h * theta / pi - 1/2 must be an even integer.
  const BigRational excess = BigRational(h) * angle_over_pi - BigRational(1, 2);
  if (boost::multiprecision::denominator(excess) != 1) return false;
  return boost::multiprecision::numerator(excess) % 2 == 0;
}

}  // namespace slopecert
