#include <doctest.h>

#include <numeric>

#include "generators.hpp"
#include "slopecert/knot_invariants.hpp"
#include "slopecert/lens_simple.hpp"
#include "slopecert/poly_text.hpp"

using namespace slopecert;

namespace {

std::vector<Slope> valid_slopes(std::int64_t max_p) {
  std::vector<Slope> out;
  for (std::int64_t p = 3; p <= max_p; p += 2) {
    if (p % 5 == 0) continue;
    for (std::int64_t q = 1; 3 * q <= p; ++q)
      if (p <= 6 * q && std::gcd(p, q) == 1) out.emplace_back(p, q);
  }
  return out;
}

}  // namespace

TEST_CASE("lens space identifiers") {
  CHECK_NOTHROW(LensSpaceId(7, 4));
  CHECK_THROWS_AS(LensSpaceId(7, 7), std::invalid_argument);
  CHECK_THROWS_AS(LensSpaceId(6, 4), std::invalid_argument);
  CHECK_THROWS_AS(LensSpaceId(1, 0), std::invalid_argument);
}

TEST_CASE("slope eligibility") {
  CHECK_NOTHROW(require_simple_knot_slope(Slope(3, 1)));
  CHECK_NOTHROW(require_simple_knot_slope(Slope(11, 2)));
  CHECK_THROWS_AS(require_simple_knot_slope(Slope(4, 1)), std::invalid_argument);
  CHECK_THROWS_AS(require_simple_knot_slope(Slope(5, 1)), std::invalid_argument);
  CHECK_THROWS_AS(require_simple_knot_slope(Slope(7, 1)), std::invalid_argument);
  CHECK_THROWS_AS(require_simple_knot_slope(Slope(11, 4)), std::invalid_argument);
  CHECK_THROWS_AS(simple_knot_d(9, 3), std::invalid_argument);
  CHECK_THROWS_AS(simple_knot_d(15, 2), std::invalid_argument);
}

TEST_CASE("small simple knots") {
  CHECK(simple_knot_genus(Slope(3, 1)) == 0);
  CHECK(branched_cover_order(Slope(3, 1)) == 3);
  CHECK(simple_knot_d(3, 2) == 1);
  CHECK(simple_knot_genus(Slope(7, 2)) == 0);
  CHECK(simple_knot_genus(Slope(9, 2)) == 2);
  CHECK(simple_knot_alexander(Slope(9, 2)) == parse_laurent("t^2 - t + 1 - t^-1 + t^-2"));
  CHECK(branched_cover_order(Slope(9, 2)) == 45);
  CHECK(simple_knot_genus(Slope(19, 5)) == 12);
}

TEST_CASE("genus, d and Alexander polynomial agree") {
  for (const Slope& s : valid_slopes(300)) {
    const std::int64_t d = simple_knot_d(s.p(), 2 * s.q());
    const std::int64_t g = simple_knot_genus(s);
    CHECK(g == 2 * (d - 1));
    const LaurentPoly alex = simple_knot_alexander(s);
    CHECK(alex == torus_alexander(TorusKnotParams(5, d)));
    CHECK(alex.max_exponent() == g);
    // d only depends on 2q mod p up to sign.
    CHECK(simple_knot_d(s.p(), s.p() - 2 * s.q()) == d);
  }
}

TEST_CASE("graded Euler characteristic") {
  for (const Slope& s : valid_slopes(150)) {
    const std::int64_t p = s.p();
    LaurentPoly window;
    for (std::int64_t e = -(p - 1) / 2; e <= (p - 1) / 2; ++e) window += LaurentPoly::monomial(1, e);
    const GradedEuler ge = graded_euler(s);
    CHECK(ge.to_laurent() == testgen::convolve(simple_knot_alexander(s), window));
    CHECK(ge.coefficient_sum() == p);
    CHECK(check_property_star(ge, p));
    CHECK(ge.to_laurent().is_symmetric());
  }
}

TEST_CASE("property (*) rejects bad patterns") {
  CHECK(check_property_star(GradedEuler({{0, 1}, {1, 1}, {2, 1}}), 3));
  CHECK(check_property_star(GradedEuler({{-1, 1}, {0, 1}, {4, 1}}), 3));
  CHECK_FALSE(check_property_star(GradedEuler({{0, 1}, {3, 1}, {2, 1}}), 3));
  CHECK_FALSE(check_property_star(GradedEuler({{0, 1}, {1, -1}, {2, 1}}), 3));
  CHECK_FALSE(check_property_star(GradedEuler({{0, 1}, {1, 1}}), 3));
  CHECK_THROWS_AS(GradedEuler(GradedEuler::Coefficients{{0, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(GradedEuler::from_laurent(parse_laurent("2*t")), std::invalid_argument);
  CHECK_THROWS_AS(check_property_star(GradedEuler{}, 0), std::invalid_argument);
}

TEST_CASE("homologous differences") {
  for (std::int64_t p = 1; p <= 9; ++p) {
    // (t^p - 1)^2 (t^p + 1) = t^3p - t^2p - t^p + 1
    const GradedEuler a({{0, 1}, {3 * p, 1}});
    const GradedEuler b({{p, 1}, {2 * p, 1}});
    CHECK(homologous_difference_divisible(a, b, p));
    CHECK(homologous_difference_divisible(b, a, p));
    CHECK(homologous_difference_divisible(a, a, p));
    const GradedEuler c({{p + 1, 1}, {2 * p, 1}});
    CHECK_FALSE(homologous_difference_divisible(a, c, p));
  }
  // Oracle: D and D' vanish at every p-th root of unity.
  for (int i = 0; i < 300; ++i) {
    const std::int64_t p = testgen::uniform(1, 4);
    auto random_ge = [] {
      GradedEuler::Coefficients c;
      const int n = static_cast<int>(testgen::uniform(1, 5));
      for (int k = 0; k < n; ++k) c[testgen::uniform(-6, 6)] = testgen::uniform(0, 1) ? 1 : -1;
      return GradedEuler(c);
    };
    const GradedEuler g1 = random_ge();
    const GradedEuler g2 = random_ge();
    const LaurentPoly d = g1.to_laurent() - g2.to_laurent();
    LaurentPoly deriv;
    for (const auto& [e, c] : d.terms()) deriv += LaurentPoly::monomial(e * c, e - 1);
    bool vanishes = true;
    for (std::int64_t k = 0; k < p; ++k) {
      const auto z = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(p));
      vanishes = vanishes && std::abs(testgen::eval_complex(d, z)) < 1e-9 &&
                 std::abs(testgen::eval_complex(deriv, z)) < 1e-9;
    }
    CHECK(homologous_difference_divisible(g1, g2, p) == vanishes);
  }
  CHECK_THROWS_AS(homologous_difference_divisible(GradedEuler{}, GradedEuler{}, 0), std::invalid_argument);
}

TEST_CASE("simple knot bundle") {
  const auto inv = simple_knot_invariants(Slope(9, 2));
  CHECK(inv.lens.a == 9);
  CHECK(inv.lens.b == 4);
  CHECK(inv.d == 2);
  CHECK(inv.genus == 2);
  CHECK(inv.cover_order == 45);
  CHECK(inv.euler == graded_euler(Slope(9, 2)));
}
