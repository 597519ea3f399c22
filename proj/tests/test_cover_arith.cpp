#include <doctest.h>

#include <numeric>
#include <set>

#include "generators.hpp"
#include "slopecert/cover_arith.hpp"
#include "slopecert/knot_invariants.hpp"
#include "slopecert/poly_text.hpp"

using namespace slopecert;

namespace {

// Divisors d >= 2 of n with delta vanishing at a primitive d-th root of unity.
std::vector<std::uint64_t> float_dividing_orders(const LaurentPoly& delta, std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d <= n; ++d) {
    if (n % d != 0) continue;
    const auto z = std::polar(1.0, 2.0 * std::numbers::pi / static_cast<double>(d));
    if (std::abs(testgen::eval_complex(delta, z)) < 1e-7) out.push_back(d);
  }
  return out;
}

}  // namespace

TEST_CASE("Fox order of torus knot covers") {
  for (std::int64_t b = 1; b <= 15; b += 2)
    CHECK(fox_branched_order(torus_alexander(TorusKnotParams(2, b)), 2) == b);
  const LaurentPoly trefoil = torus_alexander(TorusKnotParams(2, 3));
  CHECK(fox_branched_order(trefoil, 3) == 4);  // quaternion group
  CHECK(fox_branched_order(trefoil, 6) == 0);  // b_1 > 0
  CHECK(fox_branched_order(trefoil, 5) == 1);  // Poincare sphere
  CHECK(fox_branched_order(LaurentPoly::constant(1), 9) == 1);
  CHECK_THROWS_AS(fox_branched_order(parse_laurent("t + 1"), 2), std::invalid_argument);
  CHECK_THROWS_AS(fox_branched_order(parse_laurent("t + 3 + t^-1"), 2), std::invalid_argument);
}

TEST_CASE("Fox order matches a floating-point product") {
  for (int i = 0; i < 300; ++i) {
    const LaurentPoly delta = testgen::random_knot_polynomial(5);
    const auto n = static_cast<std::uint64_t>(testgen::uniform(2, 30));
    const double approx = testgen::float_root_product(delta, n);
    const BigInt exact = fox_branched_order(delta, n);
    CHECK(std::abs(exact.convert_to<double>() - approx) <= 1e-6 * std::max(1.0, approx));
  }
}

TEST_CASE("cyclotomic sweep agrees with root evaluation") {
  for (int i = 0; i < 300; ++i) {
    LaurentPoly delta = testgen::random_knot_polynomial(4);
    // Plant a cyclotomic factor half the time: Phi_6 and Phi_10 are symmetric
    // up to a shift with value 1 at t = 1.
    if (i % 2 == 0) delta = delta * (i % 4 == 0 ? parse_laurent("t - 1 + t^-1")
                                                : parse_laurent("t^2 - t + 1 - t^-1 + t^-2"));
    const auto n = static_cast<std::uint64_t>(testgen::uniform(2, 30));
    CHECK(dividing_cyclotomic_orders(delta, n) == float_dividing_orders(delta, n));
  }
}

TEST_CASE("nondegeneracy report") {
  const LaurentPoly trefoil = torus_alexander(TorusKnotParams(2, 3));
  const auto deg = nondegeneracy_report(trefoil, 3, 1);
  CHECK(deg.n == 6);
  CHECK(deg.dividing_orders == std::vector<std::uint64_t>{6});
  CHECK(deg.fox_order == 0);
  CHECK_FALSE(deg.nondegenerate());

  const auto ok = nondegeneracy_report(trefoil, 5, 2);
  CHECK(ok.n == 50);
  CHECK(ok.nondegenerate());
  CHECK(ok.fox_order > 0);

  CHECK(nondegeneracy_check(parse_laurent("t^2 - 1 + t^-2"), 3, 1));
  CHECK(nondegeneracy_check(LaurentPoly::constant(1), 7, 2));
  CHECK_FALSE(nondegeneracy_check(torus_alexander(TorusKnotParams(2, 5)), 5, 1));

  CHECK_THROWS_AS(nondegeneracy_report(trefoil, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(nondegeneracy_report(trefoil, 9, 1), std::invalid_argument);
  CHECK_THROWS_AS(nondegeneracy_report(trefoil, 3, 0), std::invalid_argument);
  CHECK_THROWS_AS(nondegeneracy_report(parse_laurent("t + 1"), 3, 1), std::invalid_argument);

  // |delta(-1)| = 1 forces nondegeneracy for every odd prime.
  for (std::uint64_t p : {3, 5, 7, 11, 13})
    for (unsigned e = 1; e <= 2; ++e) CHECK(nondegeneracy_check(parse_laurent("t^2 - 1 + t^-2"), p, e));
}

TEST_CASE("nondegeneracy routes agree on random polynomials") {
  for (int i = 0; i < 300; ++i) {
    const LaurentPoly delta = testgen::random_knot_polynomial(6);
    const std::uint64_t p = std::vector<std::uint64_t>{3, 5, 7, 11, 13}[static_cast<std::size_t>(i % 5)];
    const auto report = nondegeneracy_report(delta, p, 1);
    CHECK(report.by_cyclotomic == report.by_fox);
    CHECK(report.dividing_orders == float_dividing_orders(delta, report.n));
  }
}

TEST_CASE("cyclic representations") {
  for (std::int64_t h = 1; h <= 99; h += 2) {
    const CyclicRepSet reps = cyclic_reps(h);
    CHECK(reps.order == h);
    REQUIRE(static_cast<std::int64_t>(reps.angles_over_pi.size()) == h);
    std::set<BigRational> seen(reps.angles_over_pi.begin(), reps.angles_over_pi.end());
    CHECK(static_cast<std::int64_t>(seen.size()) == h);
    const auto radians = reps.angles_radians();
    for (std::size_t m = 0; m < radians.size(); ++m) {
      CHECK(satisfies_meridian_condition(h, reps.angles_over_pi[m]));
      // h theta = pi/2 mod 2 pi in floating point
      const double r = std::remainder(static_cast<double>(h) * radians[m] - std::numbers::pi / 2, 2 * std::numbers::pi);
      CHECK(std::abs(r) < 1e-9);
    }
  }
  CHECK_FALSE(satisfies_meridian_condition(3, BigRational(1, 2)));
  CHECK(satisfies_meridian_condition(1, BigRational(1, 2)));
  CHECK(satisfies_meridian_condition(1, BigRational(5, 2)));
  CHECK_FALSE(satisfies_meridian_condition(1, BigRational(3, 2)));
  CHECK_THROWS_AS(cyclic_reps(0), std::invalid_argument);
  CHECK_THROWS_AS(cyclic_reps(4), std::invalid_argument);
}

TEST_CASE("primality") {
  std::vector<bool> sieve(500, true);
  sieve[0] = sieve[1] = false;
  for (std::size_t i = 2; i < sieve.size(); ++i)
    if (sieve[i])
      for (std::size_t j = i * i; j < sieve.size(); j += i) sieve[j] = false;
  for (std::uint64_t n = 0; n < sieve.size(); ++n) CHECK(is_prime(n) == sieve[n]);
}
