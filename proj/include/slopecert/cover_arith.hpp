#pragma once

#include <cstdint>
#include <vector>

#include "slopecert/laurent.hpp"

namespace slopecert {

/// Order of H_1 of the n-fold cyclic branched cover of a knot in an integral
/// homology sphere with Alexander polynomial delta (Fox's formula). Zero
/// encodes infinite H_1. delta must be symmetric with delta(1) = 1.
BigInt fox_branched_order(const LaurentPoly& delta, std::uint64_t n);

/// Divisors d >= 2 of n for which Phi_d divides delta.
std::vector<std::uint64_t> dividing_cyclotomic_orders(const LaurentPoly& delta, std::uint64_t n);

struct NondegeneracyReport {
  std::uint64_t n = 0;                       // 2 p^e
  BigInt fox_order;                          // 0 when b_1 > 0
  std::vector<std::uint64_t> dividing_orders;  // cyclotomic sweep hits
  bool by_cyclotomic = false;
  bool by_fox = false;
  bool nondegenerate() const { return by_cyclotomic && by_fox; }
};

/// Runs both the cyclotomic sweep over divisors of 2 p^e and the Fox
/// nonvanishing test. Throws std::logic_error if the two disagree.
/// p must be an odd prime, e >= 1.
NondegeneracyReport nondegeneracy_report(const LaurentPoly& delta, std::uint64_t p, unsigned e);

bool nondegeneracy_check(const LaurentPoly& delta, std::uint64_t p, unsigned e);

/// The h cyclic representations with rho(mu_J) = i, stored as exact
/// multiples of pi: theta_m = pi * (1 + 4m) / (2h), m = 0..h-1.
struct CyclicRepSet {
  std::int64_t order = 0;
  std::vector<BigRational> angles_over_pi;

  std::vector<double> angles_radians() const;
};

/// h >= 1 and odd.
CyclicRepSet cyclic_reps(std::int64_t h);

/// h * theta == pi/2 (mod 2 pi), decided exactly.
bool satisfies_meridian_condition(std::int64_t h, const BigRational& angle_over_pi);

bool is_prime(std::uint64_t n);

}  // namespace slopecert
