#pragma once

// Exact integer-coefficient polynomials in one variable t.
//
// LaurentPoly carries every Alexander polynomial and graded Euler
// characteristic in the library. IntPoly is the ordinary-polynomial form used
// for exact division and resultants.

#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace slopecert {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;
using Exponent = std::int64_t;

class IntPoly;

/// Sparse Laurent polynomial with integer coefficients. Zero coefficients are
/// never stored, so equality is structural.
class LaurentPoly {
 public:
  using Terms = std::map<Exponent, BigInt>;

  LaurentPoly() = default;
  LaurentPoly(std::initializer_list<std::pair<Exponent, long long>> terms);
  explicit LaurentPoly(Terms terms);

  static LaurentPoly constant(const BigInt& c);
  static LaurentPoly monomial(const BigInt& c, Exponent e);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }

  // Both require a nonzero polynomial.
  Exponent max_exponent() const;
  Exponent min_exponent() const;

  BigInt coefficient(Exponent e) const;

  /// Exact value at a nonzero integer; throws std::invalid_argument for x = 0.
  BigRational evaluate(std::int64_t x) const;

  /// p(t) == p(1/t) term by term.
  bool is_symmetric() const;

  /// Multiplies by t^k.
  LaurentPoly shifted(Exponent k) const;

  /// t^(-min_exponent) * p as an ordinary polynomial; zero maps to zero.
  IntPoly normalized() const;

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator-(const LaurentPoly& a);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) = default;

  /// Lexicographic on (exponent, coefficient) pairs; used only for ordering
  /// result sets deterministically.
  friend bool operator<(const LaurentPoly& a, const LaurentPoly& b);

 private:
  void add_term(Exponent e, const BigInt& c);

  Terms terms_;
};

LaurentPoly multiply(const LaurentPoly& a, const LaurentPoly& b);

/// Dense polynomial, lowest degree first, with no trailing zero coefficients.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coefficients);
  IntPoly(std::initializer_list<long long> coefficients);

  /// c * t^e
  static IntPoly monomial(const BigInt& c, std::size_t e);
  /// t^n - 1
  static IntPoly power_minus_one(std::size_t n);

  const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  const BigInt& leading() const;
  BigInt coefficient(std::size_t i) const;
  BigInt evaluate(const BigInt& x) const;

  LaurentPoly to_laurent(Exponent shift = 0) const;

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const BigInt& c, const IntPoly& a);
  friend bool operator==(const IntPoly& a, const IntPoly& b) = default;

 private:
  void trim();

  std::vector<BigInt> coeffs_;
};

/// Quotient q with a == q * b in Z[t], or nullopt when b does not divide a
/// exactly over the integers. b must be nonzero.
std::optional<IntPoly> exact_quotient(const IntPoly& a, const IntPoly& b);

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);

/// d-th cyclotomic polynomial (d >= 1).
IntPoly cyclotomic(std::uint64_t d);

/// True iff b = a * c for some integer Laurent polynomial c. a must be nonzero.
bool divides(const IntPoly& a, const LaurentPoly& b);

/// Resultant over Z via the subresultant PRS.
BigInt resultant(const IntPoly& a, const IntPoly& b);

/// |prod_{k=1}^{n-1} p(exp(2 pi i k / n))|, computed exactly as a resultant
/// against 1 + t + ... + t^(n-1). p must be nonzero and n >= 2.
BigInt root_of_unity_product(const LaurentPoly& p, std::uint64_t n);

}  // namespace slopecert
