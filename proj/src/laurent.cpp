#include "slopecert/laurent.hpp"

#include <algorithm>
#include <stdexcept>

namespace slopecert {

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly::LaurentPoly(std::initializer_list<std::pair<Exponent, long long>> terms) {
  for (const auto& [e, c] : terms) add_term(e, BigInt(c));
}

LaurentPoly::LaurentPoly(Terms terms) {
  for (auto& [e, c] : terms) add_term(e, c);
}

LaurentPoly LaurentPoly::constant(const BigInt& c) { return monomial(c, 0); }

LaurentPoly LaurentPoly::monomial(const BigInt& c, Exponent e) {
  LaurentPoly p;
  p.add_term(e, c);
  return p;
}

void LaurentPoly::add_term(Exponent e, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Exponent LaurentPoly::max_exponent() const {
  if (terms_.empty()) throw std::logic_error("max_exponent of zero polynomial");
  return terms_.rbegin()->first;
}

Exponent LaurentPoly::min_exponent() const {
  if (terms_.empty()) throw std::logic_error("min_exponent of zero polynomial");
  return terms_.begin()->first;
}

BigInt LaurentPoly::coefficient(Exponent e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? BigInt(0) : it->second;
}

BigRational LaurentPoly::evaluate(std::int64_t x) const {
  if (x == 0) throw std::invalid_argument("cannot evaluate a Laurent polynomial at 0");
  BigRational sum = 0;
  const BigInt base = x;
  for (const auto& [e, c] : terms_) {
    const auto mag = static_cast<unsigned>(e < 0 ? -e : e);
    BigInt power = boost::multiprecision::pow(base, mag);
    if (e < 0)
      sum += BigRational(c) / BigRational(power);
    else
      sum += BigRational(c * power);
  }
  return sum;
}

bool LaurentPoly::is_symmetric() const {
  for (const auto& [e, c] : terms_) {
    auto it = terms_.find(-e);
    if (it == terms_.end() || it->second != c) return false;
  }
  return true;
}

LaurentPoly LaurentPoly::shifted(Exponent k) const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e + k, c);
  return out;
}

IntPoly LaurentPoly::normalized() const {
  if (is_zero()) return {};
  const Exponent lo = min_exponent();
  std::vector<BigInt> coeffs(static_cast<std::size_t>(max_exponent() - lo) + 1);
  for (const auto& [e, c] : terms_) coeffs[static_cast<std::size_t>(e - lo)] = c;
  return IntPoly(std::move(coeffs));
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator-(const LaurentPoly& a) {
  LaurentPoly out;
  for (const auto& [e, c] : a.terms_) out.terms_.emplace(e, -c);
  return out;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  return out;
}

bool operator<(const LaurentPoly& a, const LaurentPoly& b) {
  return std::lexicographical_compare(a.terms_.begin(), a.terms_.end(), b.terms_.begin(),
                                      b.terms_.end());
}

LaurentPoly multiply(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }

// ---------------------------------------------------------------------------
// IntPoly

IntPoly::IntPoly(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long long> coefficients) {
  coeffs_.reserve(coefficients.size());
  for (long long c : coefficients) coeffs_.emplace_back(c);
  trim();
}

IntPoly IntPoly::monomial(const BigInt& c, std::size_t e) {
  std::vector<BigInt> v(e + 1);
  v[e] = c;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::power_minus_one(std::size_t n) {
  std::vector<BigInt> v(n + 1);
  v[0] = -1;
  v[n] += 1;
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const BigInt& IntPoly::leading() const {
  if (coeffs_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
  return coeffs_.back();
}

BigInt IntPoly::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : BigInt(0);
}

BigInt IntPoly::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

LaurentPoly IntPoly::to_laurent(Exponent shift) const {
  LaurentPoly::Terms terms;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) terms.emplace(static_cast<Exponent>(i) + shift, coeffs_[i]);
  return LaurentPoly(std::move(terms));
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<BigInt> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
  return IntPoly(std::move(v));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  std::vector<BigInt> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] -= b.coeffs_[i];
  return IntPoly(std::move(v));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPoly(std::move(v));
}

IntPoly operator*(const BigInt& c, const IntPoly& a) {
  std::vector<BigInt> v = a.coeffs_;
  for (auto& x : v) x *= c;
  return IntPoly(std::move(v));
}

std::optional<IntPoly> exact_quotient(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("division by the zero polynomial");
  if (a.is_zero()) return IntPoly{};
  if (a.degree() < b.degree()) return std::nullopt;

  std::vector<BigInt> rem = a.coefficients();
  const auto& bc = b.coefficients();
  const std::size_t db = bc.size() - 1;
  std::vector<BigInt> quot(rem.size() - db);
  const BigInt& lead = bc.back();

  for (std::size_t k = quot.size(); k-- > 0;) {
    const BigInt& top = rem[k + db];
    if (top == 0) continue;
    BigInt q, r;
    boost::multiprecision::divide_qr(top, lead, q, r);
    if (r != 0) return std::nullopt;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= q * bc[j];
    quot[k] = std::move(q);
  }
  for (const auto& c : rem)
    if (c != 0) return std::nullopt;
  return IntPoly(std::move(quot));
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("pseudo-remainder by the zero polynomial");
  if (a.degree() < b.degree()) return a;
  std::vector<BigInt> rem = a.coefficients();
  const auto& bc = b.coefficients();
  const std::size_t db = bc.size() - 1;
  const BigInt& lead = bc.back();
  // deg a - deg b + 1 elimination steps, each scaling by lc(b).
  for (std::size_t k = rem.size() - db; k-- > 0;) {
    BigInt top = rem[k + db];
    for (auto& c : rem) c *= lead;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= top * bc[j];
  }
  rem.resize(db);
  return IntPoly(std::move(rem));
}

namespace {

int moebius(std::uint64_t n) {
  int mu = 1;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f != 0) continue;
    n /= f;
    if (n % f == 0) return 0;
    mu = -mu;
  }
  if (n > 1) mu = -mu;
  return mu;
}

BigInt content(const IntPoly& p) {
  BigInt g = 0;
  for (const auto& c : p.coefficients()) g = boost::multiprecision::gcd(g, c);
  return g;
}

IntPoly divide_coefficients(const IntPoly& p, const BigInt& d) {
  std::vector<BigInt> v = p.coefficients();
  for (auto& c : v) c /= d;
  return IntPoly(std::move(v));
}

}  // namespace

IntPoly cyclotomic(std::uint64_t d) {
  if (d == 0) throw std::invalid_argument("cyclotomic index must be positive");
  IntPoly num{1};
  IntPoly den{1};
  for (std::uint64_t e = 1; e <= d; ++e) {
    if (d % e != 0) continue;
    const int mu = moebius(d / e);
    if (mu == 1) num = num * IntPoly::power_minus_one(e);
    if (mu == -1) den = den * IntPoly::power_minus_one(e);
  }
  auto q = exact_quotient(num, den);
  if (!q) throw std::logic_error("cyclotomic quotient is not exact");
  return *q;
}

bool divides(const IntPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) throw std::invalid_argument("divisor must be nonzero");
  if (b.is_zero()) return true;
  // t is a unit in Z[t, 1/t]: strip its powers from both sides.
  const auto& ac = a.coefficients();
  std::size_t low = 0;
  while (ac[low] == 0) ++low;
  IntPoly a_stripped(std::vector<BigInt>(ac.begin() + static_cast<long>(low), ac.end()));
  return exact_quotient(b.normalized(), a_stripped).has_value();
}

BigInt resultant(const IntPoly& a_in, const IntPoly& b_in) {
  if (a_in.is_zero() || b_in.is_zero()) return 0;
  IntPoly a = a_in;
  IntPoly b = b_in;
  int sign = 1;
  if (a.degree() < b.degree()) {
    std::swap(a, b);
    if ((a.degree() % 2 == 1) && (b.degree() % 2 == 1)) sign = -sign;
  }
  if (b.degree() == 0) return sign * boost::multiprecision::pow(b.leading(), static_cast<unsigned>(a.degree()));

  const BigInt ca = content(a);
  const BigInt cb = content(b);
  a = divide_coefficients(a, ca);
  b = divide_coefficients(b, cb);
  const BigInt scale = boost::multiprecision::pow(ca, static_cast<unsigned>(b.degree())) *
                       boost::multiprecision::pow(cb, static_cast<unsigned>(a.degree()));

  BigInt g = 1;
  BigInt h = 1;
  while (true) {
    const long delta = a.degree() - b.degree();
    if ((a.degree() % 2 == 1) && (b.degree() % 2 == 1)) sign = -sign;
    IntPoly r = pseudo_remainder(a, b);
    if (r.is_zero()) return 0;
    a = b;
    const BigInt divisor = g * boost::multiprecision::pow(h, static_cast<unsigned>(delta));
    b = divide_coefficients(r, divisor);
    g = a.leading();
    // h <- g^delta / h^(delta - 1); unchanged when delta == 0
    if (delta > 0) {
      h = boost::multiprecision::pow(g, static_cast<unsigned>(delta)) /
          boost::multiprecision::pow(h, static_cast<unsigned>(delta - 1));
    }
    if (b.degree() == 0) {
      const auto da = static_cast<unsigned>(a.degree());
      BigInt last = boost::multiprecision::pow(b.leading(), da);
      if (da >= 1) last /= boost::multiprecision::pow(h, da - 1);
      else last *= h;
      return sign * scale * last;
    }
  }
}

BigInt root_of_unity_product(const LaurentPoly& p, std::uint64_t n) {
  if (p.is_zero()) throw std::invalid_argument("root_of_unity_product of the zero polynomial");
  if (n < 2) throw std::invalid_argument("root_of_unity_product needs n >= 2");
  // (t^n - 1)/(t - 1) = 1 + t + ... + t^(n-1): monic, its roots are exactly
  // the nontrivial n-th roots of unity, so Res(that, P) = prod P(zeta^k). The
  // normalization t^(-lo) contributes a root of unity whose product is +-1.
  IntPoly window(std::vector<BigInt>(n, BigInt(1)));
  BigInt r = resultant(window, p.normalized());
  return boost::multiprecision::abs(r);
}

}  // namespace slopecert
