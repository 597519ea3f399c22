#include "slopecert/certifier.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "slopecert/knot_invariants.hpp"
#include "slopecert/lens_simple.hpp"

namespace slopecert {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::certified: return "certified";
    case Verdict::open: return "open";
    case Verdict::fails_in_general: return "fails_in_general";
  }
  return "open";
}

Verdict verdict_from_string(const std::string& s) {
  if (s == "certified") return Verdict::certified;
  if (s == "open") return Verdict::open;
  if (s == "fails_in_general") return Verdict::fails_in_general;
  throw std::invalid_argument("unknown verdict '" + s + "'");
}

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::certified: return 0;
    case Verdict::open: return 2;
    case Verdict::fails_in_general: return 3;
  }
  return 2;
}

bool Certificate::cites(const std::string& rule) const {
  return std::any_of(chain.begin(), chain.end(), [&](const RuleRecord& r) { return r.rule == rule; });
}

std::optional<PrimePower> is_prime_power(std::uint64_t n) {
  if (n < 2) throw std::invalid_argument("is_prime_power needs n >= 2");
  std::uint64_t prime = n;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      prime = f;
      break;
    }
  }
  unsigned exponent = 0;
  while (n % prime == 0) {
    n /= prime;
    ++exponent;
  }
  if (n != 1) return std::nullopt;
  return PrimePower{prime, exponent};
}

bool slope_inequality_holds(const Slope& slope) {
  const std::int64_t p = slope.p();
  const std::int64_t q = slope.q();
  return 23 * p - 9 <= 80 * q && 80 * q <= 25 * p + 9;
}

namespace {

std::string str(const BigInt& v) { return v.str(); }
std::string str(std::int64_t v) { return std::to_string(v); }

std::string str(const BigRational& r) {
  std::ostringstream out;
  out << boost::multiprecision::numerator(r);
  if (boost::multiprecision::denominator(r) != 1) out << '/' << boost::multiprecision::denominator(r);
  return out.str();
}

template <class Range>
std::string join(const Range& items) {
  std::string out;
  for (const auto& item : items) {
    if (!out.empty()) out += ',';
    out += item;
  }
  return out;
}

bool odd_prime_power_coprime_to_5(std::int64_t p) {
  if (p < 3 || p % 2 == 0 || p % 5 == 0) return false;
  return is_prime_power(static_cast<std::uint64_t>(p)).has_value();
}

std::optional<RuleRecord> rule_r1(const Slope& s) {
  if (s.p() > 2 * s.q()) return std::nullopt;
  return RuleRecord{"R1",
                    "Kronheimer-Mrowka: r-surgery on a nontrivial knot is not SU(2)-abelian for "
                    "every rational r in [0,2]",
                    {{"slope", s.to_string()}, {"upper_bound", "2"}}};
}

std::optional<RuleRecord> rule_r2(const Slope& s) {
  const std::int64_t p = s.p();
  const std::int64_t q = s.q();
  if (!(2 * q < p && p < 3 * q)) return std::nullopt;
  const auto pp = is_prime_power(static_cast<std::uint64_t>(p));
  if (!pp) return std::nullopt;
  return RuleRecord{"R2",
                    "prime-power numerator in (2,3): an SU(2)-abelian surgery would force a genus-one "
                    "fibered strongly quasipositive knot, i.e. the right-handed trefoil, whose "
                    "surgeries in this range carry irreducibles",
                    {{"prime", str(static_cast<std::int64_t>(pp->prime))},
                     {"exponent", str(static_cast<std::int64_t>(pp->exponent))}}};
}

std::optional<RuleRecord> rule_r3(const Slope& s) {
  const std::int64_t p = s.p();
  const std::int64_t q = s.q();
  if (p < 2 || (p & (p - 1)) != 0) return std::nullopt;
  if (p >= 7 * q) return std::nullopt;

  Witnesses w;
  const std::int64_t trefoil_delta = std::llabs(6 * q - p);
  if (trefoil_delta < 2) throw std::logic_error("trefoil exclusion fails at " + s.to_string());
  w["trefoil_base_orbifold_delta"] = str(trefoil_delta);

  // 2g - 1 <= p/q for an instanton L-space knot.
  const std::int64_t genus_bound = (p + q) / (2 * q);
  w["genus_bound"] = str(genus_bound);

  std::vector<std::string> dets;
  std::vector<std::string> counts;
  for (std::int64_t g = 2; g <= genus_bound; ++g) {
    for (const auto& alex : enumerate_lspace_alexander(g)) {
      const BigInt det = determinant(alex);
      const BigInt classes = binary_dihedral_count(det);
      if (classes < 1) throw std::logic_error("no binary dihedral representation for genus " + str(g));
      dets.push_back(str(det));
      counts.push_back(str(classes));
    }
  }
  if (genus_bound >= 2) {
    if (p % 4 != 0) throw std::logic_error("p must be a multiple of 4 once genus >= 2 is allowed");
    w["determinants"] = join(dets);
    w["binary_dihedral_counts"] = join(counts);
    w["p_mod_4"] = "0";
  }
  return RuleRecord{"R3",
                    "power-of-two numerator below 7: L-space knots of genus <= 3 have (det-1)/2 >= 1 "
                    "binary dihedral classes with rho(mu^4) = rho(lambda) = 1, which survive p/q filling",
                    std::move(w)};
}

std::optional<RuleRecord> rule_r4(const Slope& s) {
  const std::int64_t p = s.p();
  const std::int64_t q = s.q();
  if (!odd_prime_power_coprime_to_5(p)) return std::nullopt;
  if (!(4 * q <= p && p < 5 * q)) return std::nullopt;
  const BigInt order = branched_cover_order(s);
  if (order == p) throw std::logic_error("branched cover order equals p at " + s.to_string());
  return RuleRecord{"R4",
                    "odd prime power coprime to 5 in [4,5): the branched double cover of "
                    "S(p,2q,10q) has first homology of order 5p, not p",
                    {{"cover_order", str(order)}, {"surgery_h1_order", str(p)}}};
}

std::optional<RuleRecord> rule_r5(const Slope& s) {
  const std::int64_t p = s.p();
  const std::int64_t q = s.q();
  if (!odd_prime_power_coprime_to_5(p)) return std::nullopt;
  if (!(3 * q <= p && p < 4 * q)) return std::nullopt;
  const std::int64_t genus = simple_knot_genus(s);
  if (4 * genus > p + 1) return std::nullopt;
  return RuleRecord{"R5",
                    "odd prime power coprime to 5 in [3,4) with g(S(p,2q,10q)) <= (p+1)/4: the "
                    "Floer simple knot is isotopic to S(p,2q,10q), whose branched double cover is "
                    "Seifert fibered",
                    {{"genus", str(genus)},
                     {"genus_bound", str(BigRational(p + 1, 4))},
                     {"inequality", str(23 * p - 9) + " <= " + str(80 * q) + " <= " + str(25 * p + 9)},
                     {"inequality_holds", slope_inequality_holds(s) ? "true" : "false"}}};
}

Witnesses slope_witnesses(const Slope& s) {
  const std::int64_t p = s.p();
  const std::int64_t q = s.q();
  Witnesses w;
  w["value"] = s.to_string();
  if (p >= 2) {
    const auto pp = is_prime_power(static_cast<std::uint64_t>(p));
    w["prime_power"] = pp ? str(static_cast<std::int64_t>(pp->prime)) + "^" +
                                str(static_cast<std::int64_t>(pp->exponent))
                          : "no";
  }
  const bool simple_ok = p % 2 == 1 && p % 5 != 0 && 3 * q <= p && p <= 6 * q;
  if (simple_ok) {
    w["simple_knot_genus"] = str(simple_knot_genus(s));
    w["cover_order"] = str(branched_cover_order(s));
    if (p < 4 * q) {
      w["genus_bound"] = str(BigRational(p + 1, 4));
      w["branch_20q-6p-2"] = str(20 * q - 6 * p - 2);
      w["branch_6p-20q-2"] = str(6 * p - 20 * q - 2);
      w["inequality"] = str(23 * p - 9) + " <= " + str(80 * q) + " <= " + str(25 * p + 9);
      w["inequality_holds"] = slope_inequality_holds(s) ? "true" : "false";
    }
  }
  return w;
}

}  // namespace

Certificate certify(const Slope& slope) {
  Certificate cert;
  cert.slope = slope;
  for (auto rule : {rule_r1, rule_r2, rule_r3, rule_r4, rule_r5})
    if (auto record = rule(slope)) cert.chain.push_back(std::move(*record));

  if (!cert.chain.empty())
    cert.verdict = Verdict::certified;
  else if (slope.p() == 5 && slope.q() == 1)
    cert.verdict = Verdict::fails_in_general;
  else
    cert.verdict = Verdict::open;
  cert.witnesses = slope_witnesses(slope);
  if (!cert.chain.empty()) cert.witnesses["headline_rule"] = cert.chain.front().rule;
  return cert;
}

EnumerationResult enumerate_certified(const EnumerationOptions& options) {
  if (options.max_p < 2) throw std::invalid_argument("max_p must be at least 2");
  if (options.lo < 0 || options.lo >= options.hi)
    throw std::invalid_argument("enumeration range needs 0 <= lo < hi");
  if (options.max_q && *options.max_q < 1) throw std::invalid_argument("max_q must be positive");

  std::vector<Slope> slopes;
  for (std::int64_t p = 0; p <= options.max_p; ++p) {
    std::int64_t q_cap = options.max_q.value_or(options.max_p);
    if (options.lo > 0) {
      const BigRational bound = BigRational(p) / options.lo;
      const std::int64_t from_range =
          (boost::multiprecision::numerator(bound) / boost::multiprecision::denominator(bound))
              .convert_to<std::int64_t>();
      q_cap = options.max_q ? std::min(*options.max_q, from_range) : from_range;
    }
    for (std::int64_t q = 1; q <= q_cap; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const BigRational v(p, q);
      if (v >= options.lo && v < options.hi) slopes.emplace_back(p, q);
    }
  }
  std::sort(slopes.begin(), slopes.end());

  EnumerationResult result;
  result.certificates.reserve(slopes.size());
  for (const auto& s : slopes) {
    result.certificates.push_back(certify(s));
    ++result.counts[result.certificates.back().verdict];
  }
  return result;
}

}  // namespace slopecert
