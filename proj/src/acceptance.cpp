#include "slopecert/acceptance.hpp"

#include <cmath>
#include <functional>
#include <numeric>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include "slopecert/certifier.hpp"
#include "slopecert/cover_arith.hpp"
#include "slopecert/knot_invariants.hpp"
#include "slopecert/lens_simple.hpp"
#include "slopecert/poly_text.hpp"
#include "slopecert/presentation.hpp"
#include "slopecert/su2_search.hpp"

namespace slopecert {

namespace {

// Collects the first failure and a count of cases checked.
class Tally {
 public:
  void expect(bool ok, const std::function<std::string()>& what) {
    ++cases_;
    if (!ok && first_failure_.empty()) first_failure_ = what();
    if (!ok) ++failures_;
  }
  CheckResult result(std::string id, std::string name) const {
    CheckResult r{std::move(id), std::move(name), failures_ == 0, {}};
    r.detail = r.passed ? std::to_string(cases_) + " cases"
                        : std::to_string(failures_) + "/" + std::to_string(cases_) + " failed; first: " + first_failure_;
    return r;
  }

 private:
  std::size_t cases_ = 0;
  std::size_t failures_ = 0;
  std::string first_failure_;
};

// Runs body, turning an escaped exception into a failed result.
CheckResult guarded(const std::string& id, const std::string& name, const std::function<CheckResult()>& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    return {id, name, false, std::string("exception: ") + e.what()};
  }
}

std::string poly_set(const std::vector<LaurentPoly>& ps) {
  std::string out = "{";
  for (std::size_t i = 0; i < ps.size(); ++i) out += (i ? ", " : "") + format_laurent(ps[i]);
  return out + "}";
}

bool eligible_simple(std::int64_t p, std::int64_t q) {
  return p % 2 == 1 && p % 5 != 0 && std::gcd(p, q) == 1 && 3 * q <= p && p <= 6 * q;
}

CheckResult criterion_alexander_pattern() {
  Tally t;
  const auto g2 = enumerate_lspace_alexander(2);
  const auto g3 = enumerate_lspace_alexander(3);
  const std::set<LaurentPoly> want2{parse_laurent("t^2 - t + 1 - t^-1 + t^-2")};
  const std::set<LaurentPoly> want3{parse_laurent("t^3 - t^2 + t - 1 + t^-1 - t^-2 + t^-3"),
                                    parse_laurent("t^3 - t^2 + 1 - t^-2 + t^-3")};
  t.expect(std::set<LaurentPoly>(g2.begin(), g2.end()) == want2 && g2.size() == 1,
           [&] { return "genus 2 gave " + poly_set(g2); });
  t.expect(std::set<LaurentPoly>(g3.begin(), g3.end()) == want3 && g3.size() == 2,
           [&] { return "genus 3 gave " + poly_set(g3); });

  auto dets_and_counts = [](const std::vector<LaurentPoly>& ps) {
    std::multiset<BigInt> dets, counts;
    for (const auto& p : ps) {
      dets.insert(determinant(p));
      counts.insert(binary_dihedral_count(determinant(p)));
    }
    return std::make_pair(dets, counts);
  };
  const auto [d2, c2] = dets_and_counts(g2);
  const auto [d3, c3] = dets_and_counts(g3);
  t.expect(d2 == std::multiset<BigInt>{5}, [] { return std::string("genus 2 determinants"); });
  t.expect(d3 == std::multiset<BigInt>{7, 3}, [] { return std::string("genus 3 determinants"); });
  t.expect(c2 == std::multiset<BigInt>{2}, [] { return std::string("genus 2 binary dihedral counts"); });
  t.expect(c3 == std::multiset<BigInt>{3, 1}, [] { return std::string("genus 3 binary dihedral counts"); });
  return t.result("1", "L-space Alexander pattern, genus 2 and 3");
}

std::int64_t piecewise_genus(std::int64_t p, std::int64_t q) {
  // p/q against 10/3, 4, 5; the breakpoints themselves are never eligible.
  if (3 * p < 10 * q) return 20 * q - 6 * p - 2;
  if (p < 4 * q) return 6 * p - 20 * q - 2;
  if (p < 5 * q) return 20 * q - 4 * p - 2;
  return 4 * p - 20 * q - 2;
}

CheckResult criterion_genus_tables() {
  Tally t;
  for (std::int64_t p = 3; p <= 500; ++p)
    for (std::int64_t q = 1; 3 * q <= p; ++q) {
      if (!eligible_simple(p, q)) continue;
      const Slope s(p, q);
      const std::int64_t g = simple_knot_genus(s);
      const std::int64_t want = piecewise_genus(p, q);
      t.expect(g == want, [&] { return s.to_string() + ": genus " + std::to_string(g) + " vs " + std::to_string(want); });
      const BigInt order = branched_cover_order(s);
      const BigInt want_order = p < 4 * q ? BigInt(p) : BigInt(5 * p);
      t.expect(order == want_order, [&] { return s.to_string() + ": cover order " + order.str(); });
    }
  return t.result("2", "simple-knot genus and branched cover order tables");
}

CheckResult criterion_inequality_equivalence() {
  Tally t;
  for (std::int64_t p = 3; p <= 1000; ++p)
    for (std::int64_t q = 1; 3 * q <= p; ++q) {
      if (!eligible_simple(p, q) || p >= 4 * q) continue;
      const Slope s(p, q);
      const bool by_genus = 4 * simple_knot_genus(s) <= p + 1;
      t.expect(by_genus == slope_inequality_holds(s), [&] { return s.to_string(); });
    }
  return t.result("3", "slope inequality iff genus bound on [3,4)");
}

CheckResult criterion_certifier() {
  Tally t;
  const std::vector<std::pair<Slope, Verdict>> fixed{
      {Slope(3, 1), Verdict::certified},  {Slope(4, 1), Verdict::certified},
      {Slope(7, 2), Verdict::certified},  {Slope(9, 2), Verdict::certified},
      {Slope(5, 1), Verdict::fails_in_general}, {Slope(19, 5), Verdict::open}};
  for (const auto& [s, v] : fixed) {
    const Verdict got = certify(s).verdict;
    t.expect(got == v, [&] { return s.to_string() + " gave " + to_string(got); });
  }
  for (std::int64_t p = 0; p < 10; ++p)
    for (std::int64_t q : {1, 2}) {
      if (std::gcd(p, q) != 1 || p >= 5 * q) continue;
      const Slope s(p, q);
      t.expect(certify(s).verdict == Verdict::certified, [&] { return s.to_string() + " not certified"; });
    }
  std::size_t r5_cases = 0;
  for (std::int64_t p = 3; p <= 200; ++p) {
    if (p % 2 == 0 || p % 5 == 0 || !is_prime_power(static_cast<std::uint64_t>(p))) continue;
    for (std::int64_t q = 1; 3 * q <= p; ++q) {
      // 16/5 <= p/q < 80/23
      if (std::gcd(p, q) != 1 || 5 * p < 16 * q || 23 * p >= 80 * q) continue;
      const Certificate c = certify(Slope(p, q));
      ++r5_cases;
      t.expect(c.verdict == Verdict::certified && c.cites("R5"),
               [&] { return c.slope.to_string() + " not certified via R5"; });
    }
  }
  t.expect(r5_cases > 0, [] { return std::string("no slopes in [16/5, 80/23)"); });
  return t.result("4", "certifier regressions");
}

CheckResult criterion_property_star() {
  Tally t;
  for (std::int64_t p = 3; p <= 200; ++p)
    for (std::int64_t q = 1; 3 * q <= p; ++q) {
      if (!eligible_simple(p, q)) continue;
      const Slope s(p, q);
      const GradedEuler ge = graded_euler(s);
      t.expect(check_property_star(ge, p), [&] { return s.to_string() + " violates property (*)"; });
      t.expect(ge.coefficient_sum() == p, [&] { return s.to_string() + " coefficient sum"; });
    }
  return t.result("5", "property (*) and Euler characteristic");
}

// Symmetric, delta(1) = 1, half-degree in [0, 8].
LaurentPoly random_knot_polynomial(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> degree(0, 8);
  std::uniform_int_distribution<int> coeff(-3, 3);
  const int k = degree(rng);
  LaurentPoly::Terms terms;
  long long side = 0;
  for (int i = 1; i <= k; ++i) {
    int c = coeff(rng);
    if (i == k && c == 0) c = 1;
    terms[i] = c;
    terms[-i] = c;
    side += c;
  }
  terms[0] = 1 - 2 * side;
  return LaurentPoly(terms);
}

CheckResult criterion_fox_agreement() {
  Tally t;
  std::mt19937_64 rng(6);
  const std::vector<std::uint64_t> primes{3, 5, 7, 11, 13};
  std::size_t degenerate = 0;
  for (int i = 0; i < 1000; ++i) {
    const LaurentPoly delta = random_knot_polynomial(rng);
    const std::uint64_t p = primes[static_cast<std::size_t>(i) % primes.size()];
    const unsigned e = 1 + static_cast<unsigned>((i / 5) % 2);
    try {
      const auto report = nondegeneracy_report(delta, p, e);
      if (!report.nondegenerate()) ++degenerate;
      t.expect(report.by_cyclotomic == report.by_fox, [&] { return format_laurent(delta); });
    } catch (const std::logic_error& err) {
      t.expect(false, [&] { return format_laurent(delta) + ": " + err.what(); });
    }
  }
  for (std::int64_t b = 3; b <= 15; b += 2) {
    const BigInt order = fox_branched_order(torus_alexander(TorusKnotParams(2, b)), 2);
    t.expect(order == b, [&] { return "T(2," + std::to_string(b) + ") gave " + order.str(); });
  }
  CheckResult r = t.result("6", "Fox order and cyclotomic sweep agree");
  if (r.passed) r.detail += ", " + std::to_string(degenerate) + " degenerate";
  return r;
}

CheckResult criterion_cyclic_reps() {
  Tally t;
  for (std::int64_t h = 1; h <= 99; h += 2) {
    const CyclicRepSet reps = cyclic_reps(h);
    t.expect(static_cast<std::int64_t>(reps.angles_over_pi.size()) == h, [&] { return "h=" + std::to_string(h) + " count"; });
    std::set<BigRational> distinct;
    for (const auto& a : reps.angles_over_pi) {
      t.expect(satisfies_meridian_condition(h, a), [&] { return "h=" + std::to_string(h) + " angle " + a.str(); });
      distinct.insert(a);
      t.expect(a >= 0 && a < 2, [&] { return "h=" + std::to_string(h) + " angle out of [0, 2pi)"; });
    }
    t.expect(static_cast<std::int64_t>(distinct.size()) == h, [&] { return "h=" + std::to_string(h) + " repeats"; });
  }
  return t.result("7", "cyclic representation counts and angles");
}

// Ambient central differences on each quaternion coordinate, projected.
std::vector<Quaternion> finite_difference_gradient(const GroupPresentation& pres, const QuaternionAssignment& a) {
  constexpr double h = 1e-5;
  std::vector<Quaternion> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    double g[4];
    for (int c = 0; c < 4; ++c) {
      QuaternionAssignment plus = a, minus = a;
      double* pp[4] = {&plus[i].w, &plus[i].x, &plus[i].y, &plus[i].z};
      double* mm[4] = {&minus[i].w, &minus[i].x, &minus[i].y, &minus[i].z};
      *pp[c] += h;
      *mm[c] -= h;
      g[c] = (defect(pres, plus) - defect(pres, minus)) / (2 * h);
    }
    out[i] = project_tangent(a[i], Quaternion{g[0], g[1], g[2], g[3]});
  }
  return out;
}

CheckResult criterion_numerical_oracle() {
  Tally t;
  const SearchOptions base;

  SearchOptions opts = base;
  opts.restarts = 200;
  opts.seed = 1;
  const auto poincare = surgery_presentation(2, 3, Slope(1, 1));
  const RepSearchResult hit = search_irreducible(poincare, opts);
  t.expect(hit.found && hit.defect < 1e-8, [&] { return "no irreducible for S^3_1(T(2,3))"; });

  const RepSearchResult lens = search_irreducible(lens_presentation(5), opts);
  t.expect(!lens.found, [] { return std::string("irreducible reported for <x|x^5>"); });

  opts.restarts = 1000;
  const RepSearchResult five = search_irreducible(surgery_presentation(2, 3, Slope(5, 1)), opts);
  t.expect(!five.found, [] { return std::string("irreducible reported for S^3_5(T(2,3))"); });

  std::mt19937_64 rng(8);
  const std::vector<GroupPresentation> samples{poincare, lens_presentation(3),
                                               surgery_presentation(2, 5, Slope(3, 2))};
  for (int i = 0; i < 100; ++i) {
    const auto& pres = samples[static_cast<std::size_t>(i) % samples.size()];
    const auto point = random_assignment(pres.generator_count, 8, static_cast<std::uint64_t>(i));
    const auto exact = defect_gradient(pres, point);
    const auto fd = finite_difference_gradient(pres, point);
    double num = 0.0, den = 0.0;
    for (std::size_t k = 0; k < exact.size(); ++k) {
      num += (exact[k] - fd[k]).norm_squared();
      den += exact[k].norm_squared();
    }
    const double rel = std::sqrt(num) / std::max(std::sqrt(den), 1e-300);
    t.expect(rel < 1e-5, [&] { return "gradient relative error " + std::to_string(rel); });
  }

  for (std::int64_t a = 2; a <= 7; ++a)
    for (std::int64_t b = a + 1; b <= 7; ++b) {
      if (std::gcd(a, b) != 1) continue;
      for (std::int64_t p = 0; p <= 20; ++p)
        for (std::int64_t q = 1; q <= 20; ++q) {
          if (std::gcd(p, q) != 1) continue;
          const auto factors = abelianization_smith(surgery_presentation(a, b, Slope(p, q)));
          t.expect(factors == std::vector<BigInt>{BigInt(p)}, [&] {
            return "abelianization for T(" + std::to_string(a) + "," + std::to_string(b) + ") at " +
                   std::to_string(p) + "/" + std::to_string(q);
          });
        }
    }

  opts.restarts = 200;
  const RepSearchResult again = search_irreducible(poincare, opts);
  t.expect(again.found == hit.found && again.defect == hit.defect && again.restarts_used == hit.restarts_used &&
               again.assignment == hit.assignment,
           [] { return std::string("search not reproducible"); });
  return t.result("8", "numerical SU(2) oracle and abelianizations");
}

CheckResult criterion_framed_dim() {
  Tally t;
  t.expect(framed_instanton_dim(Slope(0, 1), 3) == 6, [] { return std::string("dim at 0 is not 6"); });
  // Branches: p when p/q >= r, 2rq - p below; at p/q = 3 both read 3.
  t.expect(framed_instanton_dim(Slope(3, 1), 3) == 3 && 2 * 3 * 1 - 3 == 3,
           [] { return std::string("branches disagree at 3"); });
  return t.result("9", "framed instanton dimension");
}

}  // namespace

std::vector<CheckResult> run_acceptance_suite() {
  const std::vector<std::tuple<std::string, std::string, std::function<CheckResult()>>> criteria{
      {"1", "L-space Alexander pattern, genus 2 and 3", criterion_alexander_pattern},
      {"2", "simple-knot genus and branched cover order tables", criterion_genus_tables},
      {"3", "slope inequality iff genus bound on [3,4)", criterion_inequality_equivalence},
      {"4", "certifier regressions", criterion_certifier},
      {"5", "property (*) and Euler characteristic", criterion_property_star},
      {"6", "Fox order and cyclotomic sweep agree", criterion_fox_agreement},
      {"7", "cyclic representation counts and angles", criterion_cyclic_reps},
      {"8", "numerical SU(2) oracle and abelianizations", criterion_numerical_oracle},
      {"9", "framed instanton dimension", criterion_framed_dim}};
  std::vector<CheckResult> out;
  for (const auto& [id, name, body] : criteria) out.push_back(guarded(id, name, body));
  return out;
}

std::vector<CheckResult> run_reference_examples() {
  std::vector<CheckResult> out;
  auto add = [&](const std::string& id, const std::string& name, const std::function<bool()>& check) {
    out.push_back(guarded(id, name, [&] { return CheckResult{id, name, check(), {}}; }));
  };
  const LaurentPoly genus2 = parse_laurent("t^2 - t + 1 - t^-1 + t^-2");
  const LaurentPoly genus3b = parse_laurent("t^3 - t^2 + 1 - t^-2 + t^-3");

  add("ex1", "genus-2 pattern evaluates to 5 at -1", [&] { return genus2.evaluate(-1) == 5; });
  add("ex2", "torus Alexander polynomials satisfy p(1) = 1", [] {
    for (std::int64_t a = 2; a <= 7; ++a)
      for (std::int64_t b = 1; b <= 12; ++b)
        if (std::gcd(a, b) == 1 && torus_alexander(TorusKnotParams(a, b)).evaluate(1) != 1) return false;
    return true;
  });
  add("ex3", "genus-2 pattern is symmetric", [&] { return genus2.is_symmetric(); });
  add("ex4", "Phi_2 = 1 + t", [] { return cyclotomic(2) == IntPoly{1, 1}; });
  add("ex5", "Phi_9 = 1 + t^3 + t^6", [] { return cyclotomic(9) == IntPoly{1, 0, 0, 1, 0, 0, 1}; });
  add("ex6", "T(2,5) Alexander polynomial", [&] { return torus_alexander(TorusKnotParams(2, 5)) == genus2; });
  add("ex7", "determinant of the genus-2 pattern is 5", [&] { return determinant(genus2) == 5; });
  add("ex8", "determinant of t^3 - t^2 + 1 - t^-2 + t^-3 is 3", [&] { return determinant(genus3b) == 3; });
  add("ex9", "binary dihedral classes: 5 -> 2, 7 -> 3, 1 -> 0", [] {
    return binary_dihedral_count(5) == 2 && binary_dihedral_count(7) == 3 && binary_dihedral_count(1) == 0;
  });
  add("ex10", "L-space patterns in genus 2", [&] { return enumerate_lspace_alexander(2) == std::vector{genus2}; });
  add("ex11", "L-space patterns in genus 3", [&] {
    const auto got = enumerate_lspace_alexander(3);
    return std::set<LaurentPoly>(got.begin(), got.end()) ==
           std::set<LaurentPoly>{parse_laurent("t^3 - t^2 + t - 1 + t^-1 - t^-2 + t^-3"), genus3b};
  });
  add("ex12", "framed instanton dimension at 0 is 6", [] { return framed_instanton_dim(Slope(0, 1), 3) == 6; });
  add("ex13", "framed instanton dimension at 3 is 3", [] { return framed_instanton_dim(Slope(3, 1), 3) == 3; });
  add("ex14", "simple knot in L(3,2) has genus 0", [] { return simple_knot_genus(Slope(3, 1)) == 0; });
  add("ex15", "branched cover order at 3 is 3", [] { return branched_cover_order(Slope(3, 1)) == 3; });
  add("ex16", "|delta(-1)| = 1 is nondegenerate at p = 3", [] {
    return nondegeneracy_check(parse_laurent("t^2 - 1 + t^-2"), 3, 1) &&
           nondegeneracy_check(LaurentPoly::constant(1), 3, 1);
  });
  add("ex17", "cyclic_reps has h elements for odd h <= 99", [] {
    for (std::int64_t h = 1; h <= 99; h += 2)
      if (static_cast<std::int64_t>(cyclic_reps(h).angles_over_pi.size()) != h) return false;
    return true;
  });
  add("ex18", "3 certified with R5 witnesses genus 0 and 60 <= 80 <= 84", [] {
    const Certificate c = certify(Slope(3, 1));
    if (c.verdict != Verdict::certified) return false;
    for (const auto& r : c.chain)
      if (r.rule == "R5")
        return r.witnesses.at("genus") == "0" && r.witnesses.at("inequality") == "60 <= 80 <= 84";
    return false;
  });
  add("ex19", "9/2 certified via R4", [] {
    const Certificate c = certify(Slope(9, 2));
    return c.verdict == Verdict::certified && c.cites("R4");
  });
  add("ex20", "5 fails in general", [] { return certify(Slope(5, 1)).verdict == Verdict::fails_in_general; });
  add("ex21", "integer and half-integer slopes in [3,5) certified", [] {
    const auto res = enumerate_certified({10, 3, 5, std::nullopt});
    for (const auto& c : res.certificates)
      if (c.slope.q() <= 2 && c.verdict != Verdict::certified) return false;
    return !res.certificates.empty();
  });
  add("ex22", "eligible slopes in [16/5, 80/23) with p <= 80 certified via R5", [] {
    const auto res = enumerate_certified({80, BigRational(16, 5), BigRational(80, 23), std::nullopt});
    std::size_t seen = 0;
    for (const auto& c : res.certificates) {
      const std::int64_t p = c.slope.p();
      if (p % 2 == 0 || p % 5 == 0 || !is_prime_power(static_cast<std::uint64_t>(p))) continue;
      ++seen;
      if (c.verdict != Verdict::certified || !c.cites("R5")) return false;
    }
    return seen > 0;
  });
  add("ex23", "no irreducible for S^3_5(T(2,3)) in 1000 restarts", [] {
    SearchOptions opts;
    opts.restarts = 1000;
    return !search_irreducible(surgery_presentation(2, 3, Slope(5, 1)), opts).found;
  });
  return out;
}

bool print_results(std::ostream& out, const std::vector<CheckResult>& results) {
  bool all = true;
  for (const auto& r : results) {
    out << (r.passed ? "PASS" : "FAIL") << "  " << r.id << "  " << r.name;
    if (!r.detail.empty()) out << "  (" << r.detail << ")";
    out << '\n';
    all = all && r.passed;
  }
  return all;
}

}  // namespace slopecert
