#include "slopecert/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>

#include "slopecert/acceptance.hpp"
#include "slopecert/certifier.hpp"
#include "slopecert/cover_arith.hpp"
#include "slopecert/json_io.hpp"
#include "slopecert/knot_invariants.hpp"
#include "slopecert/lens_simple.hpp"
#include "slopecert/poly_text.hpp"
#include "slopecert/presentation.hpp"
#include "slopecert/su2_search.hpp"

#ifndef SLOPECERT_VERSION
#define SLOPECERT_VERSION "0.0.0"
#endif

namespace slopecert {

void Config::validate() const {
  if (!(tol > 0.0) || !(eps > 0.0)) throw std::invalid_argument("tolerances must be positive");
  if (restarts < 1) throw std::invalid_argument("restarts must be at least 1");
}

std::string version_string() { return std::string("slopecert ") + SLOPECERT_VERSION; }

namespace {

// A ParseError that remembers the text it was raised on.
struct InputError : std::invalid_argument {
  InputError(std::string input_, const ParseError& e)
      : std::invalid_argument(e.what()), input(std::move(input_)), error(e) {}
  std::string input;
  ParseError error;
};

template <class F>
auto parse_input(const std::string& text, F&& parse) {
  try {
    return parse(text);
  } catch (const ParseError& e) {
    throw InputError(text, e);
  }
}

Slope slope_arg(const std::string& s) { return parse_input(s, [](const std::string& t) { return parse_slope(t); }); }
BigRational rational_arg(const std::string& s) {
  return parse_input(s, [](const std::string& t) { return parse_rational(t); });
}
LaurentPoly poly_arg(const std::string& s) { return parse_input(s, [](const std::string& t) { return parse_laurent(t); }); }

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

int run_certify(const std::string& text, std::ostream& out) {
  const Certificate cert = certify(slope_arg(text));
  print_json(out, to_json(cert));
  return exit_code(cert.verdict);
}

int run_enumerate(std::int64_t max_p, const std::string& from, const std::string& to,
                  std::optional<std::int64_t> max_q, OutputMode mode, std::ostream& out) {
  EnumerationOptions opts{max_p, rational_arg(from), rational_arg(to), max_q};
  const EnumerationResult res = enumerate_certified(opts);
  if (mode == OutputMode::json) {
    print_json(out, to_json(res));
    return 0;
  }
  for (const auto& c : res.certificates) {
    out << std::left << std::setw(10) << c.slope.to_string() << std::setw(18) << to_string(c.verdict);
    for (std::size_t i = 0; i < c.chain.size(); ++i) out << (i ? "," : "") << c.chain[i].rule;
    out << '\n';
  }
  for (Verdict v : {Verdict::certified, Verdict::open, Verdict::fails_in_general}) {
    const auto it = res.counts.find(v);
    out << to_string(v) << ": " << (it == res.counts.end() ? 0 : it->second) << '\n';
  }
  return 0;
}

int run_simple_knot(std::int64_t p, std::int64_t q, std::ostream& out) {
  if (q < 1 || p < 0 || std::gcd(p, q) != 1) throw std::invalid_argument("p/q must be reduced with q >= 1");
  print_json(out, to_json(simple_knot_invariants(Slope(p, q))));
  return 0;
}

int run_alexander(std::int64_t a, std::int64_t b, OutputMode mode, std::ostream& out) {
  const LaurentPoly delta = torus_alexander(TorusKnotParams(a, b));
  if (mode == OutputMode::json)
    print_json(out, {{"a", a}, {"b", b}, {"alexander", format_laurent(delta)}});
  else
    out << format_laurent(delta) << '\n';
  return 0;
}

int run_lspace(std::int64_t g, OutputMode mode, std::ostream& out) {
  const auto polys = enumerate_lspace_alexander(g);
  if (mode == OutputMode::json) {
    Json arr = Json::array();
    for (const auto& p : polys) {
      const BigInt det = determinant(p);
      arr.push_back({{"alexander", format_laurent(p)},
                     {"determinant", big_to_string(det)},
                     {"binary_dihedral_count", big_to_string(binary_dihedral_count(det))}});
    }
    print_json(out, {{"genus", g}, {"polynomials", arr}});
  } else {
    for (const auto& p : polys) out << format_laurent(p) << '\n';
  }
  return 0;
}

int run_det(const std::string& text, OutputMode mode, std::ostream& out) {
  const LaurentPoly p = poly_arg(text);
  const BigInt det = determinant(p);
  if (mode == OutputMode::json)
    print_json(out, {{"alexander", format_laurent(p)},
                     {"determinant", big_to_string(det)},
                     {"binary_dihedral_count", big_to_string(binary_dihedral_count(det))}});
  else
    out << det << '\n';
  return 0;
}

int run_fox(const std::string& text, std::uint64_t n, OutputMode mode, std::ostream& out) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  const LaurentPoly p = poly_arg(text);
  const BigInt order = fox_branched_order(p, n);
  if (mode == OutputMode::json)
    print_json(out, {{"alexander", format_laurent(p)}, {"n", n}, {"order", big_to_string(order)}, {"infinite_h1", order == 0}});
  else
    out << (order == 0 ? std::string("0 (infinite H_1)") : order.str()) << '\n';
  return 0;
}

int run_nondegenerate(const std::string& text, std::uint64_t p, unsigned e, OutputMode mode, std::ostream& out) {
  const NondegeneracyReport rep = nondegeneracy_report(poly_arg(text), p, e);
  if (mode == OutputMode::json) {
    print_json(out, to_json(rep));
    return 0;
  }
  out << (rep.nondegenerate() ? "nondegenerate" : "degenerate") << " for n = " << rep.n << '\n';
  out << "fox order: " << rep.fox_order << '\n';
  out << "dividing cyclotomic orders:";
  for (auto d : rep.dividing_orders) out << ' ' << d;
  out << (rep.dividing_orders.empty() ? " none\n" : "\n");
  return 0;
}

int run_cyclic_reps(std::int64_t h, OutputMode mode, std::ostream& out) {
  const CyclicRepSet reps = cyclic_reps(h);
  if (mode == OutputMode::json) {
    print_json(out, to_json(reps));
    return 0;
  }
  const auto radians = reps.angles_radians();
  for (std::size_t m = 0; m < radians.size(); ++m)
    out << m << "  " << reps.angles_over_pi[m] << "*pi  " << std::setprecision(17) << radians[m] << '\n';
  return 0;
}

int run_presentation(std::int64_t a, std::int64_t b, const std::string& slope_text, bool unfilled, OutputMode mode,
                     std::ostream& out) {
  const Slope s = unfilled && slope_text.empty() ? Slope(0, 1) : slope_arg(slope_text);
  const GroupPresentation pres = surgery_presentation(a, b, s, unfilled);
  if (mode == OutputMode::json) {
    Json factors = Json::array();
    for (const auto& f : abelianization_smith(pres)) factors.push_back(big_to_string(f));
    print_json(out, {{"gens", pres.generator_count}, {"relators", pres.relators}, {"abelianization", factors}});
  } else {
    out << format_presentation(pres);
  }
  return 0;
}

int run_su2_search(const std::string& file, const Config& cfg, std::size_t max_iterations, std::ostream& out) {
  cfg.validate();
  const GroupPresentation pres = [&] {
    try {
      return read_presentation_file(file);
    } catch (const ParseError& e) {
      std::ifstream in(file);
      std::ostringstream buf;
      buf << in.rdbuf();
      throw InputError(buf.str(), e);
    }
  }();
  SearchOptions opts;
  opts.restarts = cfg.restarts;
  opts.seed = cfg.seed;
  opts.tol = cfg.tol;
  opts.eps = cfg.eps;
  opts.max_iterations = max_iterations;
  const RepSearchResult res = search_irreducible(pres, opts);
  if (cfg.output == OutputMode::json) {
    print_json(out, to_json(res));
    return 0;
  }
  out << std::setprecision(6);
  if (res.found) {
    out << "found irreducible after " << res.restarts_used << " restart(s)\n";
    out << "defect: " << res.defect << "\ncommutator margin: " << res.irreducibility_margin << '\n';
    out << "image (heuristic): " << res.image_heuristic << '\n';
    out << std::setprecision(17);
    for (std::size_t i = 0; i < res.assignment->size(); ++i) {
      const Quaternion& q = (*res.assignment)[i];
      out << "x" << i + 1 << " = " << q.w << ' ' << q.x << ' ' << q.y << ' ' << q.z << '\n';
    }
  } else {
    out << kNoRepDisclaimer << '\n';
    out << "restarts: " << res.restarts_used << "\nlowest defect: " << res.defect << '\n';
  }
  return 0;
}

// Command-level examples run through dispatch itself.
std::vector<CheckResult> cli_examples() {
  std::vector<CheckResult> out;
  auto run = [](std::vector<std::string> args, std::string& text) {
    std::ostringstream o, e;
    const int code = dispatch(args, o, e);
    text = o.str();
    return code;
  };
  std::string text;
  int code = run({"certify", "3/1"}, text);
  bool ok = code == 0 && Json::parse(text).at("verdict") == "certified";
  out.push_back({"cli1", "certify 3/1 exits 0 with verdict certified", ok, {}});
  code = run({"certify", "5"}, text);
  out.push_back({"cli2", "certify 5 exits 3", code == 3, {}});
  code = run({"alexander", "torus", "2", "5"}, text);
  out.push_back({"cli3", "alexander torus 2 5", code == 0 && text == "t^2 - t + 1 - t^-1 + t^-2\n", {}});
  return out;
}

int run_selftest(std::ostream& out) {
  out << "acceptance criteria\n";
  const bool criteria = print_results(out, run_acceptance_suite());
  out << "reference examples\n";
  const bool examples = print_results(out, run_reference_examples());
  const bool cli = print_results(out, cli_examples());
  const bool all = criteria && examples && cli;
  out << (all ? "all checks passed" : "some checks FAILED") << '\n';
  return all ? 0 : 1;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Slope certificates and knot invariant calculators for SU(2)-abelian surgeries", "slopecert"};
  app.require_subcommand(1);
  app.set_version_flag("--version", version_string());

  Config cfg;
  bool json = false;
  auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", json, "Emit JSON"); };

  std::string slope_text, from_text = "0", to_text = "7", poly_text, file;
  std::int64_t p = 0, q = 1, a = 0, b = 0, g = 0, h = 0, max_p = 10;
  std::optional<std::int64_t> max_q;
  std::uint64_t n = 0, prime = 0;
  unsigned e = 1;
  bool unfilled = false;
  std::size_t max_iterations = SearchOptions{}.max_iterations;

  auto* certify_cmd = app.add_subcommand("certify", "Certify a slope p/q (always JSON)");
  certify_cmd->add_option("slope", slope_text, "p/q or p")->required();
  add_json(certify_cmd);

  auto* enumerate_cmd = app.add_subcommand("enumerate", "Certify every slope p/q in [from, to) with p <= max-p");
  enumerate_cmd->add_option("--max-p", max_p, "Largest numerator")->required();
  enumerate_cmd->add_option("--from", from_text, "Lower bound (inclusive)");
  enumerate_cmd->add_option("--to", to_text, "Upper bound (exclusive)");
  enumerate_cmd->add_option("--max-q", max_q, "Largest denominator");
  add_json(enumerate_cmd);

  auto* simple_cmd = app.add_subcommand("simple-knot", "Invariants of S(p, 2q, 10q) (always JSON)");
  simple_cmd->add_option("p", p)->required();
  simple_cmd->add_option("q", q)->required();
  add_json(simple_cmd);

  auto* alexander_cmd = app.add_subcommand("alexander", "Alexander polynomials");
  alexander_cmd->require_subcommand(1);
  auto* alexander_torus = alexander_cmd->add_subcommand("torus", "Torus knot T(a, b)");
  alexander_torus->add_option("a", a)->required();
  alexander_torus->add_option("b", b)->required();
  add_json(alexander_torus);

  auto* lspace_cmd = app.add_subcommand("lspace-alex", "Alexander polynomials allowed for L-space knots of genus g");
  lspace_cmd->add_option("g", g)->required();
  add_json(lspace_cmd);

  auto* det_cmd = app.add_subcommand("det", "Determinant |p(-1)|");
  det_cmd->add_option("poly", poly_text, "Laurent polynomial in t")->required();
  add_json(det_cmd);

  auto* fox_cmd = app.add_subcommand("fox", "H_1 order of the n-fold cyclic branched cover (0 = infinite)");
  fox_cmd->add_option("poly", poly_text)->required();
  fox_cmd->add_option("n", n)->required();
  add_json(fox_cmd);

  auto* nondeg_cmd = app.add_subcommand("nondegenerate", "Nondegeneracy at n = 2 p^e, two ways");
  nondeg_cmd->add_option("poly", poly_text)->required();
  nondeg_cmd->add_option("p", prime)->required();
  nondeg_cmd->add_option("e", e)->required();
  add_json(nondeg_cmd);

  auto* cyclic_cmd = app.add_subcommand("cyclic-reps", "The h cyclic representations with meridian sent to i");
  cyclic_cmd->add_option("order", h, "Odd order h of H_1")->required();
  add_json(cyclic_cmd);

  auto* pres_cmd = app.add_subcommand("presentation", "Group presentations");
  pres_cmd->require_subcommand(1);
  auto* pres_torus = pres_cmd->add_subcommand("torus", "Surgery on the torus knot T(a, b)");
  pres_torus->add_option("a", a)->required();
  pres_torus->add_option("b", b)->required();
  pres_torus->add_option("--slope", slope_text, "p/q");
  pres_torus->add_flag("--unfilled", unfilled, "Knot group only");
  add_json(pres_torus);

  auto* su2_cmd = app.add_subcommand("su2-search", "Search for an irreducible SU(2) representation");
  su2_cmd->add_option("--file", file, "Presentation file")->required();
  su2_cmd->add_option("--restarts", cfg.restarts);
  su2_cmd->add_option("--seed", cfg.seed);
  su2_cmd->add_option("--tol", cfg.tol, "Defect tolerance");
  su2_cmd->add_option("--eps", cfg.eps, "Commutator threshold");
  su2_cmd->add_option("--max-iterations", max_iterations);
  add_json(su2_cmd);

  auto* selftest_cmd = app.add_subcommand("selftest", "Run the acceptance suite and reference examples");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << version_string() << '\n';
    return 0;
  } catch (const CLI::ParseError& ex) {
    err << "error: " << ex.what() << "\n\n" << app.help();
    return 1;
  }
  cfg.output = json ? OutputMode::json : OutputMode::human;

  try {
    if (certify_cmd->parsed()) return run_certify(slope_text, out);
    if (enumerate_cmd->parsed()) return run_enumerate(max_p, from_text, to_text, max_q, cfg.output, out);
    if (simple_cmd->parsed()) return run_simple_knot(p, q, out);
    if (alexander_torus->parsed()) return run_alexander(a, b, cfg.output, out);
    if (lspace_cmd->parsed()) return run_lspace(g, cfg.output, out);
    if (det_cmd->parsed()) return run_det(poly_text, cfg.output, out);
    if (fox_cmd->parsed()) return run_fox(poly_text, n, cfg.output, out);
    if (nondeg_cmd->parsed()) return run_nondegenerate(poly_text, prime, e, cfg.output, out);
    if (cyclic_cmd->parsed()) return run_cyclic_reps(h, cfg.output, out);
    if (pres_torus->parsed()) {
      if (!unfilled && slope_text.empty()) throw std::invalid_argument("--slope is required unless --unfilled");
      return run_presentation(a, b, slope_text, unfilled, cfg.output, out);
    }
    if (su2_cmd->parsed()) return run_su2_search(file, cfg, max_iterations, out);
    if (selftest_cmd->parsed()) return run_selftest(out);
  } catch (const InputError& ex) {
    err << "error: " << describe_parse_error(ex.input, ex.error) << '\n';
    return 1;
  } catch (const std::invalid_argument& ex) {
    err << "error: " << ex.what() << '\n';
    return 1;
  } catch (const std::exception& ex) {
    err << "internal error: " << ex.what() << '\n';
    return 1;
  }
  err << app.help();
  return 1;
}

}  // namespace slopecert
