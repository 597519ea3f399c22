#include "slopecert/json_io.hpp"

#include <stdexcept>

#include "slopecert/poly_text.hpp"

namespace slopecert {

namespace {

Json witnesses_to_json(const Witnesses& w) {
  Json out = Json::object();
  for (const auto& [k, v] : w) out[k] = v;
  return out;
}

Witnesses witnesses_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("witnesses must be an object");
  Witnesses out;
  for (const auto& [k, v] : j.items()) {
    if (!v.is_string()) throw std::invalid_argument("witness '" + k + "' must be a string");
    out[k] = v.get<std::string>();
  }
  return out;
}

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw std::invalid_argument(std::string("missing field '") + name + "'");
  return j.at(name);
}

std::string string_field(const Json& j, const char* name) {
  const Json& v = field(j, name);
  if (!v.is_string()) throw std::invalid_argument(std::string("field '") + name + "' must be a string");
  return v.get<std::string>();
}

Json quaternion_to_json(const Quaternion& q) { return Json::array({q.w, q.x, q.y, q.z}); }

}  // namespace

std::string big_to_string(const BigInt& n) { return n.str(); }

BigInt big_from_string(const std::string& s) {
  const std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (s.size() == start) throw std::invalid_argument("empty integer");
  for (std::size_t i = start; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("bad integer '" + s + "'");
  return BigInt(s);
}

Json to_json(const Certificate& cert) {
  Json chain = Json::array();
  for (const auto& r : cert.chain)
    chain.push_back({{"rule", r.rule}, {"citation", r.citation}, {"witnesses", witnesses_to_json(r.witnesses)}});
  return {{"slope", cert.slope.to_string()},
          {"verdict", to_string(cert.verdict)},
          {"chain", chain},
          {"witnesses", witnesses_to_json(cert.witnesses)}};
}

Certificate certificate_from_json(const Json& j) {
  Certificate cert;
  cert.slope = parse_slope(string_field(j, "slope"));
  cert.verdict = verdict_from_string(string_field(j, "verdict"));
  const Json& chain = field(j, "chain");
  if (!chain.is_array()) throw std::invalid_argument("chain must be an array");
  for (const auto& r : chain)
    cert.chain.push_back({string_field(r, "rule"), string_field(r, "citation"), witnesses_from_json(field(r, "witnesses"))});
  cert.witnesses = witnesses_from_json(field(j, "witnesses"));
  return cert;
}

Json to_json(const SimpleKnotInvariants& inv) {
  return {{"p", inv.lens.a},
          {"q", inv.lens.b / 2},
          {"d", inv.d},
          {"genus", inv.genus},
          {"alexander", format_laurent(inv.alexander)},
          {"cover_order", big_to_string(inv.cover_order)},
          {"euler", format_laurent(inv.euler.to_laurent())}};
}

Json to_json(const NondegeneracyReport& report) {
  return {{"n", report.n},
          {"fox_order", big_to_string(report.fox_order)},
          {"infinite_h1", report.fox_order == 0},
          {"dividing_cyclotomic_orders", report.dividing_orders},
          {"nondegenerate_by_cyclotomic", report.by_cyclotomic},
          {"nondegenerate_by_fox", report.by_fox},
          {"nondegenerate", report.nondegenerate()}};
}

Json to_json(const CyclicRepSet& reps) {
  Json angles = Json::array();
  const auto radians = reps.angles_radians();
  for (std::size_t m = 0; m < reps.angles_over_pi.size(); ++m)
    angles.push_back({{"m", m}, {"over_pi", reps.angles_over_pi[m].str()}, {"radians", radians[m]}});
  return {{"order", reps.order}, {"count", reps.angles_over_pi.size()}, {"angles", angles}};
}

Json to_json(const RepSearchResult& result) {
  Json out = {{"found", result.found},
              {"defect", result.defect},
              {"irreducibility_margin", result.irreducibility_margin},
              {"restarts_used", result.restarts_used},
              {"seed", result.seed}};
  if (result.found) {
    Json assignment = Json::array();
    for (const auto& q : *result.assignment) assignment.push_back(quaternion_to_json(q));
    out["assignment"] = assignment;
    out["image_heuristic"] = result.image_heuristic;
    out["image_heuristic_note"] = "nearest-subgroup guess, not an exact classification";
  } else {
    out["note"] = kNoRepDisclaimer;
  }
  return out;
}

Json to_json(const EnumerationResult& result) {
  Json certs = Json::array();
  for (const auto& c : result.certificates) certs.push_back(to_json(c));
  Json counts = Json::object();
  for (Verdict v : {Verdict::certified, Verdict::open, Verdict::fails_in_general}) {
    const auto it = result.counts.find(v);
    counts[to_string(v)] = it == result.counts.end() ? 0 : it->second;
  }
  return {{"counts", counts}, {"certificates", certs}};
}

}  // namespace slopecert
