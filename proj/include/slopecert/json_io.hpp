#pragma once

// JSON encodings used by the CLI. Integers that can outgrow 64 bits (cover
// orders, resultants) are written as decimal strings.

#include <json.hpp>

#include "slopecert/certifier.hpp"
#include "slopecert/cover_arith.hpp"
#include "slopecert/lens_simple.hpp"
#include "slopecert/su2_search.hpp"

namespace slopecert {

using Json = nlohmann::ordered_json;

Json to_json(const Certificate& cert);
/// Throws std::invalid_argument on a missing field or a bad value.
Certificate certificate_from_json(const Json& j);

/// {p, q, d, genus, alexander, cover_order, euler}; euler is the polynomial
/// text of the graded Euler characteristic.
Json to_json(const SimpleKnotInvariants& inv);

Json to_json(const NondegeneracyReport& report);
Json to_json(const CyclicRepSet& reps);
Json to_json(const RepSearchResult& result);
Json to_json(const EnumerationResult& result);

std::string big_to_string(const BigInt& n);
/// Decimal integer text, optional leading '-'. Throws std::invalid_argument.
BigInt big_from_string(const std::string& s);

}  // namespace slopecert
