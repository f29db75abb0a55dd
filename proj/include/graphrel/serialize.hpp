#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>

#include "json.hpp"

#include "graphrel/bivar_poly.hpp"
#include "graphrel/class_scan.hpp"
#include "graphrel/counts.hpp"
#include "graphrel/mc.hpp"
#include "graphrel/order.hpp"

namespace graphrel {

using Json = nlohmann::json;

// [[a, b, "coefficient"], ...] sorted by (a, b).
Json to_json(const BivarPoly& p);
BivarPoly poly_from_json(const Json& j);

// Rows i = 0..m, columns j = 1..n, decimal strings.
Json to_json(const NTable& t);
Json to_json(const OrderResult& r);
Json to_json(const ClassReport& r);
Json to_json(const McEstimate& e);
Json to_json(const Section4Result& r);

// "a/b" or "a". Throws std::invalid_argument when malformed.
mpq_class parse_rational(std::string_view text);
std::string rational_string(const mpq_class& q);

}  // namespace graphrel
