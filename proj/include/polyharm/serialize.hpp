#pragma once

#include <json.hpp>

#include "polyharm/poly1.hpp"
#include "polyharm/poly2.hpp"

namespace polyharm {

using Json = nlohmann::ordered_json;

/// [{"a":..., "b":..., "c":"num/den"}, ...] in ascending (a, b) order.
Json poly2_to_json(const Poly2& p);
Poly2 poly2_from_json(const Json& j);

/// Coefficient list ["c0", "c1", ...] from degree 0 upwards.
Json poly1_to_json(const Poly1& p);

/// Formats a double with 17 significant digits (round-trip exact).
std::string format_double(double v);

}  // namespace polyharm
