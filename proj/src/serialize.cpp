#include "polyharm/serialize.hpp"

#include <cstdio>

namespace polyharm {

Json poly2_to_json(const Poly2& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms()) out.push_back({{"a", e.a}, {"b", e.b}, {"c", to_string(c)}});
  return out;
}

Poly2 poly2_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("Poly2 JSON must be an array");
  Poly2::TermMap terms;
  for (const auto& t : j) {
    if (!t.is_object() || !t.contains("a") || !t.contains("b") || !t.contains("c"))
      throw ParseError("Poly2 term needs keys a, b, c");
    const int a = t.at("a").get<int>();
    const int b = t.at("b").get<int>();
    if (a < 0 || b < 0) throw ParseError("negative exponent in Poly2 JSON");
    Rational c = parse_rational(t.at("c").get<std::string>());
    auto [it, inserted] = terms.emplace(Exponent{a, b}, c);
    if (!inserted) throw ParseError("duplicate exponent in Poly2 JSON");
  }
  return Poly2(std::move(terms));
}

Json poly1_to_json(const Poly1& p) {
  Json out = Json::array();
  for (const auto& c : p.coeffs()) out.push_back(to_string(c));
  return out;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace polyharm
