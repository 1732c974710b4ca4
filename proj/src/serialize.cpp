#include "g2atomic/serialize.hpp"

#include <optional>

namespace g2 {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw DomainError("malformed JSON: " + what); }

std::int64_t as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) malformed(std::string(what) + " is not an integer");
  return j.get<std::int64_t>();
}

}  // namespace

Json weight_to_json(Weight w) { return Json::array({w.a, w.b}); }

Weight weight_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) malformed("weight must be a two-element array");
  return {as_int(j[0], "weight coordinate"), as_int(j[1], "weight coordinate")};
}

Json poly_to_json(const LaurentPoly& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms()) out.push_back(Json::array({e, c}));
  return out;
}

LaurentPoly poly_from_json(const Json& j) {
  if (!j.is_array()) malformed("poly must be an array");
  LaurentPoly out;
  std::optional<std::int64_t> previous;
  for (const Json& pair : j) {
    if (!pair.is_array() || pair.size() != 2) malformed("poly entry must be [exponent, coefficient]");
    const std::int64_t e = as_int(pair[0], "exponent");
    const std::int64_t c = as_int(pair[1], "coefficient");
    if (c == 0) malformed("poly entry with zero coefficient");
    if (previous && e <= *previous) malformed("poly exponents must be strictly ascending");
    previous = e;
    out.add_term(e, c);
  }
  return out;
}

Json expansion_to_json(const Combination& x, Weight lam) {
  Json terms = Json::array();
  for (const Weight w : sorted_support(x, lam))
    terms.push_back(Json{{"weight", weight_to_json(w)}, {"poly", poly_to_json(x.coeff(w))}});
  return Json{{"basis", x.basis().name()}, {"weight", weight_to_json(lam)}, {"terms", std::move(terms)}};
}

Expansion expansion_from_json(const Json& j) {
  if (!j.is_object()) malformed("expansion must be an object");
  for (const char* key : {"basis", "weight", "terms"})
    if (!j.contains(key)) malformed(std::string("missing key '") + key + "'");
  if (!j["basis"].is_string()) malformed("basis must be a string");
  if (!j["terms"].is_array()) malformed("terms must be an array");
  Expansion out{weight_from_json(j["weight"]), Combination(BasisLabel::parse(j["basis"].get<std::string>()))};
  for (const Json& term : j["terms"]) {
    if (!term.is_object() || !term.contains("weight") || !term.contains("poly")) malformed("bad term");
    const Weight w = weight_from_json(term["weight"]);
    if (!w.is_dominant()) malformed("term weight " + w.to_string() + " is not dominant");
    if (out.terms.terms().contains(w)) malformed("duplicate term weight " + w.to_string());
    const LaurentPoly p = poly_from_json(term["poly"]);
    if (p.is_zero()) malformed("term with zero polynomial");
    out.terms.add_term(w, p);
  }
  return out;
}

}  // namespace g2
