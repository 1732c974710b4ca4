#pragma once

// JSON encoding shared by the CLI output and the cache file.
//
//   poly:        [[exponent, coefficient], ...]   ascending exponent
//   expansion:   {"basis": "atomic", "weight": [a, b],
//                 "terms": [{"weight": [c, d], "poly": [...]}, ...]}
//
// Terms appear in display order with the expanded weight first.

#include <json.hpp>

#include "g2atomic/combo.hpp"

namespace g2 {

using Json = nlohmann::ordered_json;

Json weight_to_json(Weight w);
Weight weight_from_json(const Json& j);

Json poly_to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const Json& j);

Json expansion_to_json(const Combination& x, Weight lam);

struct Expansion {
  Weight weight;
  Combination terms;
};
/// Inverse of expansion_to_json. Throws DomainError on malformed input.
Expansion expansion_from_json(const Json& j);

}  // namespace g2
