#pragma once

#include <json.hpp>
#include <string>

#include "tamari/checks.hpp"
#include "tamari/counting.hpp"
#include "tamari/tamari.hpp"
#include "tamari/tseries.hpp"
#include "tamari/zpipeline.hpp"

namespace tamari {

using Json = nlohmann::ordered_json;

// Canonical monomial key: variables in x,y,q,u,v order, "1" for the
// empty monomial, exponents after '^' when != 1.
std::string mono_key(const Mono& m);
// Polynomial as a monomial -> exact-coefficient map with sorted keys.
Json poly_to_json(const Poly& p);
Poly poly_from_json(const Json& j);

Json path_to_json(const PathWord& p);
PathWord path_from_json(const Json& j);
Json labelling_to_json(const Labelling& l);
Labelling labelling_from_json(const Json& j);
Json parking_to_json(const ParkingFunction& f);

Json tseries_to_json(const TSeries& f);
Json zseries_to_json(const PolySeries& s);

Json interval_to_json(const TamariPoset& poset, const Interval& iv);
Json report_to_json(const CheckReport& r);

// Hasse diagram as DOT, vertices labelled by path words, deterministic
// ordering.
std::string hasse_to_dot(const TamariPoset& poset);
// Minimal parser for the DOT we emit; returns false when the text does
// not round-trip (used as an output self-check).
struct DotGraph {
  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> edges;
};
bool parse_dot(const std::string& text, DotGraph* out);

}  // namespace tamari
