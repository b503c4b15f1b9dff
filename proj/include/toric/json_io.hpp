#pragma once

// JSON (de)serialisation. Rationals are written as "p/q" strings and read from
// strings or plain JSON numbers. Every malformed document raises SchemaError
// naming the offending field.

#include <json.hpp>

#include <string>
#include <string_view>

#include "toric/calabi.hpp"
#include "toric/curvature.hpp"
#include "toric/dim2.hpp"
#include "toric/polytope.hpp"
#include "toric/potential.hpp"
#include "toric/validate.hpp"

namespace toric {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Rational rational_from_json(const Json& value, std::string_view field);
Json to_json(const Rational& q);
Json to_json(const Point& x);

PolyhedralSet polytope_from_json(const Json& doc);
Json to_json(const PolyhedralSet& set);

PolytopeSpec spec_from_json(const Json& doc);
Json to_json(const PolytopeSpec& spec);

std::vector<Constraint> constraints_from_json(const Json& doc);

RadialProfile profile_from_json(const Json& doc);
Json to_json(const RadialProfile& profile);

Json to_json(const Classification& c);

/// Square matrix as nested arrays of rationals.
LinearChange change_from_json(const Json& doc);
Json to_json(const LinearChange& change);

/// {"kind": "canonical" | "radial" | "dim2" | "sum" | "poly" | "transform", ...}.
Potential potential_from_json(const Json& doc);

Json to_json(const CurvatureReport& report);
Json to_json(const ValidationReport& report);
Json to_json(const Dim2Family& family);

}  // namespace toric
