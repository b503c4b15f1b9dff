#include "toric/json_io.hpp"

#include <cmath>
#include <numbers>

#include "toric/errors.hpp"

namespace toric {

namespace {

const Json& require(const Json& doc, const char* key, std::string_view where) {
  if (!doc.is_object()) throw SchemaError(std::string(where) + ": expected an object");
  auto it = doc.find(key);
  if (it == doc.end()) throw SchemaError(std::string(where) + ": missing field '" + key + "'");
  return *it;
}

int require_int(const Json& doc, const char* key, std::string_view where) {
  const Json& v = require(doc, key, where);
  if (!v.is_number_integer()) throw SchemaError(std::string(where) + ": field '" + key + "' must be an integer");
  return v.get<int>();
}

double require_double(const Json& doc, const char* key, std::string_view where) {
  const Json& v = require(doc, key, where);
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) return to_double(rational_from_json(v, key));
  throw SchemaError(std::string(where) + ": field '" + key + "' must be a number");
}

Json optional_double(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

RationalVector rational_vector(const Json& doc, std::string_view field) {
  if (!doc.is_array()) throw SchemaError(std::string(field) + ": expected an array");
  RationalVector out;
  for (const auto& v : doc) out.push_back(rational_from_json(v, field));
  return out;
}

}  // namespace

Rational rational_from_json(const Json& value, std::string_view field) {
  if (value.is_string()) {
    try {
      return parse_rational(value.get<std::string>());
    } catch (const SchemaError& e) {
      throw SchemaError(std::string(field) + ": " + e.what());
    }
  }
  if (value.is_number_integer()) return Rational(value.get<long>());
  if (value.is_number_float()) return rational_from_double(value.get<double>());
  throw SchemaError(std::string(field) + ": expected a rational as a string \"p/q\" or a number");
}

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const Point& x) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < x.size(); ++i) out.push_back(x(i));
  return out;
}

PolyhedralSet polytope_from_json(const Json& doc) {
  const int dim = require_int(doc, "dim", "polytope");
  if (dim <= 0) throw SchemaError("polytope: 'dim' must be positive");
  const Json& facets = require(doc, "facets", "polytope");
  if (!facets.is_array()) throw SchemaError("polytope: 'facets' must be an array");
  std::vector<Facet> out;
  for (const auto& f : facets) {
    Facet facet{rational_vector(require(f, "normal", "facet"), "facet.normal"),
                rational_from_json(require(f, "offset", "facet"), "facet.offset")};
    if (static_cast<int>(facet.normal.size()) != dim) {
      throw SchemaError("polytope: facet normal has length " + std::to_string(facet.normal.size()) + ", expected " +
                        std::to_string(dim));
    }
    out.push_back(std::move(facet));
  }
  std::optional<Point> witness;
  if (auto it = doc.find("interior_point"); it != doc.end()) {
    const auto values = rational_vector(*it, "polytope.interior_point");
    if (static_cast<int>(values.size()) != dim) throw SchemaError("polytope: interior_point has wrong length");
    const auto d = to_doubles(values);
    witness = Eigen::Map<const Eigen::VectorXd>(d.data(), dim);
  }
  try {
    return PolyhedralSet(dim, std::move(out), witness);
  } catch (const DimensionMismatch& e) {
    throw SchemaError(std::string("polytope: ") + e.what());
  }
}

Json to_json(const PolyhedralSet& set) {
  Json facets = Json::array();
  for (const auto& f : set.facets()) {
    Json normal = Json::array();
    for (const auto& v : f.normal) normal.push_back(to_json(v));
    facets.push_back({{"normal", normal}, {"offset", to_json(f.offset)}});
  }
  return {{"dim", set.dim()}, {"facets", facets}, {"interior_point", to_json(set.interior_point())}};
}

PolytopeSpec spec_from_json(const Json& doc) {
  PolytopeSpec spec;
  spec.n = require_int(doc, "n", "spec");
  spec.m = require_int(doc, "m", "spec");
  spec.a = rational_from_json(require(doc, "a", "spec"), "spec.a");
  if (auto it = doc.find("b"); it != doc.end() && !it->is_null()) spec.b = rational_from_json(*it, "spec.b");
  try {
    check_spec(spec);
  } catch (const std::invalid_argument& e) {
    throw SchemaError(e.what());
  }
  return spec;
}

Json to_json(const PolytopeSpec& spec) {
  return {{"n", spec.n}, {"m", spec.m}, {"a", to_json(spec.a)}, {"b", spec.b ? to_json(*spec.b) : Json(nullptr)}};
}

std::vector<Constraint> constraints_from_json(const Json& doc) {
  if (!doc.is_array()) throw SchemaError("constraints: expected an array of strings like \"D=0\"");
  std::vector<Constraint> out;
  for (const auto& c : doc) {
    if (!c.is_string()) throw SchemaError("constraints: entries must be strings");
    out.push_back(parse_constraint(c.get<std::string>()));
  }
  return out;
}

RadialProfile profile_from_json(const Json& doc) {
  const int n = require_int(doc, "n", "profile");
  if (n < 1) throw SchemaError("profile: n must be >= 1");
  auto get = [&](const char* key) {
    auto it = doc.find(key);
    return it == doc.end() ? Rational(0) : rational_from_json(*it, std::string("profile.") + key);
  };
  bool exact = true;
  if (auto it = doc.find("exact"); it != doc.end() && it->is_boolean()) exact = it->get<bool>();
  try {
    return RadialProfile(n, get("A"), get("B"), get("C"), get("D"), exact);
  } catch (const std::invalid_argument& e) {
    throw SchemaError(std::string("profile: ") + e.what());
  }
}

Json to_json(const RadialProfile& p) {
  return {{"n", p.n}, {"A", to_json(p.A)}, {"B", to_json(p.B)}, {"C", to_json(p.C)}, {"D", to_json(p.D)},
          {"exact", p.exact}};
}

Json to_json(const Classification& c) {
  return {{"extremal", c.extremal},
          {"constant_scalar", c.constant_scalar},
          {"scalar_flat", c.scalar_flat},
          {"kahler_einstein", c.kahler_einstein},
          {"ricci_flat", c.ricci_flat},
          {"sc_affine", {{"slope", to_json(c.slope)}, {"intercept", to_json(c.intercept)}}}};
}

LinearChange change_from_json(const Json& doc) {
  if (!doc.is_array() || doc.empty()) throw SchemaError("matrix: expected a non-empty array of rows");
  DenseMatrix<Rational> m;
  for (const auto& row : doc) m.push_back(rational_vector(row, "matrix row"));
  for (const auto& row : m) {
    if (row.size() != m.size()) throw SchemaError("matrix: must be square");
  }
  return LinearChange(std::move(m));
}

Json to_json(const LinearChange& change) {
  Json rows = Json::array();
  for (const auto& row : change.matrix()) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(to_json(v));
    rows.push_back(r);
  }
  return rows;
}

Potential potential_from_json(const Json& doc) {
  const Json& kind_field = require(doc, "kind", "potential");
  if (!kind_field.is_string()) throw SchemaError("potential: 'kind' must be a string");
  const auto kind = kind_field.get<std::string>();
  if (kind == "canonical") return canonical_potential(polytope_from_json(require(doc, "polytope", "canonical")));
  if (kind == "radial") {
    if (doc.contains("spec")) {
      const PolytopeSpec spec = spec_from_json(doc["spec"]);
      const RadialProfile profile = doc.contains("profile")
                                        ? profile_from_json(doc["profile"])
                                        : solve_parameters(spec, constraints_from_json(require(doc, "constraints", "radial")));
      try {
        return build_potential(profile, spec);
      } catch (const SchemaError&) {
        throw;
      } catch (const DegenerateMetric&) {
        throw;
      } catch (const std::invalid_argument& e) {
        throw DegenerateMetric(e.what());
      }
    }
    const RadialProfile profile = profile_from_json(require(doc, "profile", "radial"));
    const PolyhedralSet base = doc.contains("polytope") ? polytope_from_json(doc["polytope"]) : orthant(profile.n);
    RadialRange range;
    if (auto it = doc.find("range"); it != doc.end()) {
      range.lo = require_double(*it, "lo", "radial.range");
      if (auto hi = it->find("hi"); hi != it->end() && !hi->is_null()) range.hi = require_double(*it, "hi", "radial.range");
    }
    return radial_potential(profile, base, range);
  }
  if (kind == "dim2") {
    const auto family = classify_dim2(require_double(doc, "k", "dim2"), require_double(doc, "b", "dim2"),
                                      require_double(doc, "c", "dim2"));
    if (family.case_tag == Dim2Case::invalid) throw DegenerateMetric("dim2: (k, b, c) is not in the catalogue");
    return potential_dim2(family);
  }
  if (kind == "sum") {
    const Json& terms = require(doc, "terms", "sum");
    if (!terms.is_array() || terms.empty()) throw SchemaError("sum: 'terms' must be a non-empty array");
    std::vector<Potential> parts;
    for (const auto& t : terms) parts.push_back(potential_from_json(t));
    return sum_potential(std::move(parts));
  }
  if (kind == "poly") {
    const int n = require_int(doc, "n", "poly");
    const Json& coeffs = require(doc, "coefficients", "poly");
    if (!coeffs.is_array()) throw SchemaError("poly: 'coefficients' must be an array");
    std::vector<double> c;
    for (const auto& v : coeffs) c.push_back(to_double(rational_from_json(v, "poly.coefficients")));
    return radial_polynomial_potential(n, Polynomial<double>(std::move(c)));
  }
  if (kind == "transform") {
    const Potential inner = potential_from_json(require(doc, "potential", "transform"));
    const LinearChange change = change_from_json(require(doc, "matrix", "transform"));
    if (change.dim() != inner.dim()) throw SchemaError("transform: matrix size differs from potential dimension");
    return transform_potential(inner, change);
  }
  throw SchemaError("potential: unknown kind '" + kind + "'");
}

Json to_json(const CurvatureReport& report) {
  Json samples = Json::array();
  for (const auto& s : report.samples) {
    samples.push_back({{"x", to_json(s.point)},
                       {"r", s.point.sum()},
                       {"sc_general", s.sc_general},
                       {"sc_closed", s.sc_closed ? Json(*s.sc_closed) : Json(nullptr)},
                       {"rel_err", s.rel_err ? Json(*s.rel_err) : Json(nullptr)}});
  }
  Json out = {{"samples", samples},
              {"max_rel_err", report.max_rel_err},
              {"max_abs_sc", report.max_abs_sc},
              {"affine_fit",
               {{"gradient", to_json(Point(report.affine_fit.gradient))},
                {"intercept", report.affine_fit.intercept},
                {"residual", report.affine_fit.residual}}},
              {"tolerance", report.tolerance},
              {"extremal", report.extremal},
              {"flags", report.flags ? to_json(*report.flags) : Json(nullptr)}};
  return out;
}

Json to_json(const ValidationReport& report) {
  Json approaches = Json::array();
  for (const auto& a : report.approaches) {
    Json points = Json::array();
    for (const auto& p : a.points) points.push_back(to_json(p));
    approaches.push_back({{"facets", a.facets},
                          {"face_point", to_json(a.face_point)},
                          {"points", points},
                          {"delta", {optional_double(a.delta[0]), optional_double(a.delta[1]), optional_double(a.delta[2])}},
                          {"limit", optional_double(a.limit)},
                          {"finite_positive", a.finite_positive},
                          {"bounded_variation", a.bounded_variation}});
  }
  Json failures = Json::array();
  for (const auto& p : report.pd_failure_points) failures.push_back(to_json(p));
  Json out = {{"verdict", report.pass ? "pass" : "fail"},
              {"summary", report.pass ? "samples consistent with the boundary conditions on symplectic potentials"
                                      : "samples violate the boundary conditions on symplectic potentials"},
              {"reasons", report.reasons},
              {"pd_samples", report.pd_samples},
              {"pd_failures", report.pd_failures},
              {"pd_failure_points", failures},
              {"delta_min", optional_double(report.delta_min)},
              {"delta_max", optional_double(report.delta_max)},
              {"q_positivity", report.q_positivity ? optional_double(*report.q_positivity) : Json(nullptr)},
              {"delta_route_gap", report.delta_route_gap ? optional_double(*report.delta_route_gap) : Json(nullptr)},
              {"unreached", report.unreached},
              {"approaches", approaches}};
  return out;
}

Json to_json(const Dim2Family& f) {
  Json out = {{"k", f.k}, {"b", f.b}, {"c", f.c}, {"case", std::string(to_string(f.case_tag))}};
  if (f.case_tag == Dim2Case::invalid) return out;
  const double x_a = f.from_catalogue(f.u_lo), x_b = f.from_catalogue(f.u_hi);
  const bool lo_closed = std::isfinite(f.u_lo) && f.case_tag != Dim2Case::cusp;
  const bool hi_closed = std::isfinite(f.u_hi);
  const double lo = f.sign > 0 ? x_a : x_b, hi = f.sign > 0 ? x_b : x_a;
  out["domain"] = {{"lo", optional_double(lo)},
                   {"hi", optional_double(hi)},
                   {"lo_closed", f.sign > 0 ? lo_closed : hi_closed},
                   {"hi_closed", f.sign > 0 ? hi_closed : lo_closed}};
  out["normalization"] = {{"u", "sign * (x - shift)"},
                          {"shift", f.shift},
                          {"sign", f.sign},
                          {"b", f.normalized_b},
                          {"c", f.normalized_c}};
  const ConeData cone = cone_data(f);
  out["angle"] = cone.angle ? Json(*cone.angle) : Json(nullptr);
  out["angle_over_pi"] = cone.angle ? Json(*cone.angle / std::numbers::pi) : Json(nullptr);
  out["smooth"] = cone.smooth;
  out["orbifold_order"] = cone.orbifold_order ? Json(*cone.orbifold_order) : Json(nullptr);
  out["gauss_curvature"] = f.k;
  return out;
}

}  // namespace toric
