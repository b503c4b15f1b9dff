#include "toric/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include "toric/errors.hpp"

namespace toric {

namespace {

struct Context {
  const JobSpec& job;
  std::string csv;

  CurvatureOptions curvature_options() const {
    CurvatureOptions o;
    o.sampling.seed = job.seed;
    if (job.tolerances.step_factor) o.step_factor = *job.tolerances.step_factor;
    if (job.tolerances.margin_fraction) o.sampling.margin_fraction = *job.tolerances.margin_fraction;
    return o;
  }
  ValidationOptions validation_options() const {
    ValidationOptions o;
    o.sampling.seed = job.seed;
    if (job.tolerances.margin_fraction) o.sampling.margin_fraction = *job.tolerances.margin_fraction;
    return o;
  }
  int int_field(const char* key, std::optional<int> override_value, int fallback) const {
    if (override_value) return *override_value;
    if (auto it = job.input.find(key); it != job.input.end()) {
      if (!it->is_number_integer()) throw SchemaError(std::string("'") + key + "' must be an integer");
      return it->get<int>();
    }
    return fallback;
  }
};

Json header(Command c) { return {{"schema", kSchemaVersion}, {"command", std::string(to_string(c))}}; }

// Potential named by a curvature/validate input: a potential document, a
// {"potential": ...} wrapper, or a solve-style {"spec", "constraints"} document.
Potential potential_from_input(const Json& in) {
  if (in.contains("kind")) return potential_from_json(in);
  if (in.contains("potential")) return potential_from_json(in["potential"]);
  if (in.contains("spec")) {
    Json doc = in;
    doc["kind"] = "radial";
    return potential_from_json(doc);
  }
  throw SchemaError("input must be a potential document, {\"potential\": ...} or {\"spec\": ..., \"constraints\": ...}");
}

std::vector<Constraint> constraints_of(const Json& in) {
  return in.contains("constraints") ? constraints_from_json(in["constraints"]) : std::vector<Constraint>{};
}

Json solve_entry(const PolytopeSpec& spec, const std::vector<Constraint>& constraints, bool exact) {
  const RadialProfile profile = exact ? solve_parameters(spec, constraints) : solve_parameters_float(spec, constraints);
  Json cons = Json::array();
  for (const auto& c : constraints) cons.push_back(to_string(c));
  return {{"spec", to_json(spec)},
          {"constraints", cons},
          {"method", exact ? "exact" : "float"},
          {"profile", to_json(profile)},
          {"classification", to_json(classify(profile))},
          {"q_positivity", q_positivity(profile, spec, 4000)}};
}

Json run_solve(Context& ctx) {
  const Json& in = ctx.job.input;
  if (!in.contains("spec")) throw SchemaError("solve: missing field 'spec'");
  const PolytopeSpec spec = spec_from_json(in["spec"]);
  bool exact = true;
  if (auto it = in.find("method"); it != in.end()) {
    if (*it == "float") {
      exact = false;
    } else if (*it != "exact") {
      throw SchemaError("solve: 'method' must be \"exact\" or \"float\"");
    }
  }
  Json out = header(Command::solve);
  out.update(solve_entry(spec, constraints_of(in), exact));
  return out;
}

Json run_curvature(Context& ctx) {
  const Potential s = potential_from_input(ctx.job.input);
  const int samples = ctx.int_field("samples", ctx.job.tolerances.samples, 30);
  const CurvatureReport report = verify_extremal(s, sampling_region(s), samples, ctx.curvature_options());
  ctx.csv = to_csv(report);
  Json out = header(Command::curvature);
  out["dim"] = s.dim();
  out["report"] = to_json(report);
  return out;
}

Json run_validate(Context& ctx, int& code) {
  const Potential s = potential_from_input(ctx.job.input);
  const int mesh = ctx.int_field("mesh", ctx.job.tolerances.mesh, 8);
  const ValidationReport report = validate_potential(s, s.domain(), mesh, ctx.validation_options());
  if (!report.pass) code = exit_code::validation;
  Json out = header(Command::validate);
  out["dim"] = s.dim();
  out["report"] = to_json(report);
  return out;
}

Json dim2_entry(const Dim2Family& family, std::optional<double> x, const CurvatureOptions& options) {
  Json out = to_json(family);
  if (family.case_tag == Dim2Case::invalid) return out;
  const PolyhedralSet domain = dim2_domain(family);
  const double at = x ? *x : domain.interior_point()(0);
  const GaussCurvatureCheck check = gauss_curvature_check(family, at, options);
  const Eigen::Matrix2d g = metric_blocks(family, at);
  out["sample"] = {{"x", at},
                   {"s_second", dim2_closed_form(family, at).second},
                   {"metric_blocks", {{g(0, 0), 0.0}, {0.0, g(1, 1)}}},
                   {"scalar_curvature_analytic", check.analytic},
                   {"scalar_curvature_numeric", check.numeric},
                   {"gauss_curvature_numeric", check.gauss()}};
  return out;
}

Json run_dim2(Context& ctx) {
  const Json& in = ctx.job.input;
  auto number = [&](const char* key) {
    if (!in.contains(key)) throw SchemaError(std::string("dim2: missing field '") + key + "'");
    return to_double(rational_from_json(in[key], key));
  };
  const Dim2Family family = classify_dim2(number("k"), number("b"), number("c"));
  std::optional<double> x;
  if (in.contains("x") && !in["x"].is_null()) x = number("x");
  Json out = header(Command::dim2);
  out.update(dim2_entry(family, x, ctx.curvature_options()));
  return out;
}

Json run_transform(Context& ctx) {
  const Json& in = ctx.job.input;
  if (!in.contains("matrix")) throw SchemaError("transform: missing field 'matrix'");
  const LinearChange change = change_from_json(in["matrix"]);
  Json out = header(Command::transform);
  out["matrix"] = to_json(change);
  out["determinant"] = to_json(change.determinant());
  if (in.contains("polytope")) {
    const PolyhedralSet set = polytope_from_json(in["polytope"]);
    if (set.dim() != change.dim()) throw SchemaError("transform: matrix size differs from polytope dimension");
    out["polytope"] = to_json(transform(set, change));
  }
  if (in.contains("potential")) {
    const Potential inner = potential_from_json(in["potential"]);
    if (inner.dim() != change.dim()) throw SchemaError("transform: matrix size differs from potential dimension");
    const Potential pulled = transform_potential(inner, change);
    const int samples = ctx.int_field("samples", ctx.job.tolerances.samples, 10);
    SamplingOptions sopt;
    sopt.seed = ctx.job.seed;
    const auto points = interior_samples(sampling_region(pulled), static_cast<std::size_t>(samples), sopt);
    const Eigen::MatrixXd& t = change.matrix_d();
    double congruence = 0.0, det_gap = 0.0;
    for (const auto& x : points) {
      const Eigen::MatrixXd s = pulled.hessian(x);
      const Eigen::MatrixXd inner_s = inner.hessian(change.apply(x));
      const Eigen::MatrixXd expected = t.transpose() * inner_s * t;
      congruence = std::max(congruence, (s - expected).cwiseAbs().maxCoeff() / expected.cwiseAbs().maxCoeff());
      const double d = s.determinant();
      const double want = std::pow(to_double(change.determinant()), 2) * inner_s.determinant();
      det_gap = std::max(det_gap, std::abs(d - want) / std::abs(want));
    }
    out["domain"] = to_json(pulled.domain());
    out["hessian_congruence_max_rel_err"] = congruence;
    out["determinant_max_rel_err"] = det_gap;
    out["samples"] = samples;
  }
  if (!in.contains("polytope") && !in.contains("potential")) {
    throw SchemaError("transform: needs 'polytope' and/or 'potential'");
  }
  return out;
}

Json run_demo(Context& ctx) {
  struct Case {
    const char* name;
    PolytopeSpec spec;
    std::vector<Constraint> constraints;
  };
  const std::vector<Case> cases = {
      {"ricci_flat", {2, 2, 1, std::nullopt}, presets::kahler_einstein()},
      {"ricci_flat", {3, 3, 2, std::nullopt}, presets::kahler_einstein()},
      {"scalar_flat", {2, 1, 1, std::nullopt}, presets::scalar_flat()},
      {"scalar_flat", {3, 2, 1, std::nullopt}, presets::scalar_flat()},
      {"kahler_einstein", {2, 3, 1, std::nullopt}, presets::kahler_einstein()},
      {"constant_scalar", {2, 1, 1, std::nullopt}, presets::constant_scalar()},
      {"bounded", {2, 1, 1, Rational(2)}, {}},
  };
  CurvatureOptions copt = ctx.curvature_options();
  Json table = Json::array();
  for (const auto& c : cases) {
    Json entry = {{"name", c.name}};
    entry.update(solve_entry(c.spec, c.constraints, true));
    const RadialProfile profile = solve_parameters(c.spec, c.constraints);
    const CurvatureReport report = cross_validate(profile, c.spec, 12, copt);
    entry["curvature"] = {{"max_rel_err", report.max_rel_err},
                          {"affine_residual", report.affine_fit.residual},
                          {"extremal", report.extremal}};
    table.push_back(entry);
  }
  Json special = Json::array();
  const std::vector<std::pair<const char*, RadialProfile>> profiles = {
      {"fubini_study", RadialProfile(2, 0, 0, 1, 0)},
      {"bergman", RadialProfile(2, 0, 0, -1, 0)},
  };
  for (const auto& [name, profile] : profiles) {
    special.push_back({{"name", name}, {"profile", to_json(profile)}, {"classification", to_json(classify(profile))}});
  }
  const std::vector<std::array<double, 3>> catalogue_params = {
      {0, 0, 4}, {0, 1, 0}, {0, 0.5, 0}, {0, -1, 2}, {1, 0, 1}, {2, 0, 1}, {-1, 0, 1}, {-1, 0, -1}, {-1, 0, 0},
      {-1, 1, 0}, {1, 0, -1}};
  Json catalogue = Json::array();
  for (const auto& p : catalogue_params) {
    catalogue.push_back(dim2_entry(classify_dim2(p[0], p[1], p[2]), std::nullopt, copt));
  }
  Json out = header(Command::demo);
  out["calabi_family"] = table;
  out["closed_form_profiles"] = special;
  out["surface_catalogue"] = catalogue;
  return out;
}

}  // namespace

std::string_view to_string(Command c) {
  switch (c) {
    case Command::solve: return "solve";
    case Command::curvature: return "curvature";
    case Command::validate: return "validate";
    case Command::dim2: return "dim2";
    case Command::transform: return "transform";
    case Command::demo: return "demo";
  }
  return "demo";
}

Command parse_command(std::string_view name) {
  for (auto c : {Command::solve, Command::curvature, Command::validate, Command::dim2, Command::transform,
                 Command::demo}) {
    if (to_string(c) == name) return c;
  }
  throw SchemaError("unknown command '" + std::string(name) + "'");
}

RunResult run(const JobSpec& job) {
  RunResult result;
  Context ctx{job, {}};
  auto fail = [&](int code, const char* kind, const std::exception& e) {
    result.exit_code = code;
    result.report = header(job.command);
    result.report["error"] = {{"kind", kind}, {"message", e.what()}};
  };
  try {
    if (!job.input.is_object()) throw SchemaError("input must be a JSON object");
    int code = exit_code::ok;
    switch (job.command) {
      case Command::solve: result.report = run_solve(ctx); break;
      case Command::curvature: result.report = run_curvature(ctx); break;
      case Command::validate: result.report = run_validate(ctx, code); break;
      case Command::dim2: result.report = run_dim2(ctx); break;
      case Command::transform: result.report = run_transform(ctx); break;
      case Command::demo: result.report = run_demo(ctx); break;
    }
    result.exit_code = code;
    result.csv = std::move(ctx.csv);
  } catch (const SchemaError& e) {
    fail(exit_code::schema, "schema", e);
  } catch (const DimensionMismatch& e) {
    fail(exit_code::schema, "dimension_mismatch", e);
  } catch (const Json::exception& e) {
    fail(exit_code::schema, "schema", e);
  } catch (const SingularSystem& e) {
    fail(exit_code::math, "singular_system", e);
  } catch (const DegenerateMetric& e) {
    fail(exit_code::math, "degenerate_metric", e);
  } catch (const NotInterior& e) {
    fail(exit_code::math, "not_interior", e);
  } catch (const std::exception& e) {
    fail(exit_code::math, "math", e);
  }
  return result;
}

Json load_json(std::string_view source) {
  std::string text;
  const auto first = source.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && (source[first] == '{' || source[first] == '[')) {
    text = std::string(source);
  } else {
    std::ifstream in{std::string(source)};
    if (!in) throw SchemaError("cannot read input file '" + std::string(source) + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SchemaError(std::string("invalid JSON: ") + e.what());
  }
}

int run_and_write(const JobSpec& job) {
  const RunResult result = run(job);
  const std::string text = result.report.dump(2) + "\n";
  if (job.output) {
    std::ofstream out(*job.output);
    out << text;
  } else {
    std::cout << text;
  }
  if (job.csv && !result.csv.empty()) {
    std::ofstream out(*job.csv);
    out << result.csv;
  }
  if (result.exit_code != exit_code::ok && result.report.contains("error")) {
    std::cerr << "error: " << result.report["error"]["message"].get<std::string>() << "\n";
  }
  return result.exit_code;
}

}  // namespace toric
