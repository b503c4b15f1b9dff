// toric-kahler: command-line front end.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "toric/cli.hpp"
#include "toric/errors.hpp"

using toric::Json;

int main(int argc, char** argv) {
  CLI::App app{"Toric Kahler metrics from symplectic potentials"};
  app.require_subcommand(1);
  app.fallthrough();

  std::optional<std::string> output, csv;
  std::uint64_t seed = 20240607;
  std::optional<double> step_factor, margin_fraction;
  std::optional<int> samples, mesh;
  app.add_option("-o,--output", output, "Write the JSON report here instead of stdout");
  app.add_option("--csv", csv, "Write per-sample curvature rows here");
  app.add_option("--seed", seed, "Seed for sample placement");
  app.add_option("--step-factor", step_factor, "Finite-difference step as a fraction of the boundary distance");
  app.add_option("--margin-fraction", margin_fraction, "Sample margin as a fraction of the sampling box diagonal");
  app.add_option("--samples", samples, "Number of curvature samples");
  app.add_option("--mesh", mesh, "Validation mesh density (>= 4)");

  std::string n, m, a, b;
  std::vector<std::string> constraints;
  std::string preset, solve_input;
  bool use_float = false;
  auto* solve = app.add_subcommand("solve", "Solve for Calabi's parameters (A, B, C, D)");
  solve->add_option("--n", n, "Dimension n");
  solve->add_option("--m", m, "Twisting m");
  solve->add_option("--a", a, "Inner radius a (rational)");
  solve->add_option("--b", b, "Outer radius b (omit for the unbounded set)");
  solve->add_option("--constraint", constraints, "Constraint such as D=0 or C=-1 (repeatable)");
  solve->add_option("--preset", preset, "scalar-flat, kahler-einstein or constant-scalar")
      ->check(CLI::IsMember({"scalar-flat", "kahler-einstein", "constant-scalar"}));
  solve->add_flag("--float", use_float, "Use the floating-point solver");
  solve->add_option("--input", solve_input, "JSON document {\"spec\": ..., \"constraints\": [...]} (path or inline)");

  std::string curvature_spec;
  auto* curvature = app.add_subcommand("curvature", "Sample the scalar curvature of a potential");
  curvature->add_option("--spec", curvature_spec, "Potential document (path or inline JSON)")->required();

  std::string validate_spec;
  auto* validate = app.add_subcommand("validate", "Check positivity and boundary behaviour of a potential");
  validate->add_option("--spec", validate_spec, "Potential document (path or inline JSON)")->required();

  std::string k, bb, c, x;
  auto* dim2 = app.add_subcommand("dim2", "Classify s'' = -1/(k x^2 - 2 b x - c)");
  dim2->add_option("--k", k, "Gauss curvature k")->required();
  dim2->add_option("--b", bb, "Linear coefficient b")->required();
  dim2->add_option("--c", c, "Constant c")->required();
  dim2->add_option("--x", x, "Point for the curvature check (defaults to an interior point)");

  std::string transform_input, matrix;
  auto* transform = app.add_subcommand("transform", "Apply a linear change of coordinates");
  transform->add_option("--input", transform_input, "JSON with 'polytope' and/or 'potential' (path or inline)")
      ->required();
  transform->add_option("--matrix", matrix, "Matrix as inline JSON, overriding the input's 'matrix'");

  app.add_subcommand("demo", "Parameter table of the Calabi family and the surface catalogue");

  CLI11_PARSE(app, argc, argv);

  toric::JobSpec job;
  job.output = output;
  job.csv = csv;
  job.seed = seed;
  job.tolerances = {step_factor, margin_fraction, samples, mesh};

  try {
    if (solve->parsed()) {
      job.command = toric::Command::solve;
      if (!solve_input.empty()) {
        job.input = toric::load_json(solve_input);
      } else {
        if (n.empty() || m.empty() || a.empty()) throw toric::SchemaError("solve: --n, --m and --a are required");
        Json spec = {{"n", std::stoi(n)}, {"m", std::stoi(m)}, {"a", Json(a)}};
        spec["b"] = b.empty() ? Json(nullptr) : Json(b);
        Json cons = Json::array();
        if (preset == "scalar-flat") cons = {"C=0", "D=0"};
        if (preset == "kahler-einstein") cons = {"B=0", "D=0"};
        if (preset == "constant-scalar") cons = {"D=0", "C=-1"};
        for (const auto& s : constraints) cons.push_back(s);
        job.input = {{"spec", spec}, {"constraints", cons}};
      }
      if (use_float) job.input["method"] = "float";
    } else if (curvature->parsed()) {
      job.command = toric::Command::curvature;
      job.input = toric::load_json(curvature_spec);
    } else if (validate->parsed()) {
      job.command = toric::Command::validate;
      job.input = toric::load_json(validate_spec);
    } else if (dim2->parsed()) {
      job.command = toric::Command::dim2;
      job.input = {{"k", Json(k)}, {"b", Json(bb)}, {"c", Json(c)}};
      if (!x.empty()) job.input["x"] = Json(x);
    } else if (transform->parsed()) {
      job.command = toric::Command::transform;
      job.input = toric::load_json(transform_input);
      if (!matrix.empty()) job.input["matrix"] = toric::load_json(matrix);
    } else {
      job.command = toric::Command::demo;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return toric::exit_code::schema;
  }
  return toric::run_and_write(job);
}
