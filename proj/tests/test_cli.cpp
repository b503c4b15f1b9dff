#include <doctest.h>

#include "toric/cli.hpp"
#include "toric/errors.hpp"

using namespace toric;

namespace {

RunResult run_inline(Command c, const char* input) {
  JobSpec job;
  job.command = c;
  job.input = load_json(input);
  return run(job);
}

const char* kBrokenRadial = R"({
  "kind": "radial",
  "profile": {"n": 2, "A": "2", "B": "2/13", "C": "1/13", "D": "2/13"},
  "polytope": {"dim": 2, "facets": [
    {"normal": [1, 0], "offset": 0}, {"normal": [0, 1], "offset": 0},
    {"normal": [1, 1], "offset": -1}, {"normal": [-1, -1], "offset": 2}]},
  "range": {"lo": 1, "hi": 2}
})";

}  // namespace

TEST_CASE("solve: Ricci-flat example n = 2, m = 1 with C = D = 0") {
  const auto r = run_inline(Command::solve, R"({"spec": {"n": 2, "m": 1, "a": 1}, "constraints": ["C=0", "D=0"]})");
  REQUIRE(r.exit_code == exit_code::ok);
  const auto& p = r.report.at("profile");
  CHECK(p.at("A") == "0");
  CHECK(p.at("B") == "1");
  CHECK(p.at("C") == "0");
  CHECK(p.at("D") == "0");
  CHECK(r.report.at("schema") == 1);
  CHECK(r.report.at("classification").at("scalar_flat") == true);
  CHECK(r.report.at("q_positivity").get<double>() > 0);
}

TEST_CASE("solve: bounded case and decimals") {
  const auto r = run_inline(Command::solve, R"({"spec": {"n": 2, "m": 1, "a": "1", "b": 2.0}})");
  REQUIRE(r.exit_code == exit_code::ok);
  CHECK(r.report.at("profile").at("A") == "8/13");
  CHECK(r.report.at("profile").at("D") == "2/13");
  const auto f = run_inline(Command::solve, R"({"spec": {"n": 2, "m": 1, "a": 0.5, "b": 2}, "method": "float"})");
  REQUIRE(f.exit_code == exit_code::ok);
  CHECK(f.report.at("spec").at("a") == "1/2");
  CHECK(f.report.at("method") == "float");
  CHECK(f.report.at("profile").at("exact") == false);
}

TEST_CASE("dim2: football") {
  const auto r = run_inline(Command::dim2, R"({"k": 1, "b": 0, "c": 1, "x": 0})");
  REQUIRE(r.exit_code == exit_code::ok);
  CHECK(r.report.at("case") == "football");
  CHECK(r.report.at("smooth") == true);
  CHECK(r.report.at("sample").at("scalar_curvature_numeric").get<double>() == doctest::Approx(2.0).epsilon(1e-5));
  CHECK(run_inline(Command::dim2, R"({"k": 1, "b": 0, "c": -1})").report.at("case") == "invalid");
}

TEST_CASE("curvature: flat potential and CSV") {
  JobSpec job;
  job.command = Command::curvature;
  job.input = load_json(R"({"kind": "canonical", "polytope": {"dim": 2, "facets": [
    {"normal": [1, 0], "offset": 0}, {"normal": [0, 1], "offset": 0}]}})");
  job.tolerances.samples = 12;
  const auto r = run(job);
  REQUIRE(r.exit_code == exit_code::ok);
  CHECK(r.report.at("report").at("extremal") == true);
  CHECK(r.report.at("report").at("max_abs_sc").get<double>() < 1e-6);
  CHECK(r.csv.rfind("x_1,x_2,r,Sc_general,Sc_closed,rel_err\n", 0) == 0);
}

TEST_CASE("validate: pass and fail verdicts") {
  const auto ok = run_inline(Command::validate, R"({"spec": {"n": 2, "m": 1, "a": 1, "b": 2}, "constraints": []})");
  CHECK(ok.exit_code == exit_code::ok);
  CHECK(ok.report.at("report").at("verdict") == "pass");
  const auto bad = run_inline(Command::validate, kBrokenRadial);
  CHECK(bad.exit_code == exit_code::validation);
  CHECK(bad.report.at("report").at("verdict") == "fail");
  CHECK(bad.report.at("report").at("q_positivity").get<double>() < 0);
}

TEST_CASE("exit codes for schema and math errors") {
  CHECK(run_inline(Command::solve, R"({"constraints": []})").exit_code == exit_code::schema);
  CHECK(run_inline(Command::solve, R"({"spec": {"n": 2, "m": 1, "a": "x"}})").exit_code == exit_code::schema);
  CHECK(run_inline(Command::solve, R"({"spec": {"n": 2, "m": 1, "a": 1}, "constraints": ["E=0", "D=0"]})")
            .exit_code == exit_code::schema);
  CHECK(run_inline(Command::curvature, R"({"kind": "blob"})").exit_code == exit_code::schema);
  const auto mismatch = run_inline(Command::transform, R"({"matrix": [[1, 0], [0, 1]],
    "polytope": {"dim": 3, "facets": [{"normal": [1, 0, 0], "offset": 0}]}})");
  CHECK(mismatch.exit_code == exit_code::schema);

  const auto singular = run_inline(Command::transform, R"({"matrix": [[1, 2], [2, 4]],
    "polytope": {"dim": 2, "facets": [{"normal": [1, 0], "offset": 0}]}})");
  CHECK(singular.exit_code == exit_code::math);
  CHECK(singular.report.at("error").at("kind") == "singular_system");
  CHECK(run_inline(Command::curvature, R"({"kind": "dim2", "k": 1, "b": 0, "c": -1})").exit_code ==
        exit_code::math);

  JobSpec bad;
  bad.command = Command::solve;
  bad.input = Json::array();
  CHECK(run(bad).exit_code == exit_code::schema);
  CHECK_THROWS_AS(load_json("{not json"), SchemaError);
  CHECK_THROWS_AS(load_json("/nonexistent/input.json"), SchemaError);
  CHECK_THROWS_AS(parse_command("frobnicate"), SchemaError);
}

TEST_CASE("reports are byte-identical across runs") {
  const char* input = R"({"spec": {"n": 2, "m": 2, "a": 1}, "constraints": ["B=0", "D=0"]})";
  JobSpec job;
  job.command = Command::curvature;
  job.input = load_json(input);
  job.tolerances.samples = 10;
  const auto a = run(job);
  const auto b = run(job);
  REQUIRE(a.exit_code == exit_code::ok);
  CHECK(a.report.dump(2) == b.report.dump(2));
  CHECK(a.csv == b.csv);
  job.seed = 7;
  CHECK(run(job).csv != a.csv);
}

TEST_CASE("JSON round trips") {
  const auto solved = run_inline(Command::solve, R"({"spec": {"n": 3, "m": 2, "a": "3/2", "b": "7/2"}})");
  REQUIRE(solved.exit_code == exit_code::ok);
  const auto profile = profile_from_json(solved.report.at("profile"));
  CHECK(to_json(profile) == solved.report.at("profile"));
  const auto spec = spec_from_json(solved.report.at("spec"));
  CHECK(to_json(spec) == solved.report.at("spec"));

  const auto set = polytope(spec);
  CHECK(polytope_from_json(to_json(set)).facets() == set.facets());

  const LinearChange t(DenseMatrix<Rational>{{Rational(2), Rational(-1, 3)}, {Rational(0), Rational(1)}});
  CHECK(change_from_json(to_json(t)).matrix() == t.matrix());
  CHECK(rational_from_json(to_json(Rational(-7, 3)), "q") == Rational(-7, 3));
}

TEST_CASE("transform command on the Hirzebruch example") {
  const auto r = run_inline(Command::transform, R"({"matrix": [[2, -1], [0, 1]],
    "potential": {"kind": "radial", "spec": {"n": 2, "m": 2, "a": 1, "b": 2}, "constraints": []}})");
  REQUIRE(r.exit_code == exit_code::ok);
  CHECK(r.report.at("determinant") == "2");
  CHECK(r.report.at("hessian_congruence_max_rel_err").get<double>() < 1e-10);
  CHECK(r.report.at("determinant_max_rel_err").get<double>() < 1e-10);
}

TEST_CASE("command names") {
  for (auto c : {Command::solve, Command::curvature, Command::validate, Command::dim2, Command::transform,
                 Command::demo}) {
    CHECK(parse_command(to_string(c)) == c);
  }
}
