#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "toric/calabi.hpp"
#include "toric/errors.hpp"

using namespace toric;

namespace {

// Q(r) evaluated term by term in exact arithmetic, independently of Polynomial.
Rational q_exact(const RadialProfile& p, const Rational& r) {
  Rational rn = 1;
  for (int i = 0; i < p.n; ++i) rn *= r;
  return rn - p.A - p.B * r - p.C * rn * r - p.D * rn * r * r;
}

Rational dq_exact(const RadialProfile& p, const Rational& r) {
  Rational rn1 = 1;
  for (int i = 0; i < p.n - 1; ++i) rn1 *= r;
  return Rational(p.n) * rn1 - p.B - Rational(p.n + 1) * p.C * rn1 * r - Rational(p.n + 2) * p.D * rn1 * r * r;
}

}  // namespace

TEST_CASE("h'' examples") {
  CHECK(h_second(RadialProfile(3, 0, 0, 0, 0), 1.7) == 0.0);
  const RadialProfile fs(2, 0, 0, 1, 0);
  CHECK(h_second(fs, 0.5) == doctest::Approx(2.0));
  CHECK(h_second(fs, Rational(1, 2)) == Rational(2));
  // Ricci-flat n = 2, A = 1 at r = 2: -1/2 + 2/3.
  const Rational direct = Rational(-1, 2) + Rational(2) / (Rational(4) - Rational(1));
  CHECK(direct == Rational(1, 6));
  CHECK(h_second(RadialProfile(2, 1, 0, 0, 0), Rational(2)) == direct);
  CHECK_THROWS_AS(h_second(RadialProfile(2, 1, 0, 0, 0), 1.0), DegenerateMetric);
  CHECK_THROWS_AS(h_second(fs, -1.0), std::invalid_argument);
  CHECK(one_plus_r_h_second(RadialProfile(2, 1, 0, 0, 0), 2.0) == doctest::Approx(4.0 / 3.0));
  CHECK(f_value(fs, 0.5) == doctest::Approx(1.0));
}

TEST_CASE("scalar curvature closed form and long form") {
  CHECK(scalar_curvature_radial(RadialProfile(2, 1, 3, 0, 0), 1.7) == 0.0);
  for (int n = 1; n <= 4; ++n) {
    CHECK(scalar_curvature_radial(RadialProfile(n, -2, 4, -1, 0), 2.5) == doctest::Approx(-2.0 * n * (n + 1)));
  }
  CHECK(scalar_curvature_radial(RadialProfile(2, 0, 0, 1, 0), 0.3) == doctest::Approx(12.0));

  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-2, 2);
  std::uniform_real_distribution<double> rr(0.1, 3);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 1 + trial % 4;
    const RadialProfile p(n, rational_from_double(u(rng)), rational_from_double(u(rng)),
                          rational_from_double(u(rng)), rational_from_double(u(rng)));
    const RadialScalarCurvature sc(p);
    for (int k = 0; k < 50; ++k) {
      const double r = rr(rng);
      if (p.q(r) == 0.0) continue;
      CHECK(std::abs(sc.long_form(r) - sc.closed_form(r)) < 1e-9 * (1 + std::abs(sc.closed_form(r))));
    }
    // Exactly, at a rational point.
    const Rational r0(3, 7);
    const Rational closed = Rational(2 * (n + 1)) * (Rational(n + 2) * p.D * r0 + Rational(n) * p.C);
    if (!is_zero(q_exact(p, r0))) CHECK(sc.long_form(r0) == closed);
  }
}

TEST_CASE("published special cases of the parameter system") {
  SUBCASE("scalar-flat") {
    const auto p = solve_parameters({2, 1, Rational(1), std::nullopt}, presets::scalar_flat());
    CHECK(p.A == 0);
    CHECK(p.B == 1);
    CHECK(p.C == 0);
    CHECK(p.D == 0);
  }
  SUBCASE("Kahler-Einstein") {
    const auto p = solve_parameters({2, 3, Rational(1), std::nullopt}, presets::kahler_einstein());
    CHECK(p.A == Rational(4, 3));
    CHECK(p.C == Rational(-1, 3));
  }
  SUBCASE("Ricci-flat") {
    const auto p = solve_parameters({3, 3, Rational(2), std::nullopt}, presets::kahler_einstein());
    CHECK(p.A == 8);
    CHECK(p.B == 0);
    CHECK(p.C == 0);
    CHECK(p.D == 0);
  }
  SUBCASE("constant scalar curvature at a = 1") {
    const auto p = solve_parameters({2, 1, Rational(1), std::nullopt}, presets::constant_scalar());
    CHECK(p.A == -2);
    CHECK(p.B == 4);
    CHECK(p.C == -1);
  }
}

TEST_CASE("general-a formulas for the unbounded families") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + trial % 4;
    const int m = 1 + trial % 6;
    const Rational a = oracle::random_positive_rational(rng, 10);
    const Rational an = pow(a, static_cast<unsigned>(n));
    const Rational an1 = pow(a, static_cast<unsigned>(n - 1));
    const PolytopeSpec spec{n, m, a, std::nullopt};
    CAPTURE(n);
    CAPTURE(m);
    CAPTURE(to_string(a));

    const auto sf = solve_parameters(spec, presets::scalar_flat());
    CHECK(sf.A == an * (1 - n + m));
    CHECK(sf.B == Rational(n - m) * an1);

    const auto ke = solve_parameters(spec, presets::kahler_einstein());
    CHECK(ke.A == Rational(m + 1) * an / (n + 1));
    CHECK(ke.C == Rational(n - m) / (Rational(n + 1) * a));

    // The residue condition at a forces A = (m - n + 1 - n a) a^n and
    // B = (n - m + (n + 1) a) a^{n-1} for D = 0, C = -1.
    const auto cs = solve_parameters(spec, presets::constant_scalar());
    CHECK(cs.A == (Rational(m - n + 1) - Rational(n) * a) * an);
    CHECK(cs.B == (Rational(n - m) + Rational(n + 1) * a) * an1);

    for (const auto* p : {&sf, &ke, &cs}) {
      CHECK(q_exact(*p, a) == 0);
      CHECK(dq_exact(*p, a) == Rational(m) * an1);
    }
  }
}

TEST_CASE("the printed constant-scalar formula only has the right residue at a = 1") {
  // A = (m - n + (1 - n) a) a^n, B = (n - m + 1 + n a) a^{n-1} vanish at a but
  // give Q'(a) = (m - 1 + a) a^{n-1}.
  for (int n = 2; n <= 4; ++n) {
    for (int m = 1; m <= 4; ++m) {
      for (const Rational a : {Rational(1), Rational(1, 2), Rational(3)}) {
        const Rational an = pow(a, static_cast<unsigned>(n));
        const Rational an1 = pow(a, static_cast<unsigned>(n - 1));
        const RadialProfile printed(n, (Rational(m - n) + Rational(1 - n) * a) * an,
                                    (Rational(n - m + 1) + Rational(n) * a) * an1, -1, 0);
        CHECK(q_exact(printed, a) == 0);
        CHECK(dq_exact(printed, a) == (Rational(m - 1) + a) * an1);
        const auto solved = solve_parameters({n, m, a, std::nullopt}, presets::constant_scalar());
        CHECK((solved == printed) == (a == 1));
      }
    }
  }
}

TEST_CASE("bounded solve: known values and residues at both ends") {
  const PolytopeSpec spec{2, 1, Rational(1), Rational(2)};
  const auto p = solve_parameters(spec, {});
  CHECK(p.A == Rational(8, 13));
  CHECK(p.B == Rational(2, 13));
  CHECK(p.C == Rational(1, 13));
  CHECK(p.D == Rational(2, 13));

  for (int m = 1; m <= 4; ++m) {
    for (int n = 2; n <= 4; ++n) {
      const PolytopeSpec s{n, m, Rational(1, 2), Rational(5, 2)};
      const auto prof = solve_parameters(s, {});
      CHECK(q_exact(prof, *s.b) == 0);
      const double a = 0.5, b = 2.5;
      auto g = [&](double r) { return std::pow(r, n - 1) / prof.q(r); };
      const double at_a = oracle::extrapolate_to_zero([&](double t) { return t * g(a + t); }, 1e-2);
      const double at_b = oracle::extrapolate_to_zero([&](double t) { return t * g(b - t); }, 1e-2);
      CHECK(at_a == doctest::Approx(1.0 / m).epsilon(1e-6));
      CHECK(at_b == doctest::Approx(1.0 / m).epsilon(1e-6));
      // Independent exact residue through polynomial division in the library.
      CHECK(residue_at(prof, s.a) == Rational(1, m));
      CHECK(residue_at(prof, *s.b) == Rational(-1, m));
    }
  }
}

TEST_CASE("float solve agrees with the exact solve") {
  const PolytopeSpec spec{3, 2, Rational(3, 4), Rational(9, 4)};
  const auto exact = solve_parameters(spec, {});
  const auto fl = solve_parameters_float(spec, {});
  CHECK_FALSE(fl.exact);
  for (auto [x, y] : {std::pair{exact.A, fl.A}, {exact.B, fl.B}, {exact.C, fl.C}, {exact.D, fl.D}}) {
    CHECK(to_double(y) == doctest::Approx(to_double(x)).epsilon(1e-12));
  }
}

TEST_CASE("solver errors") {
  CHECK_THROWS_AS(solve_parameters({2, 1, Rational(1), std::nullopt}, {{Parameter::D, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(solve_parameters({2, 1, Rational(1), Rational(2)}, {{Parameter::D, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(solve_parameters({2, 1, Rational(1), std::nullopt}, {{Parameter::D, 0}, {Parameter::D, 1}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(solve_parameters({2, 1, Rational(-1), std::nullopt}, presets::scalar_flat()),
                  std::invalid_argument);
  const auto regular = solve_parameters({2, 1, Rational(1), std::nullopt}, {{Parameter::A, 0}, {Parameter::B, 1}});
  CHECK(regular.C == 0);
  CHECK(regular.D == 0);
  CHECK(parse_constraint(" C = -1/2 ") == Constraint{Parameter::C, Rational(-1, 2)});
  CHECK_THROWS_AS(parse_constraint("E=1"), SchemaError);
  CHECK(to_string(Constraint{Parameter::D, 0}) == "D=0");
}

TEST_CASE("classification and its implication lattice") {
  const auto rf = classify(RadialProfile(2, 1, 0, 0, 0));
  CHECK(rf.ricci_flat);
  CHECK(rf.kahler_einstein);
  CHECK(rf.scalar_flat);
  CHECK(rf.constant_scalar);
  const auto fs = classify(RadialProfile(2, 0, 0, 1, 0));
  CHECK(fs.kahler_einstein);
  CHECK(fs.constant_scalar);
  CHECK_FALSE(fs.scalar_flat);
  CHECK(fs.intercept == 12);
  const auto cs = classify(RadialProfile(2, -2, 4, -1, 0));
  CHECK(cs.constant_scalar);
  CHECK_FALSE(cs.scalar_flat);
  CHECK_FALSE(cs.kahler_einstein);
  CHECK_FALSE(cs.ricci_flat);

  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> coin(0, 1), val(-3, 3);
  for (int trial = 0; trial < 200; ++trial) {
    auto pick = [&] { return coin(rng) ? Rational(0) : Rational(val(rng)); };
    const RadialProfile p(1 + trial % 4, pick(), pick(), pick(), pick());
    if (p.q_polynomial().is_zero()) continue;
    const auto c = classify(p);
    CHECK(c.extremal);
    if (c.scalar_flat) CHECK(c.constant_scalar);
    if (c.ricci_flat) CHECK((c.kahler_einstein && c.scalar_flat));
    if (c.kahler_einstein) CHECK(c.constant_scalar);
  }
  // Float profiles use an absolute threshold.
  const auto near = classify(RadialProfile(2, 1, 0, exact_rational(1e-14), 0, false));
  CHECK(near.scalar_flat);
}

TEST_CASE("build_potential checks the boundary behaviour") {
  const PolytopeSpec spec{2, 1, Rational(1), Rational(2)};
  const auto good = solve_parameters(spec, {});
  CHECK_NOTHROW(build_potential(good, spec));
  RadialProfile bad = good;
  bad.A += Rational(1, 100);
  CHECK_THROWS_AS(build_potential(bad, spec), std::invalid_argument);
  CHECK_THROWS_AS(build_potential(good, {2, 2, Rational(1), Rational(2)}), std::invalid_argument);
  CHECK_THROWS_AS(build_potential(good, {3, 1, Rational(1), Rational(2)}), std::invalid_argument);

  // Fubini-Study recovers the simplex potential's Hessian.
  const auto fs = radial_potential(RadialProfile(2, 0, 0, 1, 0), standard_simplex(2), RadialRange{0.0, 1.0});
  const auto simplex = canonical_potential(standard_simplex(2));
  std::mt19937_64 rng(4);
  for (int k = 0; k < 10; ++k) {
    const Point x = oracle::random_radial_point(rng, 2, 0.05, 0.95);
    CHECK((fs.hessian(x) - simplex.hessian(x)).cwiseAbs().maxCoeff() < 1e-10 * simplex.hessian(x).norm());
  }

  // Scalar-flat: Det S * Q(r) * 2^n prod x = r^n.
  const PolytopeSpec sfs{2, 1, Rational(1), std::nullopt};
  const auto sf = solve_parameters(sfs, presets::scalar_flat());
  const auto s = build_potential(sf, sfs);
  for (int k = 0; k < 20; ++k) {
    const Point x = oracle::random_radial_point(rng, 2, 1.01, 4);
    const double r = x.sum();
    CHECK(s.hessian(x).determinant() * sf.q(r) * 4 * x.prod() == doctest::Approx(r * r).epsilon(1e-9));
  }
}

TEST_CASE("sampling cap stops at the first zero of Q") {
  // Q = r^2 (1 - r) for Fubini-Study.
  CHECK(radial_sampling_cap(RadialProfile(2, 0, 0, 1, 0), 0.0, 3.0) == doctest::Approx(1.0));
  CHECK(radial_sampling_cap(RadialProfile(2, 1, 0, 0, 0), 1.0, 3.0) == 3.0);
}
