#include <doctest.h>

#include <cmath>

#include "toric/dense_solve.hpp"
#include "toric/errors.hpp"
#include "toric/polynomial.hpp"
#include "toric/rational.hpp"

using namespace toric;

TEST_CASE("parse_rational accepts fractions, integers and decimals exactly") {
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational(" -6/8 ") == Rational(-3, 4));
  CHECK(parse_rational("7") == Rational(7));
  CHECK(parse_rational("0.1") == Rational(1, 10));
  CHECK(parse_rational("-1.25") == Rational(-5, 4));
  CHECK(parse_rational("3e-2") == Rational(3, 100));
  CHECK(parse_rational(".5") == Rational(1, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), SchemaError);
  CHECK_THROWS_AS(parse_rational("abc"), SchemaError);
  CHECK_THROWS_AS(parse_rational(""), SchemaError);
}

TEST_CASE("doubles convert through their shortest decimal or exactly") {
  CHECK(rational_from_double(0.1) == Rational(1, 10));
  CHECK(rational_from_double(-2.5) == Rational(-5, 2));
  CHECK(exact_rational(0.5) == Rational(1, 2));
  CHECK(exact_rational(0.1) != Rational(1, 10));
  CHECK(to_double(exact_rational(0.1)) == 0.1);
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(Rational(-4)) == "-4");
  CHECK(pow(Rational(2, 3), 3) == Rational(8, 27));
}

TEST_CASE("exact dense solve and inverse") {
  DenseMatrix<Rational> m = {{2, 1}, {1, 3}};
  const auto x = solve_dense(m, std::vector<Rational>{3, 5});
  CHECK(x[0] == Rational(4, 5));
  CHECK(x[1] == Rational(7, 5));
  CHECK(determinant(m) == Rational(5));
  const auto inv = inverse(m);
  CHECK(inv[0][0] == Rational(3, 5));
  CHECK(inv[0][1] == Rational(-1, 5));
  DenseMatrix<Rational> singular = {{1, 2}, {2, 4}};
  CHECK_THROWS_AS(solve_dense(singular, std::vector<Rational>{1, 1}), SingularSystem);
  CHECK(determinant(singular) == Rational(0));
}

TEST_CASE("float dense solve has a small residual") {
  DenseMatrix<double> m = {{1e-3, 1, 2}, {4, 5, 6}, {7, 8, 10}};
  const std::vector<double> b{1, 2, 3};
  const auto x = solve_dense(m, b);
  CHECK(residual_max_norm(m, x, b) < 1e-13);
}

TEST_CASE("polynomial arithmetic, division and gcd") {
  using P = Polynomial<Rational>;
  const P p(std::vector<Rational>{-1, 0, 1});  // r^2 - 1
  const P q(std::vector<Rational>{-1, 1});     // r - 1
  auto [quo, rem] = p.divmod(q);
  CHECK(quo == P(std::vector<Rational>{1, 1}));
  CHECK(rem.is_zero());
  auto [defl, value] = p.deflate(Rational(3));
  CHECK(value == Rational(8));
  CHECK(defl == P(std::vector<Rational>{3, 1}));
  CHECK(gcd(p, P(std::vector<Rational>{-2, 1, 1})) == q);  // (r-1)(r+2)
  CHECK(p.derivative() == P(std::vector<Rational>{0, 2}));
  CHECK(p(Rational(1, 2)) == Rational(-3, 4));
  CHECK(p(0.5) == doctest::Approx(-0.75));
  CHECK(P().degree() == -1);
}

TEST_CASE("rational functions reduce and differentiate exactly") {
  using P = Polynomial<Rational>;
  using RF = RationalFunction<Rational>;
  const RF f(P(std::vector<Rational>{-1, 0, 1}), P(std::vector<Rational>{-1, 1}));  // (r^2-1)/(r-1) = r+1
  CHECK(f.denominator().degree() == 0);
  CHECK(f.numerator() == P(std::vector<Rational>{1, 1}));
  const RF g(P::constant(1), P(std::vector<Rational>{0, 0, 1}));  // 1/r^2
  const RF dg = g.derivative();
  CHECK(dg(Rational(2)) == Rational(-1, 4));
  // Quotient rule checked against a central difference.
  const RF h(P(std::vector<Rational>{1, 2, 0, 1}), P(std::vector<Rational>{3, 0, 1}));
  const double r = 0.7, step = 1e-5;
  const double fd = (h(r + step) - h(r - step)) / (2 * step);
  CHECK(h.derivative()(r) == doctest::Approx(fd).epsilon(1e-8));
  CHECK_THROWS_AS(g(Rational(0)), std::domain_error);
}
