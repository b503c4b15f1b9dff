#include "toric/radial_profile.hpp"

#include <cmath>
#include <string>

namespace toric {

RadialProfile::RadialProfile(int dim, Rational a, Rational b, Rational c, Rational d, bool is_exact)
    : n(dim), A(std::move(a)), B(std::move(b)), C(std::move(c)), D(std::move(d)), exact(is_exact) {
  if (n < 1) throw std::invalid_argument("radial profile dimension must be >= 1");
  if (q_polynomial().is_zero()) throw std::invalid_argument("radial profile has Q identically zero");
}

Polynomial<Rational> RadialProfile::numerator() const {
  const auto un = static_cast<std::size_t>(n);
  std::vector<Rational> c(un + 3, Rational(0));
  c[0] += A;
  c[1] += B;
  c[un + 1] += C;
  c[un + 2] += D;
  return Polynomial<Rational>(std::move(c));
}

Polynomial<Rational> RadialProfile::q_polynomial() const {
  return Polynomial<Rational>::monomial(Rational(1), static_cast<std::size_t>(n)) - numerator();
}

double RadialProfile::numerator_value(double r) const {
  const double rn = std::pow(r, n);
  return to_double(A) + to_double(B) * r + to_double(C) * rn * r + to_double(D) * rn * r * r;
}

double RadialProfile::q(double r) const { return std::pow(r, n) - numerator_value(r); }

double h_second(const RadialProfile& profile, double r) {
  if (!(r > 0)) throw std::invalid_argument("h_second: r must be positive, got " + std::to_string(r));
  const double q = profile.q(r);
  if (q == 0.0 || !std::isfinite(q)) {
    throw DegenerateMetric("h_second: pole of the profile at r = " + std::to_string(r));
  }
  return profile.numerator_value(r) / (r * q);
}

Rational h_second(const RadialProfile& profile, const Rational& r) {
  if (sgn(r) <= 0) throw std::invalid_argument("h_second: r must be positive");
  const Rational q = profile.q_polynomial()(r);
  if (is_zero(q)) throw DegenerateMetric("h_second: pole of the profile at r = " + to_string(r));
  return Rational(profile.numerator()(r) / (r * q));
}

double one_plus_r_h_second(const RadialProfile& profile, double r) {
  if (!(r > 0)) throw std::invalid_argument("one_plus_r_h_second: r must be positive");
  const double q = profile.q(r);
  if (q == 0.0) throw DegenerateMetric("one_plus_r_h_second: pole of the profile at r = " + std::to_string(r));
  return std::pow(r, profile.n) / q;
}

double f_value(const RadialProfile& profile, double r) {
  if (!(r > 0)) throw std::invalid_argument("f_value: r must be positive");
  return profile.numerator_value(r) / std::pow(r, profile.n + 1);
}

}  // namespace toric
