#pragma once

// Calabi's radial datum. With r = x_1 + ... + x_n and
//   N(r) = A + B r + C r^{n+1} + D r^{n+2},   Q(r) = r^n - N(r),
// the profile is h''(r) = -1/r + r^{n-1}/Q(r) = N(r) / (r Q(r)), so that
//   1 + r h''(r) = r^n / Q(r)   and   f = h''/(1 + r h'') = N(r) / r^{n+1}.

#include <optional>
#include <stdexcept>

#include "toric/errors.hpp"
#include "toric/polynomial.hpp"
#include "toric/rational.hpp"

namespace toric {

struct RadialProfile {
  int n = 1;
  Rational A, B, C, D;
  /// False when the parameters came from a floating-point solve; zero tests
  /// then use an absolute tolerance.
  bool exact = true;

  RadialProfile() = default;
  RadialProfile(int dim, Rational a, Rational b, Rational c, Rational d, bool is_exact = true);

  /// N(r) = A + B r + C r^{n+1} + D r^{n+2}.
  Polynomial<Rational> numerator() const;
  /// Q(r) = r^n - N(r).
  Polynomial<Rational> q_polynomial() const;

  double q(double r) const;
  double numerator_value(double r) const;

  friend bool operator==(const RadialProfile&, const RadialProfile&) = default;
};

/// Radial interval (lo, hi) of r = sum x_i covered by a potential's domain;
/// hi is absent for unbounded domains.
struct RadialRange {
  double lo = 0.0;
  std::optional<double> hi;
};

namespace detail {
template <class T>
T int_pow(const T& base, int k) {
  T out(1);
  for (int i = 0; i < k; ++i) out = T(out * base);
  return out;
}
}  // namespace detail

/// h''(r). Throws std::invalid_argument for r <= 0 and DegenerateMetric at a pole (Q(r) = 0).
double h_second(const RadialProfile& profile, double r);
Rational h_second(const RadialProfile& profile, const Rational& r);

/// 1 + r h''(r) = r^n / Q(r).
double one_plus_r_h_second(const RadialProfile& profile, double r);

/// f(r) = N(r) / r^{n+1}; finite wherever r > 0, including zeros of Q.
double f_value(const RadialProfile& profile, double r);

}  // namespace toric
