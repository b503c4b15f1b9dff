#pragma once

// Calabi's U(n)-invariant extremal family on the sets
//   P^n_m(a, b) = { x_i >= 0, (r - a)/m >= 0, (b - r)/m >= 0 },  r = sum x_i,
// with the last facet absent for b = infinity.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "toric/dense_solve.hpp"
#include "toric/polytope.hpp"
#include "toric/potential.hpp"
#include "toric/radial_profile.hpp"
#include "toric/rational.hpp"

namespace toric {

struct PolytopeSpec {
  int n = 2;
  int m = 1;
  Rational a = 1;
  /// Absent for the unbounded sets P^n_m(a).
  std::optional<Rational> b;

  bool bounded() const { return b.has_value(); }
};

/// Checks 0 < a < b, n >= 1, m >= 1; throws std::invalid_argument otherwise.
void check_spec(const PolytopeSpec& spec);

PolyhedralSet polytope(const PolytopeSpec& spec);
RadialRange radial_range(const PolytopeSpec& spec);

enum class Parameter { A, B, C, D };

struct Constraint {
  Parameter parameter;
  Rational value;
  friend bool operator==(const Constraint&, const Constraint&) = default;
};

/// Parses "D=0", "C=-1", "B = 1/2" and the like.
Constraint parse_constraint(std::string_view text);
std::string to_string(const Constraint& c);

namespace presets {
/// Scalar-flat metrics: C = D = 0.
std::vector<Constraint> scalar_flat();
/// Kahler-Einstein metrics: B = D = 0.
std::vector<Constraint> kahler_einstein();
/// Constant scalar curvature with D = 0 and C fixed (C = -1 gives Sc = -2n(n+1)).
std::vector<Constraint> constant_scalar(const Rational& c = Rational(-1));
}  // namespace presets

/// Linear system in the unknowns (A, B, C, D): rows for Q(a) = 0 and
/// Q'(a) = m a^{n-1} (residue 1/m of r^{n-1}/Q at a), plus Q(b) = 0 and
/// Q'(b) = -m b^{n-1} when bounded, plus one row per constraint.
template <class T>
struct ParameterSystem {
  DenseMatrix<T> matrix;
  std::vector<T> rhs;
};

template <class T>
ParameterSystem<T> parameter_system(const PolytopeSpec& spec, const std::vector<Constraint>& constraints);

/// Exact solve. Throws std::invalid_argument for a constraint/boundary count
/// mismatch and SingularSystem (naming the spec) when the system is singular.
RadialProfile solve_parameters(const PolytopeSpec& spec, const std::vector<Constraint>& constraints);

/// Floating-point solve with partial pivoting; rejects solutions whose residual
/// exceeds 1e-12 |rhs|. The returned profile is marked inexact.
RadialProfile solve_parameters_float(const PolytopeSpec& spec, const std::vector<Constraint>& constraints);

struct Classification {
  bool extremal = true;
  bool constant_scalar = false;
  bool scalar_flat = false;
  bool kahler_einstein = false;
  bool ricci_flat = false;
  /// Sc(r) = slope * r + intercept.
  Rational slope;
  Rational intercept;
};

Classification classify(const RadialProfile& profile);

/// Scalar curvature of the radial family. The closed form
/// 2(n+1)((n+2) D r + n C) is cross-checked against
/// 2 r^2 f'' + 4(n+1) r f' + 2n(n+1) f, where f = h''/(1 + r h'') is built and
/// differentiated as an exact rational function of r.
class RadialScalarCurvature {
 public:
  explicit RadialScalarCurvature(const RadialProfile& profile);

  double closed_form(double r) const;
  /// Long form evaluated exactly at the binary value of r, then rounded.
  double long_form(double r) const;
  Rational long_form(const Rational& r) const;
  /// Closed form after checking agreement with the long form to 1e-9 relative.
  /// Throws std::logic_error on disagreement and DegenerateMetric at a pole of f.
  double operator()(double r) const;

  const RationalFunction<Rational>& f() const { return f_; }

 private:
  RadialProfile profile_;
  RationalFunction<Rational> f_, f1_, f2_;
};

double scalar_curvature_radial(const RadialProfile& profile, double r);

/// Radial potential on P^n_m(a, b) after checking that Q vanishes at a (and b)
/// with residues +-1/m; throws std::invalid_argument on mismatch.
Potential build_potential(const RadialProfile& profile, const PolytopeSpec& spec);

/// Right end of the interval (lo, cap] on which Q stays positive, for
/// sampling unbounded domains: the first zero of Q beyond lo, or `r_max`.
double radial_sampling_cap(const RadialProfile& profile, double lo, double r_max);

/// Limit of (r - root) r^{n-1} / Q(r) as r -> root, computed exactly by
/// deflating Q at the root. Throws if root is not a simple zero of Q.
Rational residue_at(const RadialProfile& profile, const Rational& root);

}  // namespace toric
