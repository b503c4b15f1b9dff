#include "toric/calabi.hpp"

#include <algorithm>
#include <cmath>
#include <regex>
#include <set>
#include <stdexcept>

#include "toric/errors.hpp"

namespace toric {

namespace {

std::string describe(const PolytopeSpec& spec) {
  return "(n=" + std::to_string(spec.n) + ", m=" + std::to_string(spec.m) + ", a=" + to_string(spec.a) +
         ", b=" + (spec.b ? to_string(*spec.b) : std::string("inf")) + ")";
}

std::size_t index_of(Parameter p) { return static_cast<std::size_t>(p); }

const char* name_of(Parameter p) {
  switch (p) {
    case Parameter::A: return "A";
    case Parameter::B: return "B";
    case Parameter::C: return "C";
    case Parameter::D: return "D";
  }
  return "?";
}

template <class T>
T from_rational(const Rational& q) {
  return scalar_cast<T>(q);
}

// Rows for Q(t) = 0 and Q'(t) = sign * m t^{n-1}.
template <class T>
void boundary_rows(int n, int m, const T& t, int sign, ParameterSystem<T>& sys) {
  const T tn = detail::int_pow(t, n);
  const T tn1 = detail::int_pow(t, n - 1);
  sys.matrix.push_back({T(1), t, T(tn * t), T(tn * t * t)});
  sys.rhs.push_back(tn);
  sys.matrix.push_back({T(0), T(1), T(T(n + 1) * tn), T(T(n + 2) * tn * t)});
  sys.rhs.push_back(T(T(n) * tn1 - T(sign) * T(m) * tn1));
}

bool near_zero(const Rational& v, bool exact) { return exact ? is_zero(v) : std::abs(to_double(v)) < 1e-12; }

}  // namespace

void check_spec(const PolytopeSpec& spec) {
  if (spec.n < 1) throw std::invalid_argument("spec: n must be >= 1");
  if (spec.m < 1) throw std::invalid_argument("spec: m must be >= 1");
  if (sgn(spec.a) <= 0) throw std::invalid_argument("spec: a must be positive");
  if (spec.b && *spec.b <= spec.a) throw std::invalid_argument("spec: b must exceed a");
}

PolyhedralSet polytope(const PolytopeSpec& spec) {
  check_spec(spec);
  const auto n = static_cast<std::size_t>(spec.n);
  std::vector<Facet> facets;
  for (std::size_t i = 0; i < n; ++i) {
    RationalVector nu(n, Rational(0));
    nu[i] = 1;
    facets.push_back({std::move(nu), Rational(0)});
  }
  const Rational inv_m(1, spec.m);
  facets.push_back({RationalVector(n, inv_m), Rational(-spec.a * inv_m)});
  double r_mid = 2.0 * to_double(spec.a);
  if (spec.b) {
    facets.push_back({RationalVector(n, Rational(-inv_m)), Rational(*spec.b * inv_m)});
    r_mid = 0.5 * (to_double(spec.a) + to_double(*spec.b));
  }
  return PolyhedralSet(spec.n, std::move(facets), Point::Constant(spec.n, r_mid / spec.n));
}

RadialRange radial_range(const PolytopeSpec& spec) {
  RadialRange range;
  range.lo = to_double(spec.a);
  if (spec.b) range.hi = to_double(*spec.b);
  return range;
}

Constraint parse_constraint(std::string_view text) {
  static const std::regex pattern(R"(\s*([ABCD])\s*=\s*(.+?)\s*)");
  const std::string s(text);
  std::smatch match;
  if (!std::regex_match(s, match, pattern)) {
    throw SchemaError("constraint must look like 'D=0' or 'C=-1', got '" + s + "'");
  }
  const char p = match[1].str()[0];
  const Parameter param = p == 'A' ? Parameter::A : p == 'B' ? Parameter::B : p == 'C' ? Parameter::C : Parameter::D;
  return {param, parse_rational(match[2].str())};
}

std::string to_string(const Constraint& c) { return std::string(name_of(c.parameter)) + "=" + to_string(c.value); }

namespace presets {
std::vector<Constraint> scalar_flat() { return {{Parameter::C, 0}, {Parameter::D, 0}}; }
std::vector<Constraint> kahler_einstein() { return {{Parameter::B, 0}, {Parameter::D, 0}}; }
std::vector<Constraint> constant_scalar(const Rational& c) { return {{Parameter::D, 0}, {Parameter::C, c}}; }
}  // namespace presets

template <class T>
ParameterSystem<T> parameter_system(const PolytopeSpec& spec, const std::vector<Constraint>& constraints) {
  check_spec(spec);
  const std::size_t expected = spec.bounded() ? 0 : 2;
  if (constraints.size() != expected) {
    throw std::invalid_argument("spec " + describe(spec) + " needs exactly " + std::to_string(expected) +
                                " constraints, got " + std::to_string(constraints.size()));
  }
  std::set<Parameter> seen;
  for (const auto& c : constraints) {
    if (!seen.insert(c.parameter).second) {
      throw std::invalid_argument(std::string("parameter ") + name_of(c.parameter) + " constrained twice");
    }
  }
  ParameterSystem<T> sys;
  boundary_rows(spec.n, spec.m, from_rational<T>(spec.a), +1, sys);
  if (spec.b) boundary_rows(spec.n, spec.m, from_rational<T>(*spec.b), -1, sys);
  for (const auto& c : constraints) {
    std::vector<T> row(4, T(0));
    row[index_of(c.parameter)] = T(1);
    sys.matrix.push_back(std::move(row));
    sys.rhs.push_back(from_rational<T>(c.value));
  }
  return sys;
}

template ParameterSystem<double> parameter_system<double>(const PolytopeSpec&, const std::vector<Constraint>&);
template ParameterSystem<Rational> parameter_system<Rational>(const PolytopeSpec&, const std::vector<Constraint>&);

RadialProfile solve_parameters(const PolytopeSpec& spec, const std::vector<Constraint>& constraints) {
  auto sys = parameter_system<Rational>(spec, constraints);
  std::vector<Rational> x;
  try {
    x = solve_dense(sys.matrix, sys.rhs);
  } catch (const SingularSystem&) {
    throw SingularSystem("parameter system is singular for spec " + describe(spec));
  }
  return RadialProfile(spec.n, x[0], x[1], x[2], x[3], true);
}

RadialProfile solve_parameters_float(const PolytopeSpec& spec, const std::vector<Constraint>& constraints) {
  auto sys = parameter_system<double>(spec, constraints);
  std::vector<double> x;
  try {
    x = solve_dense(sys.matrix, sys.rhs);
  } catch (const SingularSystem&) {
    throw SingularSystem("parameter system is singular for spec " + describe(spec));
  }
  double rhs_norm = 0.0;
  for (double v : sys.rhs) rhs_norm = std::max(rhs_norm, std::abs(v));
  const double residual = residual_max_norm(sys.matrix, x, sys.rhs);
  if (residual > 1e-12 * std::max(rhs_norm, 1e-300)) {
    throw SingularSystem("parameter system for spec " + describe(spec) + " is too ill-conditioned (residual " +
                         std::to_string(residual) + ")");
  }
  for (double v : x) {
    if (!std::isfinite(v)) throw SingularSystem("non-finite parameter for spec " + describe(spec));
  }
  return RadialProfile(spec.n, exact_rational(x[0]), exact_rational(x[1]), exact_rational(x[2]),
                       exact_rational(x[3]), false);
}

Classification classify(const RadialProfile& profile) {
  const bool exact = profile.exact;
  const bool b0 = near_zero(profile.B, exact);
  const bool c0 = near_zero(profile.C, exact);
  const bool d0 = near_zero(profile.D, exact);
  Classification out;
  out.constant_scalar = d0;
  out.scalar_flat = c0 && d0;
  out.kahler_einstein = b0 && d0;
  out.ricci_flat = b0 && c0 && d0;
  const int n = profile.n;
  out.slope = Rational(2 * (n + 1) * (n + 2)) * profile.D;
  out.intercept = Rational(2 * n * (n + 1)) * profile.C;
  return out;
}

RadialScalarCurvature::RadialScalarCurvature(const RadialProfile& profile) : profile_(profile) {
  using Poly = Polynomial<Rational>;
  using RF = RationalFunction<Rational>;
  const Poly q = profile.q_polynomial();
  const Poly r = Poly::monomial(Rational(1), 1);
  const Poly rn1 = Poly::monomial(Rational(1), static_cast<std::size_t>(profile.n - 1));
  // h'' = -1/r + r^{n-1}/Q, built without the simplification used elsewhere.
  const RF hpp = RF(Poly::constant(Rational(-1)), r) + RF(rn1, q);
  const RF one_plus = RF::polynomial(Poly::constant(Rational(1))) + RF::polynomial(r) * hpp;
  f_ = hpp / one_plus;
  f1_ = f_.derivative();
  f2_ = f1_.derivative();
}

double RadialScalarCurvature::closed_form(double r) const {
  const int n = profile_.n;
  return 2.0 * (n + 1) * ((n + 2) * to_double(profile_.D) * r + n * to_double(profile_.C));
}

Rational RadialScalarCurvature::long_form(const Rational& r) const {
  const int n = profile_.n;
  try {
    return Rational(Rational(2) * r * r * f2_(r) + Rational(4 * (n + 1)) * r * f1_(r) +
                    Rational(2 * n * (n + 1)) * f_(r));
  } catch (const std::domain_error&) {
    throw DegenerateMetric("scalar_curvature_radial: pole of f at r = " + to_string(r));
  }
}

double RadialScalarCurvature::long_form(double r) const { return to_double(long_form(exact_rational(r))); }

double RadialScalarCurvature::operator()(double r) const {
  if (!(r > 0)) throw std::invalid_argument("scalar_curvature_radial: r must be positive");
  const double sc = closed_form(r);
  const double lf = long_form(r);
  if (std::abs(sc - lf) > 1e-9 * std::max(1.0, std::abs(sc))) {
    throw std::logic_error("scalar curvature closed form " + std::to_string(sc) + " disagrees with long form " +
                           std::to_string(lf));
  }
  return sc;
}

double scalar_curvature_radial(const RadialProfile& profile, double r) { return RadialScalarCurvature(profile)(r); }

Potential build_potential(const RadialProfile& profile, const PolytopeSpec& spec) {
  check_spec(spec);
  if (profile.n != spec.n) throw std::invalid_argument("build_potential: profile n differs from spec n");
  const auto q = profile.q_polynomial();
  const auto dq = q.derivative();
  auto check = [&](const Rational& t, int sign, const char* which) {
    const Rational value = q(t);
    const Rational slope = dq(t);
    const Rational want = Rational(sign * spec.m) * pow(t, static_cast<unsigned>(spec.n - 1));
    bool ok;
    if (profile.exact) {
      ok = is_zero(value) && slope == want;
    } else {
      const double scale = std::pow(to_double(t), spec.n);
      ok = std::abs(to_double(value)) <= 1e-9 * scale &&
           std::abs(to_double(slope) - to_double(want)) <= 1e-9 * std::abs(to_double(want));
    }
    if (!ok) {
      throw std::invalid_argument(std::string("build_potential: profile does not have the required simple zero at ") +
                                  which + " for spec " + describe(spec) + " (Q=" + std::to_string(to_double(value)) +
                                  ", Q'=" + std::to_string(to_double(slope)) + ", expected Q'=" +
                                  std::to_string(to_double(want)) + ")");
    }
  };
  check(spec.a, +1, "r=a");
  if (spec.b) check(*spec.b, -1, "r=b");
  return radial_potential(profile, polytope(spec), radial_range(spec));
}

double radial_sampling_cap(const RadialProfile& profile, double lo, double r_max) {
  constexpr int kMesh = 400;
  const double step = (r_max - lo) / kMesh;
  double prev = lo + 1e-9 * (r_max - lo);
  for (int i = 1; i <= kMesh; ++i) {
    const double r = lo + step * i;
    if (profile.q(r) <= 0) {
      double left = prev, right = r;
      for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (left + right);
        (profile.q(mid) > 0 ? left : right) = mid;
      }
      return left;
    }
    prev = r;
  }
  return r_max;
}

Rational residue_at(const RadialProfile& profile, const Rational& root) {
  const auto [quotient, remainder] = profile.q_polynomial().deflate(root);
  if (!is_zero(remainder)) throw std::invalid_argument("residue_at: Q does not vanish at " + to_string(root));
  const Rational denom = quotient(root);
  if (is_zero(denom)) throw std::invalid_argument("residue_at: zero of Q at " + to_string(root) + " is not simple");
  return Rational(pow(root, static_cast<unsigned>(profile.n - 1)) / denom);
}

}  // namespace toric
