#include "toric/dim2.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "toric/errors.hpp"

namespace toric {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double xlogx(double v) { return v == 0.0 ? 0.0 : v * std::log(v); }

// Snaps values that are zero up to cancellation in c + b^2/k.
double snap(double v, double scale) { return std::abs(v) <= 1e-14 * scale ? 0.0 : v; }

}  // namespace

std::string_view to_string(Dim2Case c) {
  switch (c) {
    case Dim2Case::cylinder: return "cylinder";
    case Dim2Case::cone: return "cone";
    case Dim2Case::football: return "football";
    case Dim2Case::hyperboloid: return "hyperboloid";
    case Dim2Case::hyperbolic_disc: return "hyperbolic_disc";
    case Dim2Case::cusp: return "cusp";
    case Dim2Case::invalid: return "invalid";
  }
  return "invalid";
}

Dim2Case parse_dim2_case(std::string_view name) {
  for (auto c : {Dim2Case::cylinder, Dim2Case::cone, Dim2Case::football, Dim2Case::hyperboloid,
                 Dim2Case::hyperbolic_disc, Dim2Case::cusp, Dim2Case::invalid}) {
    if (to_string(c) == name) return c;
  }
  throw std::invalid_argument("unknown dim2 case '" + std::string(name) + "'");
}

Dim2Family classify_dim2(double k, double b, double c) {
  Dim2Family f;
  f.k = k;
  f.b = b;
  f.c = c;
  if (!std::isfinite(k) || !std::isfinite(b) || !std::isfinite(c)) return f;

  if (k == 0.0) {
    if (b == 0.0) {
      f.normalized_c = c;
      if (c > 0) {
        f.case_tag = Dim2Case::cylinder;
        f.u_lo = -kInf;
        f.u_hi = kInf;
      }
      return f;
    }
    // 2 b x + c = 2|b| u with u = sign(b) (x + c/(2b)).
    f.case_tag = Dim2Case::cone;
    f.shift = -c / (2.0 * b);
    f.sign = b > 0 ? 1.0 : -1.0;
    f.normalized_b = std::abs(b);
    f.u_lo = 0.0;
    f.u_hi = kInf;
    return f;
  }

  // k x^2 - 2 b x - c = k u^2 - c' with u = x - b/k, c' = c + b^2/k.
  f.shift = b / k;
  f.normalized_c = snap(c + b * b / k, std::abs(c) + b * b / std::abs(k));
  const double cn = f.normalized_c;
  if (k > 0) {
    if (cn > 0) {
      f.case_tag = Dim2Case::football;
      f.u_hi = std::sqrt(cn / k);
      f.u_lo = -f.u_hi;
    }
    return f;
  }
  if (cn > 0) {
    f.case_tag = Dim2Case::hyperboloid;
    f.u_lo = -kInf;
    f.u_hi = kInf;
  } else if (cn < 0) {
    f.case_tag = Dim2Case::hyperbolic_disc;
    f.u_lo = std::sqrt(cn / k);
    f.u_hi = kInf;
  } else {
    f.case_tag = Dim2Case::cusp;
    f.u_lo = 0.0;
    f.u_hi = kInf;
  }
  return f;
}

PolyhedralSet dim2_domain(const Dim2Family& f) {
  if (f.case_tag == Dim2Case::invalid) throw std::invalid_argument("dim2: invalid family has no domain");
  std::vector<Facet> facets;
  // u >= lo  <=>  sign x - sign shift - lo >= 0;  u <= hi  <=>  -sign x + sign shift + hi >= 0.
  if (std::isfinite(f.u_lo)) {
    facets.push_back({{exact_rational(f.sign)}, exact_rational(-f.sign * f.shift - f.u_lo)});
  }
  if (std::isfinite(f.u_hi)) {
    facets.push_back({{exact_rational(-f.sign)}, exact_rational(f.sign * f.shift + f.u_hi)});
  }
  double u = 0.0;
  if (std::isfinite(f.u_lo) && std::isfinite(f.u_hi)) {
    u = 0.5 * (f.u_lo + f.u_hi);
  } else if (std::isfinite(f.u_lo)) {
    u = f.u_lo + 1.0 + std::abs(f.u_lo);
  }
  return PolyhedralSet(1, std::move(facets), Point::Constant(1, f.from_catalogue(u)));
}

Dim2Derivatives dim2_closed_form(const Dim2Family& f, double x) {
  const double u = f.to_catalogue(x);
  const double k = f.k;
  const double c = f.normalized_c;
  double value = 0, d1 = 0, d2 = 0;
  switch (f.case_tag) {
    case Dim2Case::cylinder:
      value = u * u / (2.0 * c);
      d1 = u / c;
      d2 = 1.0 / c;
      break;
    case Dim2Case::cone: {
      const double bn = f.normalized_b;
      value = 0.5 * xlogx(u) / bn;
      d1 = 0.5 * (std::log(u) + 1.0) / bn;
      d2 = 0.5 / (bn * u);
      break;
    }
    case Dim2Case::football: {
      const double alpha = std::sqrt(c / k);
      const double scale = 0.5 / std::sqrt(c * k);
      value = scale * (xlogx(u + alpha) + xlogx(alpha - u));
      d1 = scale * (std::log(u + alpha) - std::log(alpha - u));
      d2 = scale * (1.0 / (u + alpha) + 1.0 / (alpha - u));
      break;
    }
    case Dim2Case::hyperboloid: {
      const double beta = std::sqrt(-1.0 / (c * k));
      const double gamma = std::sqrt(-k / c);
      const double gu = gamma * u;
      value = beta * (u * std::atan(gu) - std::log1p(gu * gu) / (2.0 * gamma));
      d1 = beta * std::atan(gu);
      d2 = beta * gamma / (1.0 + gu * gu);
      break;
    }
    case Dim2Case::hyperbolic_disc: {
      const double alpha = std::sqrt(c / k);
      const double scale = 0.5 / std::sqrt(c * k);
      value = scale * (xlogx(u - alpha) - xlogx(u + alpha));
      d1 = scale * (std::log(u - alpha) - std::log(u + alpha));
      d2 = scale * (1.0 / (u - alpha) - 1.0 / (u + alpha));
      break;
    }
    case Dim2Case::cusp:
      value = std::log(u) / k;
      d1 = 1.0 / (k * u);
      d2 = -1.0 / (k * u * u);
      break;
    case Dim2Case::invalid:
      throw std::invalid_argument("dim2: invalid family has no potential");
  }
  return {value, f.sign * d1, d2};
}

Potential potential_dim2(const Dim2Family& family) {
  if (family.case_tag == Dim2Case::invalid) {
    throw std::invalid_argument("dim2: (k, b, c) = (" + std::to_string(family.k) + ", " + std::to_string(family.b) +
                                ", " + std::to_string(family.c) + ") is not in the catalogue");
  }
  return Potential(Potential::Dim2{family, dim2_domain(family)});
}

double dim2_s_second(const Dim2Family& f, double x) { return -1.0 / (f.k * x * x - 2.0 * f.b * x - f.c); }

GaussCurvatureCheck gauss_curvature_check(const Dim2Family& family, double x, const CurvatureOptions& options) {
  const Potential s = potential_dim2(family);
  GaussCurvatureCheck out;
  out.analytic = 2.0 * family.k;
  out.numeric = scalar_curvature_general(s, Point::Constant(1, x), options);
  return out;
}

ConeData cone_data(const Dim2Family& f) {
  ConeData out;
  if (f.case_tag == Dim2Case::cone) {
    const double b = f.normalized_b;
    out.angle = std::numbers::pi * b;
    out.smooth = b == 1.0;
    const double inv = 1.0 / b;
    const double p = std::round(inv);
    if (p >= 2 && std::abs(inv - p) <= 1e-12 * p) out.orbifold_order = static_cast<int>(p);
  } else if (f.case_tag == Dim2Case::football) {
    const double ck = f.normalized_c * f.k;
    out.angle = std::numbers::pi * std::sqrt(ck);
    out.smooth = ck == 1.0;
  }
  return out;
}

Eigen::Matrix2d metric_blocks(const Dim2Family& family, double x) {
  const double s2 = dim2_closed_form(family, x).second;
  Eigen::Matrix2d g = Eigen::Matrix2d::Zero();
  g(0, 0) = s2;
  g(1, 1) = 1.0 / s2;
  return g;
}

}  // namespace toric
