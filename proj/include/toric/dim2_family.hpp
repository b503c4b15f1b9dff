#pragma once

#include <string>
#include <string_view>

namespace toric {

/// Constant-curvature surface types for s''(x) = -1/(k x^2 - 2 b x - c).
enum class Dim2Case { cylinder, cone, football, hyperboloid, hyperbolic_disc, cusp, invalid };

std::string_view to_string(Dim2Case c);
Dim2Case parse_dim2_case(std::string_view name);

/// A one-action-variable family together with the affine normalisation that
/// puts it in catalogue form. The catalogue coordinate is
///   u = sign * (x - shift),
/// in which the quadratic becomes k u^2 - 2 b_n u - c_n with b_n = 0 for k != 0
/// and c_n = 0, b_n > 0 for cones.
struct Dim2Family {
  double k = 0, b = 0, c = 0;
  Dim2Case case_tag = Dim2Case::invalid;
  double shift = 0;
  double sign = 1;
  double normalized_b = 0;
  double normalized_c = 0;
  /// Closure of the domain in the catalogue coordinate u (may be infinite).
  double u_lo = 0, u_hi = 0;

  double to_catalogue(double x) const { return sign * (x - shift); }
  double from_catalogue(double u) const { return shift + sign * u; }
};

/// s, s' and s'' of the catalogue potential at x (caller coordinate).
struct Dim2Derivatives {
  double value = 0, first = 0, second = 0;
};

/// Closed-form catalogue potential. Log terms use 0 log 0 = 0 for `value`.
/// Throws std::invalid_argument for the invalid family.
Dim2Derivatives dim2_closed_form(const Dim2Family& family, double x);

}  // namespace toric
