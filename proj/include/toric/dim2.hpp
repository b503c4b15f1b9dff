#pragma once

// One action variable: potentials with s''(x) = -1/(k x^2 - 2 b x - c), giving
// S^2 metrics of constant Gauss curvature k.

#include <Eigen/Dense>

#include <optional>

#include "toric/curvature.hpp"
#include "toric/dim2_family.hpp"
#include "toric/polytope.hpp"
#include "toric/potential.hpp"

namespace toric {

/// Case analysis after translating (and, for cones, reflecting) x so that
/// b = 0 when k != 0 and c = 0 when k = 0, b != 0.
Dim2Family classify_dim2(double k, double b, double c);

/// Domain in the caller's coordinate x (possibly with no facets, i.e. R).
PolyhedralSet dim2_domain(const Dim2Family& family);

/// Closed-form catalogue potential. Throws std::invalid_argument for invalid families.
Potential potential_dim2(const Dim2Family& family);

/// -1/(k x^2 - 2 b x - c) straight from the parameters.
double dim2_s_second(const Dim2Family& family, double x);

struct GaussCurvatureCheck {
  /// -(1/s'')'' = 2k.
  double analytic = 0.0;
  /// Sc from the general finite-difference route.
  double numeric = 0.0;
  /// Gauss curvature numeric / 2.
  double gauss() const { return 0.5 * numeric; }
};

/// Throws NotInterior off the open domain.
GaussCurvatureCheck gauss_curvature_check(const Dim2Family& family, double x, const CurvatureOptions& options = {});

struct ConeData {
  /// Cone angle pi b of a cone, or pi sqrt(c k) at both poles of a football.
  std::optional<double> angle;
  /// b = 1 for a cone, c k = 1 for a football.
  bool smooth = false;
  /// p when b = 1/p for an integer p >= 2 (the R^2/Z_p orbifold).
  std::optional<int> orbifold_order;
};

ConeData cone_data(const Dim2Family& family);

/// Metric blocks diag(s'', 1/s'') at x.
Eigen::Matrix2d metric_blocks(const Dim2Family& family, double x);

}  // namespace toric
