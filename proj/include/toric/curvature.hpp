#pragma once

// General-route scalar curvature Sc = -sum_{j,k} d^2 s^{jk} / dx_j dx_k, with
// s^{jk} the entries of the numerically inverted closed-form Hessian and the
// derivatives taken by central differences.

#include <Eigen/Dense>

#include <optional>
#include <string>
#include <vector>

#include "toric/calabi.hpp"
#include "toric/potential.hpp"
#include "toric/sampling.hpp"

namespace toric {

struct CurvatureOptions {
  /// h_fd = step_factor * min(margin(x), 1 + |x|_inf).
  double step_factor = 1e-3;
  SamplingOptions sampling;
};

double scalar_curvature_general(const Potential& s, const Point& x, const CurvatureOptions& options = {});

/// Closed-form scalar curvature where one is known: radial profiles (also
/// through pullbacks) and the 2D catalogue. Otherwise nullopt.
std::optional<double> scalar_curvature_closed(const Potential& s, const Point& x);

struct CurvatureSample {
  Point point;
  double sc_general = 0.0;
  std::optional<double> sc_closed;
  /// |general - closed| / (1 + |closed|) when both are finite.
  std::optional<double> rel_err;
};

struct AffineFit {
  Eigen::VectorXd gradient;
  double intercept = 0.0;
  /// max |Sc - (gradient . x + intercept)| over the samples.
  double residual = 0.0;
};

struct CurvatureReport {
  std::vector<CurvatureSample> samples;
  double max_rel_err = 0.0;
  double max_abs_sc = 0.0;
  AffineFit affine_fit;
  double tolerance = 0.0;
  bool extremal = false;
  std::optional<Classification> flags;
};

/// Least-squares affine fit of values over points (QR).
AffineFit fit_affine(const std::vector<Point>& points, const std::vector<double>& values);

/// Samples Sc on a quasi-random interior point set of `region` and fits an
/// affine function. Throws std::runtime_error with fewer than n + 2 usable samples.
CurvatureReport verify_extremal(const Potential& s, const PolyhedralSet& region, int n_samples,
                                const CurvatureOptions& options = {});

/// Region used for sampling a potential: its domain, cut off at the first zero
/// of Q (or 3a) along r for unbounded radial domains.
PolyhedralSet sampling_region(const Potential& s);

/// Radial profile on its spec: general vs closed-form Sc.
CurvatureReport cross_validate(const RadialProfile& profile, const PolytopeSpec& spec, int n_samples,
                               const CurvatureOptions& options = {});

/// CSV rows x_1..x_n, r, Sc_general, Sc_closed, rel_err.
std::string to_csv(const CurvatureReport& report);

}  // namespace toric
