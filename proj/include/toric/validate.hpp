#pragma once

// Numerical evidence for the boundary conditions on a symplectic potential:
// S positive definite on the interior and Det S = (delta prod l_r)^{-1} with
// delta positive and finite up to the boundary. Samples can only ever be
// consistent with these conditions; nothing here is a proof.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "toric/calabi.hpp"
#include "toric/potential.hpp"
#include "toric/sampling.hpp"

namespace toric {

struct ValidationOptions {
  SamplingOptions sampling{20240607, 0.01};
  /// Fractions t of the anchor-to-face distance at which delta is sampled.
  std::array<double, 3> approach_fractions{1e-2, 1e-3, 1e-4};
  /// Mesh points for the Q scan.
  int q_mesh = 4000;
};

/// delta along one approach x(t) = p + t (x0 - p) to a point p of a face.
struct ApproachSequence {
  /// One facet index for a facet approach, two for a codimension-2 corner.
  std::vector<std::size_t> facets;
  Point face_point;
  std::array<Point, 3> points;
  std::array<double, 3> delta{};
  /// Linear extrapolation of delta to t = 0 from the last two samples.
  double limit = 0.0;
  bool finite_positive = false;
  /// |delta(1e-3) - delta(1e-4)| < 0.1 delta(1e-4).
  bool bounded_variation = false;
};

struct ValidationReport {
  std::size_t pd_samples = 0;
  std::size_t pd_failures = 0;
  std::vector<Point> pd_failure_points;
  std::vector<ApproachSequence> approaches;
  /// Facets (or facet pairs) for which no face point with a usable anchor was found.
  std::vector<std::vector<std::size_t>> unreached;
  double delta_min = 0.0;
  double delta_max = 0.0;
  std::optional<double> q_positivity;
  /// Largest relative gap between delta from the numeric determinant and from
  /// the closed-form radial determinant.
  std::optional<double> delta_route_gap;
  bool pass = false;
  std::vector<std::string> reasons;
};

/// Collects failures instead of throwing; `mesh` (>= 4) sets the interior
/// sample count to mesh^n, capped at 4096.
ValidationReport validate_potential(const Potential& s, const PolyhedralSet& set, int mesh,
                                    const ValidationOptions& options = {});

/// delta(x) = 1 / (Det S(x) prod_r l_r(x)) over the facets of `set`.
double boundary_density(const Potential& s, const PolyhedralSet& set, const Point& x);

/// min Q on a uniform mesh of [lo + eps, hi - eps] with eps = 1e-6 (hi - lo),
/// or of [lo + eps, r_max] with eps = 1e-6 lo when unbounded.
double q_positivity(const RadialProfile& profile, const RadialRange& range, int mesh, double r_max_factor = 10.0);
double q_positivity(const RadialProfile& profile, const PolytopeSpec& spec, int mesh);

}  // namespace toric
