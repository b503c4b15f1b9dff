#include "toric/validate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "toric/parallel.hpp"

namespace toric {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr std::size_t kMaxInterior = 4096;
constexpr std::size_t kMaxAnchors = 256;

// Point of the face {l_i = 0, i in F} closest to x0, and the smallest scaled
// affine value of the remaining facets there.
struct FaceProjection {
  Point point;
  double score;
};

std::optional<FaceProjection> project_to_face(const PolyhedralSet& set, const std::vector<std::size_t>& face,
                                              const Point& x0) {
  const auto k = static_cast<Eigen::Index>(face.size());
  Eigen::MatrixXd normals(k, set.dim());
  Eigen::VectorXd values(k);
  const Eigen::VectorXd all = set.affine_values(x0);
  for (Eigen::Index i = 0; i < k; ++i) {
    normals.row(i) = set.normals().row(static_cast<Eigen::Index>(face[static_cast<std::size_t>(i)]));
    values(i) = all(static_cast<Eigen::Index>(face[static_cast<std::size_t>(i)]));
  }
  const Eigen::MatrixXd gram = normals * normals.transpose();
  double scale = 1.0;
  for (Eigen::Index i = 0; i < k; ++i) scale *= gram(i, i);
  if (std::abs(gram.determinant()) <= 1e-12 * scale) return std::nullopt;
  FaceProjection out;
  out.point = x0 - normals.transpose() * gram.ldlt().solve(values);
  out.score = std::numeric_limits<double>::infinity();
  const Eigen::VectorXd at_face = set.affine_values(out.point);
  for (Eigen::Index j = 0; j < at_face.size(); ++j) {
    if (std::find(face.begin(), face.end(), static_cast<std::size_t>(j)) != face.end()) continue;
    out.score = std::min(out.score, at_face(j) / set.normal_norms()(j));
  }
  return out;
}

bool positive_definite_at(const Potential& s, const Point& x) {
  try {
    return is_positive_definite(s.hessian(x));
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace

double boundary_density(const Potential& s, const PolyhedralSet& set, const Point& x) {
  try {
    const HessianSample sample = s.hessian_sample(x);
    const double prod = set.affine_values(x).prod();
    const double delta = 1.0 / (sample.det_S * prod);
    return std::isfinite(delta) ? delta : kNaN;
  } catch (const std::exception&) {
    return kNaN;
  }
}

double q_positivity(const RadialProfile& profile, const RadialRange& range, int mesh, double r_max_factor) {
  if (mesh < 2) throw std::invalid_argument("q_positivity: mesh must be >= 2");
  const double unit = range.lo > 0 ? range.lo : 1.0;
  double lo, hi;
  if (range.hi) {
    const double eps = 1e-6 * (*range.hi - range.lo);
    lo = range.lo + eps;
    hi = *range.hi - eps;
  } else {
    lo = range.lo + 1e-6 * unit;
    hi = r_max_factor * unit;
  }
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < mesh; ++i) {
    const double r = lo + (hi - lo) * i / (mesh - 1);
    best = std::min(best, profile.q(r));
  }
  return best;
}

double q_positivity(const RadialProfile& profile, const PolytopeSpec& spec, int mesh) {
  return q_positivity(profile, radial_range(spec), mesh);
}

ValidationReport validate_potential(const Potential& s, const PolyhedralSet& set, int mesh,
                                    const ValidationOptions& options) {
  if (mesh < 4) throw std::invalid_argument("validate_potential: mesh must be >= 4");
  if (set.dim() != s.dim()) throw std::invalid_argument("validate_potential: dimension mismatch");
  ValidationReport report;

  std::size_t count = 1;
  for (int i = 0; i < set.dim() && count < kMaxInterior; ++i) count *= static_cast<std::size_t>(mesh);
  count = std::min(count, kMaxInterior);

  std::vector<Point> anchors;
  try {
    anchors = interior_samples(set, count, options.sampling);
  } catch (const std::exception& e) {
    report.reasons.push_back(std::string("interior sampling failed: ") + e.what());
    return report;
  }

  std::vector<char> pd(anchors.size(), 0);
  parallel_for(anchors.size(), [&](std::size_t i) { pd[i] = positive_definite_at(s, anchors[i]) ? 1 : 0; });
  report.pd_samples = anchors.size();
  for (std::size_t i = 0; i < anchors.size(); ++i) {
    if (!pd[i]) {
      ++report.pd_failures;
      if (report.pd_failure_points.size() < 16) report.pd_failure_points.push_back(anchors[i]);
    }
  }

  const std::size_t anchor_count = std::min(anchors.size(), kMaxAnchors);
  auto approach = [&](const std::vector<std::size_t>& face) -> std::optional<ApproachSequence> {
    std::optional<FaceProjection> best;
    std::size_t best_anchor = 0;
    for (std::size_t a = 0; a < anchor_count; ++a) {
      auto proj = project_to_face(set, face, anchors[a]);
      if (!proj) return std::nullopt;
      if (!best || proj->score > best->score) {
        best = proj;
        best_anchor = a;
      }
    }
    if (!best || !(best->score > 1e-9 * (1.0 + best->point.norm()))) return std::nullopt;
    ApproachSequence seq;
    seq.facets = face;
    seq.face_point = best->point;
    const Point& x0 = anchors[best_anchor];
    for (std::size_t k = 0; k < 3; ++k) {
      const double t = options.approach_fractions[k];
      seq.points[k] = seq.face_point + t * (x0 - seq.face_point);
      seq.delta[k] = boundary_density(s, set, seq.points[k]);
    }
    const double t2 = options.approach_fractions[1], t3 = options.approach_fractions[2];
    seq.limit = seq.delta[2] + (seq.delta[2] - seq.delta[1]) * t3 / (t2 - t3);
    const bool all_positive = std::all_of(seq.delta.begin(), seq.delta.end(),
                                          [](double d) { return std::isfinite(d) && d > 0; });
    seq.finite_positive = all_positive && std::isfinite(seq.limit) && seq.limit > 0;
    seq.bounded_variation = all_positive && std::abs(seq.delta[1] - seq.delta[2]) < 0.1 * seq.delta[2];
    return seq;
  };

  const std::size_t facets = set.facet_count();
  for (std::size_t i = 0; i < facets; ++i) {
    if (auto seq = approach({i})) {
      report.approaches.push_back(std::move(*seq));
    } else {
      report.unreached.push_back({i});
    }
  }
  for (std::size_t i = 0; i < facets; ++i) {
    for (std::size_t j = i + 1; j < facets; ++j) {
      if (auto seq = approach({i, j})) report.approaches.push_back(std::move(*seq));
    }
  }

  report.delta_min = std::numeric_limits<double>::infinity();
  report.delta_max = -std::numeric_limits<double>::infinity();
  bool all_sequences_ok = true;
  for (const auto& seq : report.approaches) {
    for (double d : seq.delta) {
      if (std::isfinite(d)) {
        report.delta_min = std::min(report.delta_min, d);
        report.delta_max = std::max(report.delta_max, d);
      }
    }
    all_sequences_ok = all_sequences_ok && seq.finite_positive && seq.bounded_variation;
  }

  if (const auto* radial = s.as_radial()) {
    report.q_positivity = q_positivity(radial->profile, radial->range, options.q_mesh);
    double gap = 0.0;
    for (const auto& seq : report.approaches) {
      for (std::size_t k = 0; k < 3; ++k) {
        const Point& x = seq.points[k];
        if (!std::isfinite(seq.delta[k])) continue;
        try {
          const double det = radial_inverse_hessian(radial->profile, x).det_S;
          const double closed = 1.0 / (det * set.affine_values(x).prod());
          gap = std::max(gap, std::abs(seq.delta[k] - closed) / std::abs(closed));
        } catch (const std::exception&) {
          gap = std::numeric_limits<double>::infinity();
        }
      }
    }
    report.delta_route_gap = gap;
  }

  if (report.pd_failures > 0) {
    report.reasons.push_back("Hessian not positive definite at " + std::to_string(report.pd_failures) + " of " +
                             std::to_string(report.pd_samples) + " interior samples");
  }
  if (report.approaches.empty()) report.reasons.push_back("no boundary approach could be sampled");
  if (!all_sequences_ok) {
    report.reasons.push_back("delta is not finite, positive and of bounded variation along every boundary approach");
  }
  if (!report.approaches.empty() && !(report.delta_min > 0)) report.reasons.push_back("delta_min is not positive");
  if (report.q_positivity && !(*report.q_positivity > 0)) {
    report.reasons.push_back("Q is not positive on the radial range (min " + std::to_string(*report.q_positivity) +
                             ")");
  }
  if (report.delta_route_gap && !(*report.delta_route_gap <= 1e-8)) {
    report.reasons.push_back("numeric and closed-form determinants disagree (gap " +
                             std::to_string(*report.delta_route_gap) + ")");
  }
  report.pass = report.reasons.empty();
  return report;
}

}  // namespace toric
