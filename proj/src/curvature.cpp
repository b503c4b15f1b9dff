#include "toric/curvature.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "toric/errors.hpp"
#include "toric/parallel.hpp"

namespace toric {

namespace {

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

}  // namespace

double scalar_curvature_general(const Potential& s, const Point& x, const CurvatureOptions& options) {
  if (x.size() != s.dim()) throw DimensionMismatch("scalar_curvature_general: point has wrong dimension");
  const double margin = s.domain().boundary_distance(x);
  if (!(margin > 0)) throw NotInterior("scalar_curvature_general: point is not interior");
  const double h = options.step_factor * std::min(margin, 1.0 + x.lpNorm<Eigen::Infinity>());
  if (!(h > 0) || 10 * h > margin) throw NotInterior("scalar_curvature_general: stencil leaves the domain");

  const int n = s.dim();
  auto inv = [&](const Point& p) { return s.hessian_sample(p).S_inv; };
  const Eigen::MatrixXd centre = inv(x);
  double total = 0.0;
  for (int j = 0; j < n; ++j) {
    Point xp = x, xm = x;
    xp(j) += h;
    xm(j) -= h;
    total += (inv(xp)(j, j) - 2.0 * centre(j, j) + inv(xm)(j, j)) / (h * h);
  }
  for (int j = 0; j < n; ++j) {
    for (int k = j + 1; k < n; ++k) {
      auto at = [&](double sj, double sk) {
        Point p = x;
        p(j) += sj * h;
        p(k) += sk * h;
        return inv(p)(j, k);
      };
      const double mixed = (at(1, 1) - at(1, -1) - at(-1, 1) + at(-1, -1)) / (4.0 * h * h);
      total += 2.0 * mixed;
    }
  }
  return -total;
}

std::optional<double> scalar_curvature_closed(const Potential& s, const Point& x) {
  const auto& node = s.node();
  if (const auto* r = std::get_if<Potential::Radial>(&node)) {
    return RadialScalarCurvature(r->profile)(x.sum());
  }
  if (const auto* d = std::get_if<Potential::Dim2>(&node)) {
    return 2.0 * d->family.k;
  }
  if (const auto* p = std::get_if<Potential::Pullback>(&node)) {
    return scalar_curvature_closed(p->inner, p->change.apply(x));
  }
  return std::nullopt;
}

AffineFit fit_affine(const std::vector<Point>& points, const std::vector<double>& values) {
  if (points.empty() || points.size() != values.size()) throw std::invalid_argument("fit_affine: bad input sizes");
  const auto n = points.front().size();
  const auto count = static_cast<Eigen::Index>(points.size());
  Eigen::MatrixXd m(count, n + 1);
  Eigen::VectorXd rhs(count);
  for (Eigen::Index i = 0; i < count; ++i) {
    m.row(i).head(n) = points[static_cast<std::size_t>(i)].transpose();
    m(i, n) = 1.0;
    rhs(i) = values[static_cast<std::size_t>(i)];
  }
  const Eigen::VectorXd coeff = m.colPivHouseholderQr().solve(rhs);
  AffineFit fit;
  fit.gradient = coeff.head(n);
  fit.intercept = coeff(n);
  fit.residual = (m * coeff - rhs).lpNorm<Eigen::Infinity>();
  return fit;
}

CurvatureReport verify_extremal(const Potential& s, const PolyhedralSet& region, int n_samples,
                                const CurvatureOptions& options) {
  const int n = s.dim();
  if (n_samples < n + 2) throw std::invalid_argument("verify_extremal: need at least n + 2 samples");
  const auto points = interior_samples(region, static_cast<std::size_t>(n_samples), options.sampling);

  std::vector<CurvatureSample> all(points.size());
  parallel_for(points.size(), [&](std::size_t i) {
    CurvatureSample& out = all[i];
    out.point = points[i];
    try {
      out.sc_general = scalar_curvature_general(s, points[i], options);
    } catch (const DegenerateMetric&) {
      out.sc_general = std::numeric_limits<double>::quiet_NaN();
    } catch (const NotInterior&) {
      out.sc_general = std::numeric_limits<double>::quiet_NaN();
    }
    try {
      out.sc_closed = scalar_curvature_closed(s, points[i]);
    } catch (const DegenerateMetric&) {
      out.sc_closed.reset();
    }
  });

  CurvatureReport report;
  std::vector<Point> fit_points;
  std::vector<double> fit_values;
  for (auto& sample : all) {
    if (!std::isfinite(sample.sc_general)) continue;
    if (sample.sc_closed && std::isfinite(*sample.sc_closed)) {
      sample.rel_err = std::abs(sample.sc_general - *sample.sc_closed) / (1.0 + std::abs(*sample.sc_closed));
      report.max_rel_err = std::max(report.max_rel_err, *sample.rel_err);
    }
    report.max_abs_sc = std::max(report.max_abs_sc, std::abs(sample.sc_general));
    fit_points.push_back(sample.point);
    fit_values.push_back(sample.sc_general);
    report.samples.push_back(std::move(sample));
  }
  if (static_cast<int>(fit_points.size()) < n + 2) {
    throw std::runtime_error("verify_extremal: too few valid samples (" + std::to_string(fit_points.size()) + ")");
  }
  report.affine_fit = fit_affine(fit_points, fit_values);
  report.tolerance = 1e-4 * (1.0 + report.max_abs_sc);
  report.extremal = report.affine_fit.residual < report.tolerance;
  if (const auto* r = s.as_radial()) report.flags = classify(r->profile);
  return report;
}

PolyhedralSet sampling_region(const Potential& s) {
  const auto& node = s.node();
  if (const auto* r = std::get_if<Potential::Radial>(&node)) {
    if (r->range.hi) return s.domain();
    const double lo = r->range.lo;
    const double cap = radial_sampling_cap(r->profile, lo, lo > 0 ? 3.0 * lo : 3.0);
    const auto n = static_cast<std::size_t>(s.dim());
    auto facets = s.domain().facets();
    facets.push_back({RationalVector(n, Rational(-1)), exact_rational(cap)});
    return PolyhedralSet(s.dim(), std::move(facets), Point::Constant(s.dim(), 0.5 * (lo + cap) / s.dim()));
  }
  if (const auto* p = std::get_if<Potential::Pullback>(&node)) {
    return transform(sampling_region(p->inner), p->change);
  }
  return s.domain();
}

CurvatureReport cross_validate(const RadialProfile& profile, const PolytopeSpec& spec, int n_samples,
                               const CurvatureOptions& options) {
  const Potential s = build_potential(profile, spec);
  return verify_extremal(s, sampling_region(s), n_samples, options);
}

std::string to_csv(const CurvatureReport& report) {
  std::ostringstream out;
  const auto n = report.samples.empty() ? 0 : report.samples.front().point.size();
  for (Eigen::Index i = 0; i < n; ++i) out << "x_" << (i + 1) << ",";
  out << "r,Sc_general,Sc_closed,rel_err\n";
  for (const auto& sample : report.samples) {
    for (Eigen::Index i = 0; i < n; ++i) out << format_double(sample.point(i)) << ",";
    out << format_double(sample.point.sum()) << "," << format_double(sample.sc_general) << ",";
    if (sample.sc_closed) out << format_double(*sample.sc_closed);
    out << ",";
    if (sample.rel_err) out << format_double(*sample.rel_err);
    out << "\n";
  }
  return out.str();
}

}  // namespace toric
