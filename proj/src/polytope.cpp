#include "toric/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "toric/errors.hpp"

namespace toric {

namespace {

constexpr int kBisectionSteps = 200;

// Concave margin function used to locate an interior point: distance to the
// nearest facet hyperplane, clipped by the distance to the probe box.
struct MarginProbe {
  const Eigen::MatrixXd& normals;
  const Eigen::VectorXd& offsets;
  const Eigen::VectorXd& norms;
  double radius;

  // Returns the margin and writes a supergradient into `grad`.
  double operator()(const Point& x, Point& grad) const {
    double best = std::numeric_limits<double>::infinity();
    grad.setZero(x.size());
    for (Eigen::Index i = 0; i < normals.rows(); ++i) {
      const double v = (normals.row(i).dot(x) + offsets(i)) / norms(i);
      if (v < best) {
        best = v;
        grad = normals.row(i).transpose() / norms(i);
      }
    }
    for (Eigen::Index j = 0; j < x.size(); ++j) {
      const double v = radius - std::abs(x(j));
      if (v < best) {
        best = v;
        grad.setZero(x.size());
        grad(j) = x(j) >= 0 ? -1.0 : 1.0;
      }
    }
    return best;
  }
};

}  // namespace

PolyhedralSet::PolyhedralSet(int dim, std::vector<Facet> facets, std::optional<Point> witness)
    : dim_(dim), facets_(std::move(facets)) {
  if (dim_ <= 0) throw std::invalid_argument("polyhedral set dimension must be positive");
  const auto m = static_cast<Eigen::Index>(facets_.size());
  normals_.resize(m, dim_);
  offsets_.resize(m);
  norms_.resize(m);
  double reach = 0.0;
  for (Eigen::Index i = 0; i < m; ++i) {
    const Facet& f = facets_[static_cast<std::size_t>(i)];
    if (static_cast<int>(f.normal.size()) != dim_) {
      throw DimensionMismatch("facet " + std::to_string(i) + " normal has length " +
                              std::to_string(f.normal.size()) + ", expected " + std::to_string(dim_));
    }
    bool nonzero = false;
    for (int j = 0; j < dim_; ++j) {
      normals_(i, j) = to_double(f.normal[static_cast<std::size_t>(j)]);
      nonzero = nonzero || !is_zero(f.normal[static_cast<std::size_t>(j)]);
    }
    if (!nonzero) throw std::invalid_argument("facet " + std::to_string(i) + " has a zero normal");
    offsets_(i) = to_double(f.offset);
    norms_(i) = normals_.row(i).norm();
    reach = std::max(reach, std::abs(offsets_(i)) / norms_(i));
  }
  probe_radius_ = 4.0 * (1.0 + reach);
  if (witness && witness->size() == dim_ && contains_interior(*witness, 0.0)) {
    witness_ = *witness;
  } else {
    witness_ = find_witness();
  }
}

void PolyhedralSet::check_point(const Point& x) const {
  if (x.size() != dim_) {
    throw DimensionMismatch("point of length " + std::to_string(x.size()) + " in a set of dimension " +
                            std::to_string(dim_));
  }
}

Eigen::VectorXd PolyhedralSet::affine_values(const Point& x) const {
  check_point(x);
  return normals_ * x + offsets_;
}

bool PolyhedralSet::contains_interior(const Point& x, double margin) const {
  if (margin < 0) throw std::invalid_argument("contains_interior: margin must be nonnegative");
  const Eigen::VectorXd values = affine_values(x);
  return (values.array() > margin).all();
}

double PolyhedralSet::boundary_distance(const Point& x) const {
  if (facets_.empty()) {
    check_point(x);
    return std::numeric_limits<double>::infinity();
  }
  return (affine_values(x).array() / norms_.array()).minCoeff();
}

PolyhedralSet PolyhedralSet::with_facet(const Facet& extra) const {
  auto facets = facets_;
  facets.push_back(extra);
  return PolyhedralSet(dim_, std::move(facets));
}

Point PolyhedralSet::find_witness() const {
  const int n = dim_;
  Point origin = Point::Zero(n);
  if (facets_.empty()) return origin;

  const MarginProbe probe{normals_, offsets_, norms_, probe_radius_};
  Point grad(n);
  Point best = origin;
  double best_value = probe(origin, grad);

  if (n == 1) {
    double lo = -probe_radius_, hi = probe_radius_;
    for (int it = 0; it < kBisectionSteps && hi - lo > 1e-15 * probe_radius_; ++it) {
      Point mid(1);
      mid(0) = 0.5 * (lo + hi);
      const double v = probe(mid, grad);
      if (v > best_value) {
        best_value = v;
        best = mid;
      }
      if (grad(0) > 0) {
        lo = mid(0);
      } else if (grad(0) < 0) {
        hi = mid(0);
      } else {
        break;
      }
    }
  } else {
    // Central-cut ellipsoid method on the concave margin function.
    const double nn = n;
    Point center = origin;
    Eigen::MatrixXd shape = Eigen::MatrixXd::Identity(n, n) * (nn * probe_radius_ * probe_radius_ * 1.01);
    const int iterations = 300 * n * n;
    for (int it = 0; it < iterations; ++it) {
      const double v = probe(center, grad);
      if (v > best_value) {
        best_value = v;
        best = center;
      }
      const Point a = -grad;
      const double q = a.dot(shape * a);
      if (!(q > 0) || !std::isfinite(q)) break;
      const Point step = shape * a / std::sqrt(q);
      center -= step / (nn + 1.0);
      shape = (nn * nn / (nn * nn - 1.0)) * (shape - (2.0 / (nn + 1.0)) * step * step.transpose());
      if (shape.trace() < 1e-26 * probe_radius_ * probe_radius_) break;
    }
  }

  if (!(best_value > 0) || !contains_interior(best, 0.0)) {
    throw std::invalid_argument("polyhedral set has an empty interior inside the probe box of radius " +
                                std::to_string(probe_radius_));
  }
  return best;
}

LinearChange::LinearChange(DenseMatrix<Rational> matrix) : m_(std::move(matrix)) {
  const std::size_t n = m_.size();
  if (n == 0) throw DimensionMismatch("linear change must be at least 1x1");
  for (const auto& row : m_) {
    if (row.size() != n) throw DimensionMismatch("linear change matrix is not square");
  }
  det_ = toric::determinant(m_);
  if (is_zero(det_)) throw SingularSystem("linear change matrix is singular");
  inv_ = toric::inverse(m_);
  md_.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  invd_.resizeLike(md_);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      md_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = to_double(m_[i][j]);
      invd_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = to_double(inv_[i][j]);
    }
  }
}

LinearChange LinearChange::from_doubles(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("linear change matrix is not square");
  DenseMatrix<Rational> q(static_cast<std::size_t>(m.rows()), RationalVector(static_cast<std::size_t>(m.cols())));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      q[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = exact_rational(m(i, j));
  return LinearChange(std::move(q));
}

LinearChange LinearChange::identity(int n) {
  DenseMatrix<Rational> q(static_cast<std::size_t>(n), RationalVector(static_cast<std::size_t>(n), Rational(0)));
  for (std::size_t i = 0; i < q.size(); ++i) q[i][i] = 1;
  return LinearChange(std::move(q));
}

LinearChange LinearChange::inverse() const { return LinearChange(inv_); }

LinearChange LinearChange::compose(const LinearChange& other) const {
  if (other.dim() != dim()) throw DimensionMismatch("compose: dimensions differ");
  const std::size_t n = m_.size();
  DenseMatrix<Rational> out(n, RationalVector(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) out[i][j] += m_[i][k] * other.m_[k][j];
  return LinearChange(std::move(out));
}

std::vector<double> affine_values(const PolyhedralSet& set, const Point& x) {
  const Eigen::VectorXd v = set.affine_values(x);
  return {v.data(), v.data() + v.size()};
}

bool contains_interior(const PolyhedralSet& set, const Point& x, double margin) {
  return set.contains_interior(x, margin);
}

PolyhedralSet transform(const PolyhedralSet& set, const LinearChange& change) {
  if (change.dim() != set.dim()) throw DimensionMismatch("transform: matrix and set dimensions differ");
  const auto n = static_cast<std::size_t>(set.dim());
  const auto& t = change.matrix();
  std::vector<Facet> facets;
  facets.reserve(set.facet_count());
  for (const Facet& f : set.facets()) {
    RationalVector normal(n, Rational(0));
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i) normal[j] += t[i][j] * f.normal[i];
    facets.push_back({std::move(normal), f.offset});
  }
  return PolyhedralSet(set.dim(), std::move(facets), change.apply_inverse(set.interior_point()));
}

PolyhedralSet orthant(int n) {
  std::vector<Facet> facets;
  for (int i = 0; i < n; ++i) {
    RationalVector normal(static_cast<std::size_t>(n), Rational(0));
    normal[static_cast<std::size_t>(i)] = 1;
    facets.push_back({std::move(normal), Rational(0)});
  }
  return PolyhedralSet(n, std::move(facets), Point::Ones(n));
}

PolyhedralSet standard_simplex(int n, const Rational& size) {
  std::vector<Facet> facets;
  for (int i = 0; i < n; ++i) {
    RationalVector normal(static_cast<std::size_t>(n), Rational(0));
    normal[static_cast<std::size_t>(i)] = 1;
    facets.push_back({std::move(normal), Rational(0)});
  }
  facets.push_back({RationalVector(static_cast<std::size_t>(n), Rational(-1)), size});
  return PolyhedralSet(n, std::move(facets), Point::Constant(n, to_double(size) / (n + 1)));
}

PolyhedralSet whole_space(int n) { return PolyhedralSet(n, {}); }

}  // namespace toric
