#pragma once

// Facet-presented polyhedral sets P = { x : l_i(x) >= 0 } with
// l_i(x) = <x, normal_i> + offset_i and inward-pointing normals.
//
// Labels are encoded by scaling the normal (a facet with label m carries
// normal nu/m), so every facet is just a (normal, offset) pair. Unbounded
// sets are allowed; only a nonempty interior is enforced.

#include <Eigen/Dense>

#include <optional>
#include <vector>

#include "toric/dense_solve.hpp"
#include "toric/rational.hpp"

namespace toric {

using Point = Eigen::VectorXd;

struct Facet {
  RationalVector normal;
  Rational offset;

  friend bool operator==(const Facet&, const Facet&) = default;
};

class PolyhedralSet {
 public:
  /// Validates the facets and locates an interior point (the supplied
  /// `witness` if it is strictly interior, otherwise by margin maximisation
  /// over a bounded probe box). Throws std::invalid_argument on an empty
  /// interior and DimensionMismatch on malformed normals.
  PolyhedralSet(int dim, std::vector<Facet> facets, std::optional<Point> witness = std::nullopt);

  int dim() const { return dim_; }
  const std::vector<Facet>& facets() const { return facets_; }
  std::size_t facet_count() const { return facets_.size(); }

  /// Normals as rows, in facet order.
  const Eigen::MatrixXd& normals() const { return normals_; }
  const Eigen::VectorXd& offsets() const { return offsets_; }
  /// Euclidean lengths of the normals.
  const Eigen::VectorXd& normal_norms() const { return norms_; }

  /// l_i(x) for every facet, in facet order.
  Eigen::VectorXd affine_values(const Point& x) const;
  /// True iff l_i(x) > margin for every facet.
  bool contains_interior(const Point& x, double margin = 0.0) const;
  /// Euclidean distance from x to the nearest facet hyperplane (min l_i/|nu_i|);
  /// +infinity for a set without facets. Negative outside.
  double boundary_distance(const Point& x) const;

  const Point& interior_point() const { return witness_; }
  /// Half-width of the box centred at the origin used for witnesses and sampling
  /// of unbounded sets.
  double probe_radius() const { return probe_radius_; }

  /// Same set with one more facet appended.
  PolyhedralSet with_facet(const Facet& extra) const;

  friend bool operator==(const PolyhedralSet& p, const PolyhedralSet& q) {
    return p.dim_ == q.dim_ && p.facets_ == q.facets_;
  }

 private:
  void check_point(const Point& x) const;
  Point find_witness() const;

  int dim_;
  std::vector<Facet> facets_;
  Eigen::MatrixXd normals_;
  Eigen::VectorXd offsets_;
  Eigen::VectorXd norms_;
  double probe_radius_ = 0.0;
  Point witness_;
};

/// Invertible linear change of action coordinates x' = T x, stored exactly.
class LinearChange {
 public:
  explicit LinearChange(DenseMatrix<Rational> matrix);
  static LinearChange from_doubles(const Eigen::MatrixXd& m);
  static LinearChange identity(int n);

  int dim() const { return static_cast<int>(m_.size()); }
  const DenseMatrix<Rational>& matrix() const { return m_; }
  const DenseMatrix<Rational>& inverse_matrix() const { return inv_; }
  const Eigen::MatrixXd& matrix_d() const { return md_; }
  const Eigen::MatrixXd& inverse_d() const { return invd_; }
  const Rational& determinant() const { return det_; }

  LinearChange inverse() const;
  /// Composition (this * other): apply `other` first.
  LinearChange compose(const LinearChange& other) const;

  Point apply(const Point& x) const { return md_ * x; }
  Point apply_inverse(const Point& x) const { return invd_ * x; }

 private:
  DenseMatrix<Rational> m_;
  DenseMatrix<Rational> inv_;
  Rational det_;
  Eigen::MatrixXd md_;
  Eigen::MatrixXd invd_;
};

/// Free-function forms of the basic queries.
std::vector<double> affine_values(const PolyhedralSet& set, const Point& x);
bool contains_interior(const PolyhedralSet& set, const Point& x, double margin);

/// T^{-1}(P): normals become T^t normal, offsets are unchanged, and a point x'
/// of P corresponds to x = T^{-1} x'. Exact for rational data.
PolyhedralSet transform(const PolyhedralSet& set, const LinearChange& change);

/// {x_i >= 0}.
PolyhedralSet orthant(int n);
/// {x_i >= 0, size - sum x_i >= 0}.
PolyhedralSet standard_simplex(int n, const Rational& size = Rational(1));
/// Unbounded box-free set with no facets.
PolyhedralSet whole_space(int n);

}  // namespace toric
