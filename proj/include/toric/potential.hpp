#pragma once

// Symplectic potentials s on the interior of a polyhedral set, with
// closed-form gradient and Hessian S = Hess_x(s). The Kahler metric in
// action-angle coordinates is diag(S, S^{-1}).

#include <Eigen/Dense>

#include <complex>
#include <memory>
#include <variant>
#include <vector>

#include "toric/dim2_family.hpp"
#include "toric/polynomial.hpp"
#include "toric/polytope.hpp"
#include "toric/radial_profile.hpp"

namespace toric {

/// Relative tolerance for S * S^{-1} = Id on dense n <= 8 systems.
inline constexpr double kTolLinalg = 1e-10;

struct HessianSample {
  Point point;
  Eigen::MatrixXd S;
  Eigen::MatrixXd S_inv;
  double det_S = 0.0;
};

class Potential {
 public:
  /// s = 1/2 sum_i l_i log l_i over the facets of `set`.
  struct Canonical {
    PolyhedralSet set;
  };
  /// s = 1/2 (sum_i x_i log x_i + h(r)) with h'' from the profile; `base` must
  /// contain the coordinate facets x_i >= 0.
  struct Radial {
    RadialProfile profile;
    PolyhedralSet base;
    RadialRange range;
    /// Radius at which h and h' are normalised to zero.
    double reference_r;
  };
  struct Dim2 {
    Dim2Family family;
    PolyhedralSet domain;
  };
  struct Sum {
    std::vector<Potential> terms;
  };
  /// Smooth radial correction s = 1/2 p(r) with p a polynomial in r.
  struct RadialPolynomial {
    int dim;
    Polynomial<double> p;
  };
  /// s(x) = inner(T x).
  struct Pullback;

  using Node = std::variant<Canonical, Radial, Dim2, Sum, RadialPolynomial, Pullback>;

  explicit Potential(Node node);

  const Node& node() const;
  int dim() const { return dim_; }
  const PolyhedralSet& domain() const { return *domain_; }

  /// s(x). Canonical and catalogue log terms use 0 log 0 = 0, so points on the
  /// boundary are accepted for them; everything else needs an interior point.
  double value(const Point& x) const;
  Eigen::VectorXd gradient(const Point& x) const;
  /// Closed-form Hessian, symmetric by construction. Throws NotInterior off the
  /// open domain and DegenerateMetric for non-finite entries.
  Eigen::MatrixXd hessian(const Point& x) const;
  /// Hessian together with a numerically computed inverse and determinant.
  HessianSample hessian_sample(const Point& x) const;

  /// The radial node at the root, if this potential is a radial one.
  const Radial* as_radial() const;

 private:
  std::shared_ptr<const Node> node_;
  std::shared_ptr<const PolyhedralSet> domain_;
  int dim_;
};

struct Potential::Pullback {
  Potential inner;
  LinearChange change;
};

/// Guillemin's potential 1/2 sum l_i log l_i.
Potential canonical_potential(const PolyhedralSet& set);

/// Radial potential on `base` without any boundary consistency check.
/// `range` defaults to (0, unbounded).
Potential radial_potential(const RadialProfile& profile, const PolyhedralSet& base, RadialRange range = {});

Potential sum_potential(std::vector<Potential> terms);

/// 1/2 p(r) on R^n.
Potential radial_polynomial_potential(int n, Polynomial<double> p);

/// Pullback s = s' o T on transform(domain(s'), T); S = T^t (S' o T) T.
Potential transform_potential(const Potential& s, const LinearChange& change);

/// Convenience wrappers matching the free-function operation names.
double eval(const Potential& s, const Point& x);
Eigen::VectorXd grad(const Potential& s, const Point& x);
HessianSample hessian(const Potential& s, const Point& x);

/// Closed-form S, S^{-1} = (2(delta_ij x_i - x_i x_j f(r))) and
/// det S = (1 + r h'')/(2^n x_1...x_n) for 1/2(sum x log x + h(r)).
/// Throws DegenerateMetric when 1 + r h'' <= 0 or at a pole.
HessianSample radial_inverse_hessian(const RadialProfile& profile, const Point& x);

/// z_j = ds/dx_j + i y_j.
std::vector<std::complex<double>> complex_coordinates(const Potential& s, const Point& x, const Eigen::VectorXd& y);

/// Cholesky-based positive-definiteness test.
bool is_positive_definite(const Eigen::MatrixXd& m);

}  // namespace toric
