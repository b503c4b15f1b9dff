#include "toric/potential.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <limits>
#include <string>

#include "toric/errors.hpp"

namespace toric {

namespace {

// l log l with the continuous extension 0 log 0 = 0.
double xlogx(double v) { return v == 0.0 ? 0.0 : v * std::log(v); }

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

PolyhedralSet node_domain(const Potential::Node& node, int& dim) {
  return std::visit(
      Overloaded{
          [&](const Potential::Canonical& c) {
            dim = c.set.dim();
            return c.set;
          },
          [&](const Potential::Radial& r) {
            dim = r.base.dim();
            if (r.profile.n != dim) throw DimensionMismatch("radial profile dimension differs from its base set");
            return r.base;
          },
          [&](const Potential::Dim2& d) {
            dim = 1;
            return d.domain;
          },
          [&](const Potential::Sum& s) {
            if (s.terms.empty()) throw std::invalid_argument("sum potential needs at least one term");
            dim = s.terms.front().dim();
            std::vector<Facet> facets;
            for (const auto& t : s.terms) {
              if (t.dim() != dim) throw DimensionMismatch("sum potential terms have different dimensions");
              for (const auto& f : t.domain().facets()) {
                bool seen = false;
                for (const auto& g : facets) seen = seen || g == f;
                if (!seen) facets.push_back(f);
              }
            }
            return PolyhedralSet(dim, std::move(facets), s.terms.front().domain().interior_point());
          },
          [&](const Potential::RadialPolynomial& p) {
            dim = p.dim;
            return whole_space(p.dim);
          },
          [&](const Potential::Pullback& p) {
            dim = p.inner.dim();
            if (p.change.dim() != dim) throw DimensionMismatch("pullback matrix and potential dimensions differ");
            return transform(p.inner.domain(), p.change);
          },
      },
      node);
}

// h(r) and h'(r) normalised to vanish at r0: h'(r) = int_{r0}^r h'', h(r) = int_{r0}^r (r - t) h''(t) dt.
std::pair<double, double> radial_h(const Potential::Radial& rad, double r) {
  using boost::math::quadrature::gauss_kronrod;
  const double r0 = rad.reference_r;
  if (r == r0) return {0.0, 0.0};
  auto hpp = [&](double t) { return h_second(rad.profile, t); };
  const double h1 = gauss_kronrod<double, 31>::integrate(hpp, r0, r, 15, 1e-13);
  const double h0 = gauss_kronrod<double, 31>::integrate([&](double t) { return (r - t) * hpp(t); }, r0, r, 15, 1e-13);
  return {h0, h1};
}

double value_impl(const Potential& s, const Point& x);
Eigen::VectorXd gradient_impl(const Potential& s, const Point& x);
Eigen::MatrixXd hessian_impl(const Potential& s, const Point& x);

double value_impl(const Potential& s, const Point& x) {
  return std::visit(
      Overloaded{
          [&](const Potential::Canonical& c) {
            const Eigen::VectorXd l = c.set.affine_values(x);
            double acc = 0.0;
            for (Eigen::Index i = 0; i < l.size(); ++i) acc += xlogx(l(i));
            return 0.5 * acc;
          },
          [&](const Potential::Radial& rad) {
            double acc = 0.0;
            for (Eigen::Index i = 0; i < x.size(); ++i) acc += xlogx(x(i));
            return 0.5 * (acc + radial_h(rad, x.sum()).first);
          },
          [&](const Potential::Dim2& d) { return dim2_closed_form(d.family, x(0)).value; },
          [&](const Potential::Sum& sum) {
            double acc = 0.0;
            for (const auto& t : sum.terms) acc += value_impl(t, x);
            return acc;
          },
          [&](const Potential::RadialPolynomial& p) { return 0.5 * p.p(x.sum()); },
          [&](const Potential::Pullback& p) { return value_impl(p.inner, p.change.apply(x)); },
      },
      s.node());
}

Eigen::VectorXd gradient_impl(const Potential& s, const Point& x) {
  return std::visit(
      Overloaded{
          [&](const Potential::Canonical& c) -> Eigen::VectorXd {
            const Eigen::VectorXd l = c.set.affine_values(x);
            Eigen::VectorXd g = Eigen::VectorXd::Zero(x.size());
            for (Eigen::Index i = 0; i < l.size(); ++i) {
              g += 0.5 * (std::log(l(i)) + 1.0) * c.set.normals().row(i).transpose();
            }
            return g;
          },
          [&](const Potential::Radial& rad) -> Eigen::VectorXd {
            const double h1 = radial_h(rad, x.sum()).second;
            Eigen::VectorXd g(x.size());
            for (Eigen::Index i = 0; i < x.size(); ++i) g(i) = 0.5 * (std::log(x(i)) + 1.0 + h1);
            return g;
          },
          [&](const Potential::Dim2& d) -> Eigen::VectorXd {
            return Eigen::VectorXd::Constant(1, dim2_closed_form(d.family, x(0)).first);
          },
          [&](const Potential::Sum& sum) -> Eigen::VectorXd {
            Eigen::VectorXd g = Eigen::VectorXd::Zero(x.size());
            for (const auto& t : sum.terms) g += gradient_impl(t, x);
            return g;
          },
          [&](const Potential::RadialPolynomial& p) -> Eigen::VectorXd {
            return Eigen::VectorXd::Constant(x.size(), 0.5 * p.p.derivative()(x.sum()));
          },
          [&](const Potential::Pullback& p) -> Eigen::VectorXd {
            return p.change.matrix_d().transpose() * gradient_impl(p.inner, p.change.apply(x));
          },
      },
      s.node());
}

Eigen::MatrixXd hessian_impl(const Potential& s, const Point& x) {
  const auto n = x.size();
  return std::visit(
      Overloaded{
          [&](const Potential::Canonical& c) -> Eigen::MatrixXd {
            const Eigen::VectorXd l = c.set.affine_values(x);
            Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);
            for (Eigen::Index i = 0; i < l.size(); ++i) {
              const auto nu = c.set.normals().row(i);
              h.noalias() += (0.5 / l(i)) * nu.transpose() * nu;
            }
            return h;
          },
          [&](const Potential::Radial& rad) -> Eigen::MatrixXd {
            const double hpp = h_second(rad.profile, x.sum());
            Eigen::MatrixXd h = Eigen::MatrixXd::Constant(n, n, 0.5 * hpp);
            for (Eigen::Index i = 0; i < n; ++i) h(i, i) += 0.5 / x(i);
            return h;
          },
          [&](const Potential::Dim2& d) -> Eigen::MatrixXd {
            return Eigen::MatrixXd::Constant(1, 1, dim2_closed_form(d.family, x(0)).second);
          },
          [&](const Potential::Sum& sum) -> Eigen::MatrixXd {
            Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);
            for (const auto& t : sum.terms) h += hessian_impl(t, x);
            return h;
          },
          [&](const Potential::RadialPolynomial& p) -> Eigen::MatrixXd {
            return Eigen::MatrixXd::Constant(n, n, 0.5 * p.p.derivative().derivative()(x.sum()));
          },
          [&](const Potential::Pullback& p) -> Eigen::MatrixXd {
            const Eigen::MatrixXd& t = p.change.matrix_d();
            return t.transpose() * hessian_impl(p.inner, p.change.apply(x)) * t;
          },
      },
      s.node());
}

bool value_accepts_closure(const Potential::Node& node) {
  return std::holds_alternative<Potential::Canonical>(node) || std::holds_alternative<Potential::Dim2>(node);
}

void require_interior(const Potential& s, const Point& x, const char* what) {
  if (x.size() != s.dim()) {
    throw DimensionMismatch(std::string(what) + ": point of length " + std::to_string(x.size()) +
                            " for a potential of dimension " + std::to_string(s.dim()));
  }
  if (!s.domain().contains_interior(x, 0.0)) {
    throw NotInterior(std::string(what) + ": point is on the boundary or outside the domain");
  }
}

}  // namespace

Potential::Potential(Node node) : node_(std::make_shared<const Node>(std::move(node))), dim_(0) {
  domain_ = std::make_shared<const PolyhedralSet>(node_domain(*node_, dim_));
}

const Potential::Node& Potential::node() const { return *node_; }

const Potential::Radial* Potential::as_radial() const { return std::get_if<Radial>(node_.get()); }

double Potential::value(const Point& x) const {
  if (value_accepts_closure(*node_)) {
    if (x.size() != dim_) throw DimensionMismatch("value: dimension mismatch");
    if ((domain_->affine_values(x).array() < 0).any()) throw NotInterior("value: point outside the domain");
  } else {
    require_interior(*this, x, "value");
  }
  return value_impl(*this, x);
}

Eigen::VectorXd Potential::gradient(const Point& x) const {
  require_interior(*this, x, "gradient");
  Eigen::VectorXd g = gradient_impl(*this, x);
  if (!g.allFinite()) throw DegenerateMetric("gradient: non-finite entry");
  return g;
}

Eigen::MatrixXd Potential::hessian(const Point& x) const {
  require_interior(*this, x, "hessian");
  Eigen::MatrixXd h = hessian_impl(*this, x);
  if (!h.allFinite()) throw DegenerateMetric("hessian: non-finite entry");
  return 0.5 * (h + h.transpose());
}

HessianSample Potential::hessian_sample(const Point& x) const {
  HessianSample out;
  out.point = x;
  out.S = hessian(x);
  const Eigen::PartialPivLU<Eigen::MatrixXd> lu(out.S);
  out.det_S = lu.determinant();
  if (out.det_S == 0.0 || !std::isfinite(out.det_S)) throw DegenerateMetric("hessian_sample: singular Hessian");
  out.S_inv = lu.inverse();
  out.S_inv = 0.5 * (out.S_inv + out.S_inv.transpose());
  return out;
}

Potential canonical_potential(const PolyhedralSet& set) { return Potential(Potential::Canonical{set}); }

Potential radial_potential(const RadialProfile& profile, const PolyhedralSet& base, RadialRange range) {
  const double r0 = base.interior_point().sum();
  return Potential(Potential::Radial{profile, base, range, r0});
}

Potential sum_potential(std::vector<Potential> terms) { return Potential(Potential::Sum{std::move(terms)}); }

Potential radial_polynomial_potential(int n, Polynomial<double> p) {
  return Potential(Potential::RadialPolynomial{n, std::move(p)});
}

Potential transform_potential(const Potential& s, const LinearChange& change) {
  return Potential(Potential::Pullback{s, change});
}

double eval(const Potential& s, const Point& x) { return s.value(x); }
Eigen::VectorXd grad(const Potential& s, const Point& x) { return s.gradient(x); }
HessianSample hessian(const Potential& s, const Point& x) { return s.hessian_sample(x); }

HessianSample radial_inverse_hessian(const RadialProfile& profile, const Point& x) {
  const auto n = x.size();
  if (n != profile.n) throw DimensionMismatch("radial_inverse_hessian: point length differs from profile n");
  if ((x.array() <= 0).any()) throw NotInterior("radial_inverse_hessian: all x_i must be positive");
  const double r = x.sum();
  const double q = profile.q(r);
  if (!(q > 0)) {
    throw DegenerateMetric("radial_inverse_hessian: 1 + r h'' is not positive at r = " + std::to_string(r));
  }
  const double hpp = h_second(profile, r);
  const double f = f_value(profile, r);
  HessianSample out;
  out.point = x;
  out.S = Eigen::MatrixXd::Constant(n, n, 0.5 * hpp);
  out.S_inv.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    out.S(i, i) += 0.5 / x(i);
    for (Eigen::Index j = 0; j < n; ++j) out.S_inv(i, j) = 2.0 * ((i == j ? x(i) : 0.0) - x(i) * x(j) * f);
  }
  double prod = 1.0;
  for (Eigen::Index i = 0; i < n; ++i) prod *= 2.0 * x(i);
  out.det_S = one_plus_r_h_second(profile, r) / prod;
  return out;
}

std::vector<std::complex<double>> complex_coordinates(const Potential& s, const Point& x, const Eigen::VectorXd& y) {
  if (y.size() != x.size()) throw DimensionMismatch("complex_coordinates: angle vector length differs");
  const Eigen::VectorXd g = s.gradient(x);
  std::vector<std::complex<double>> z(static_cast<std::size_t>(g.size()));
  for (Eigen::Index j = 0; j < g.size(); ++j) z[static_cast<std::size_t>(j)] = {g(j), y(j)};
  return z;
}

bool is_positive_definite(const Eigen::MatrixXd& m) {
  if (!m.allFinite()) return false;
  const Eigen::LLT<Eigen::MatrixXd> llt(m);
  return llt.info() == Eigen::Success;
}

}  // namespace toric
