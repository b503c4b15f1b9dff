#pragma once

// Independent reference computations used by the tests. Nothing here calls
// into the closed forms it is used to check.

#include <Eigen/Dense>

#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "toric/potential.hpp"
#include "toric/rational.hpp"

namespace oracle {

inline double rel(double x, double y) { return std::abs(x - y) / (1.0 + std::abs(y)); }

/// Central-difference Hessian of s.value with one Richardson step.
inline Eigen::MatrixXd fd_hessian(const toric::Potential& s, const toric::Point& x, double h) {
  const auto n = x.size();
  auto at = [&](double step) {
    Eigen::MatrixXd H(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < n; ++j) {
        auto f = [&](double si, double sj) {
          toric::Point p = x;
          p(i) += si * step;
          p(j) += sj * step;
          return s.value(p);
        };
        H(i, j) = (f(1, 1) - f(1, -1) - f(-1, 1) + f(-1, -1)) / (4 * step * step);
      }
    }
    return H;
  };
  return (4.0 * at(h / 2) - at(h)) / 3.0;
}

/// Central differences of s.gradient, symmetrized.
inline Eigen::MatrixXd fd_hessian_of_gradient(const toric::Potential& s, const toric::Point& x, double h) {
  const auto n = x.size();
  Eigen::MatrixXd H(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    toric::Point p = x, q = x;
    p(j) += h;
    q(j) -= h;
    H.col(j) = (s.gradient(p) - s.gradient(q)) / (2 * h);
  }
  return 0.5 * (H + H.transpose());
}

inline Eigen::VectorXd fd_gradient(const toric::Potential& s, const toric::Point& x, double h) {
  Eigen::VectorXd g(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    auto d = [&](double step) {
      toric::Point p = x, q = x;
      p(i) += step;
      q(i) -= step;
      return (s.value(p) - s.value(q)) / (2 * step);
    };
    g(i) = (4.0 * d(h / 2) - d(h)) / 3.0;
  }
  return g;
}

/// Gauss-Jordan inverse in long double with full pivoting.
inline Eigen::MatrixXd gauss_jordan_inverse(const Eigen::MatrixXd& m) {
  const auto n = static_cast<std::size_t>(m.rows());
  std::vector<std::vector<long double>> a(n, std::vector<long double>(2 * n, 0.0L));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    a[i][n + i] = 1.0L;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::fabs(a[r][col]) > std::fabs(a[piv][col])) piv = r;
    std::swap(a[piv], a[col]);
    const long double d = a[col][col];
    for (auto& v : a[col]) v /= d;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const long double f = a[r][col];
      for (std::size_t c = 0; c < 2 * n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  Eigen::MatrixXd inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      inv(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = static_cast<double>(a[i][n + j]);
  return inv;
}

/// Limit of g(t) as t -> 0 from samples at t = d, d/2, d/4, d/8 (Neville).
inline double extrapolate_to_zero(const std::function<double(double)>& g, double d) {
  std::vector<double> t, v;
  for (int k = 0; k < 4; ++k) {
    t.push_back(d / std::pow(2.0, k));
    v.push_back(g(t.back()));
  }
  for (std::size_t level = 1; level < t.size(); ++level) {
    for (std::size_t i = t.size() - 1; i >= level; --i) {
      v[i] = (t[i - level] * v[i] - t[i] * v[i - 1]) / (t[i - level] - t[i]);
    }
  }
  return v.back();
}

/// Random rational p/q with q in [1, 12] and value in (0, hi).
inline toric::Rational random_positive_rational(std::mt19937_64& rng, int hi) {
  std::uniform_int_distribution<long> qd(1, 12);
  const long q = qd(rng);
  std::uniform_int_distribution<long> pd(1, hi * q - 1);
  toric::Rational r(pd(rng), q);
  r.canonicalize();
  return r;
}

/// Random point with x_i > 0 and sum inside (lo, hi).
inline toric::Point random_radial_point(std::mt19937_64& rng, int n, double lo, double hi) {
  std::uniform_real_distribution<double> u(0.05, 1.0);
  std::uniform_real_distribution<double> rr(lo, hi);
  Eigen::VectorXd w(n);
  for (int i = 0; i < n; ++i) w(i) = u(rng);
  return w / w.sum() * rr(rng);
}

}  // namespace oracle
