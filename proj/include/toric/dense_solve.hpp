#pragma once

// Small dense Gaussian elimination shared by the exact (Rational) and the
// floating-point code paths.

#include <cmath>
#include <cstddef>
#include <type_traits>
#include <utility>
#include <vector>

#include "toric/errors.hpp"

namespace toric {

template <class T>
using DenseMatrix = std::vector<std::vector<T>>;

namespace detail {

template <class T>
T magnitude(const T& v) {
  if constexpr (std::is_floating_point_v<T>) {
    return std::abs(v);
  } else {
    return v < 0 ? T(-v) : v;
  }
}

// Row index of the pivot for column `col`, or `rows` if the column is zero
// below the diagonal. Floating point uses largest magnitude; exact types only
// need a nonzero entry but largest magnitude is kept for symmetry.
template <class T>
std::size_t choose_pivot(const DenseMatrix<T>& a, std::size_t col) {
  std::size_t best = a.size();
  T best_mag(0);
  for (std::size_t r = col; r < a.size(); ++r) {
    T mag = magnitude(a[r][col]);
    if (mag > best_mag) {
      best_mag = mag;
      best = r;
    }
  }
  return best;
}

}  // namespace detail

/// Solves a x = b by Gaussian elimination with partial pivoting.
/// Throws SingularSystem when a pivot column vanishes.
template <class T>
std::vector<T> solve_dense(DenseMatrix<T> a, std::vector<T> b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw DimensionMismatch("solve_dense: rhs size does not match matrix");
  for (const auto& row : a) {
    if (row.size() != n) throw DimensionMismatch("solve_dense: matrix is not square");
  }
  for (std::size_t col = 0; col < n; ++col) {
    const std::size_t p = detail::choose_pivot(a, col);
    if (p == n) throw SingularSystem("solve_dense: singular matrix (zero pivot column)");
    std::swap(a[p], a[col]);
    std::swap(b[p], b[col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a[r][col] == T(0)) continue;
      const T factor = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= factor * a[col][c];
      b[r] -= factor * b[col];
    }
  }
  std::vector<T> x(n, T(0));
  for (std::size_t i = n; i-- > 0;) {
    T acc = b[i];
    for (std::size_t c = i + 1; c < n; ++c) acc -= a[i][c] * x[c];
    x[i] = acc / a[i][i];
  }
  return x;
}

template <class T>
T determinant(DenseMatrix<T> a) {
  const std::size_t n = a.size();
  T det(1);
  for (std::size_t col = 0; col < n; ++col) {
    const std::size_t p = detail::choose_pivot(a, col);
    if (p == n) return T(0);
    if (p != col) {
      std::swap(a[p], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a[r][col] == T(0)) continue;
      const T factor = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= factor * a[col][c];
    }
  }
  return det;
}

/// Gauss-Jordan inverse. Throws SingularSystem for singular input.
template <class T>
DenseMatrix<T> inverse(DenseMatrix<T> a) {
  const std::size_t n = a.size();
  DenseMatrix<T> inv(n, std::vector<T>(n, T(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = T(1);
  for (std::size_t col = 0; col < n; ++col) {
    const std::size_t p = detail::choose_pivot(a, col);
    if (p == n) throw SingularSystem("inverse: singular matrix");
    std::swap(a[p], a[col]);
    std::swap(inv[p], inv[col]);
    const T pivot = a[col][col];
    for (std::size_t c = 0; c < n; ++c) {
      a[col][c] /= pivot;
      inv[col][c] /= pivot;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == T(0)) continue;
      const T factor = a[r][col];
      for (std::size_t c = 0; c < n; ++c) {
        a[r][c] -= factor * a[col][c];
        inv[r][c] -= factor * inv[col][c];
      }
    }
  }
  return inv;
}

/// Max-norm of a x - b.
template <class T>
double residual_max_norm(const DenseMatrix<T>& a, const std::vector<T>& x, const std::vector<T>& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    T acc = -b[i];
    for (std::size_t j = 0; j < x.size(); ++j) acc += a[i][j] * x[j];
    double v;
    if constexpr (std::is_floating_point_v<T>) {
      v = std::abs(acc);
    } else {
      v = std::abs(acc.get_d());
    }
    if (v > worst) worst = v;
  }
  return worst;
}

}  // namespace toric
