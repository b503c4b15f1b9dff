#pragma once

// Univariate polynomials and rational functions over double or Rational.
// Exact instantiations reduce rational functions by the polynomial gcd so
// repeated differentiation stays at low degree.

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

#include "toric/rational.hpp"

namespace toric {

template <class T>
class Polynomial {
 public:
  Polynomial() = default;
  /// Coefficients in ascending order: c[0] + c[1] r + ...
  explicit Polynomial(std::vector<T> coefficients) : c_(std::move(coefficients)) { trim(); }

  static Polynomial constant(const T& v) { return Polynomial(std::vector<T>{v}); }
  static Polynomial monomial(const T& coeff, std::size_t degree) {
    std::vector<T> c(degree + 1, T(0));
    c[degree] = coeff;
    return Polynomial(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<T>& coefficients() const { return c_; }
  T coefficient(std::size_t k) const { return k < c_.size() ? c_[k] : T(0); }
  T leading() const { return c_.empty() ? T(0) : c_.back(); }

  template <class U>
  U operator()(const U& r) const {
    U acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = U(acc * r + scalar_cast<U>(c_[i]));
    return acc;
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<T> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * T(static_cast<long>(k));
    return Polynomial(std::move(d));
  }

  friend Polynomial operator+(const Polynomial& p, const Polynomial& q) {
    std::vector<T> out(std::max(p.c_.size(), q.c_.size()), T(0));
    for (std::size_t i = 0; i < p.c_.size(); ++i) out[i] += p.c_[i];
    for (std::size_t i = 0; i < q.c_.size(); ++i) out[i] += q.c_[i];
    return Polynomial(std::move(out));
  }
  friend Polynomial operator-(const Polynomial& p) {
    std::vector<T> out(p.c_);
    for (auto& v : out) v = -v;
    return Polynomial(std::move(out));
  }
  friend Polynomial operator-(const Polynomial& p, const Polynomial& q) { return p + (-q); }
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    if (p.is_zero() || q.is_zero()) return {};
    std::vector<T> out(p.c_.size() + q.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < p.c_.size(); ++i)
      for (std::size_t j = 0; j < q.c_.size(); ++j) out[i + j] += p.c_[i] * q.c_[j];
    return Polynomial(std::move(out));
  }
  friend Polynomial operator*(const T& s, const Polynomial& p) { return constant(s) * p; }
  friend bool operator==(const Polynomial& p, const Polynomial& q) { return p.c_ == q.c_; }

  /// Euclidean division: returns (quotient, remainder) with deg remainder < deg divisor.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<T> rem(c_);
    const std::size_t dd = divisor.c_.size();
    if (rem.size() < dd) return {Polynomial{}, *this};
    std::vector<T> quo(rem.size() - dd + 1, T(0));
    const T lead = divisor.c_.back();
    for (std::size_t k = quo.size(); k-- > 0;) {
      const T factor = rem[k + dd - 1] / lead;
      quo[k] = factor;
      for (std::size_t j = 0; j < dd; ++j) rem[k + j] -= factor * divisor.c_[j];
    }
    rem.resize(dd - 1);
    return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
  }

  /// Divides by (r - root) exactly (synthetic division); returns quotient and remainder p(root).
  std::pair<Polynomial, T> deflate(const T& root) const {
    if (c_.empty()) return {Polynomial{}, T(0)};
    std::vector<T> quo(c_.size() - 1, T(0));
    T carry(0);
    for (std::size_t k = c_.size(); k-- > 0;) {
      carry = c_[k] + carry * root;
      if (k > 0) quo[k - 1] = carry;
    }
    return {Polynomial(std::move(quo)), carry};
  }

  Polynomial monic() const {
    if (c_.empty()) return {};
    std::vector<T> out(c_);
    const T lead = c_.back();
    for (auto& v : out) v /= lead;
    return Polynomial(std::move(out));
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
  }
  std::vector<T> c_;
};

/// Monic gcd over a field. Only meaningful for exact coefficient types.
template <class T>
Polynomial<T> gcd(Polynomial<T> a, Polynomial<T> b) {
  while (!b.is_zero()) {
    auto r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

template <class T>
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(Polynomial<T>::constant(T(1))) {}
  RationalFunction(Polynomial<T> num, Polynomial<T> den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    reduce();
  }
  static RationalFunction polynomial(Polynomial<T> p) {
    return RationalFunction(std::move(p), Polynomial<T>::constant(T(1)));
  }

  const Polynomial<T>& numerator() const { return num_; }
  const Polynomial<T>& denominator() const { return den_; }

  template <class U>
  U operator()(const U& r) const {
    const U d = den_(r);
    if (d == U(0)) throw std::domain_error("rational function evaluated at a pole");
    return U(num_(r) / d);
  }

  RationalFunction derivative() const {
    return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
  }

  friend RationalFunction operator+(const RationalFunction& p, const RationalFunction& q) {
    return RationalFunction(p.num_ * q.den_ + q.num_ * p.den_, p.den_ * q.den_);
  }
  friend RationalFunction operator*(const RationalFunction& p, const RationalFunction& q) {
    return RationalFunction(p.num_ * q.num_, p.den_ * q.den_);
  }
  friend RationalFunction operator/(const RationalFunction& p, const RationalFunction& q) {
    if (q.num_.is_zero()) throw std::domain_error("division by the zero rational function");
    return RationalFunction(p.num_ * q.den_, p.den_ * q.num_);
  }

 private:
  void reduce() {
    if constexpr (!std::is_floating_point_v<T>) {
      if (num_.is_zero()) {
        den_ = Polynomial<T>::constant(T(1));
        return;
      }
      const auto g = gcd(num_, den_);
      if (g.degree() > 0) {
        num_ = num_.divmod(g).first;
        den_ = den_.divmod(g).first;
      }
      // Normalise to a monic denominator.
      const T lead = den_.leading();
      if (lead != T(1)) {
        num_ = Polynomial<T>::constant(T(1) / lead) * num_;
        den_ = den_.monic();
      }
    }
  }

  Polynomial<T> num_;
  Polynomial<T> den_;
};

}  // namespace toric
