#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

namespace toric {

using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

/// Parses "p/q", "p", or a plain decimal such as "-1.25" or "3e-2" exactly.
Rational parse_rational(std::string_view text);

/// Exact value of the shortest decimal that round-trips to `value`, so that
/// 0.1 becomes 1/10 rather than its binary expansion.
Rational rational_from_double(double value);

/// Exact binary value of `value` (every finite double is a dyadic rational).
Rational exact_rational(double value);

/// Canonical "p/q" form, or "p" when the denominator is one.
std::string to_string(const Rational& q);

inline double to_double(const Rational& q) { return q.get_d(); }

std::vector<double> to_doubles(const RationalVector& v);

/// q^k for k >= 0.
Rational pow(const Rational& q, unsigned k);

/// Converts between the two scalar types used by templated code.
template <class To, class From>
To scalar_cast(const From& v) {
  if constexpr (std::is_same_v<To, double> && std::is_same_v<From, Rational>) {
    return v.get_d();
  } else if constexpr (std::is_same_v<To, Rational> && std::is_same_v<From, double>) {
    return exact_rational(v);
  } else {
    return To(v);
  }
}

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

}  // namespace toric
