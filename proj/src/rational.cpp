#include "toric/rational.hpp"

#include <charconv>
#include <cmath>
#include <regex>
#include <stdexcept>

#include "toric/errors.hpp"

namespace toric {

namespace {

const std::regex kFraction(R"(\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*)");
const std::regex kDecimal(R"(\s*([+-]?)(\d*)(?:\.(\d*))?(?:[eE]([+-]?\d+))?\s*)");

Rational power_of_ten(long exponent) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
  if (exponent >= 0) return Rational(p);
  return Rational(mpz_class(1), p);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string s(text);
  std::smatch match;
  if (std::regex_match(s, match, kFraction)) {
    mpz_class num(match[1].str(), 10);
    mpz_class den = match[2].matched ? mpz_class(match[2].str(), 10) : mpz_class(1);
    if (den == 0) throw SchemaError("zero denominator in rational '" + s + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  if (std::regex_match(s, match, kDecimal) && (match[2].length() > 0 || match[3].length() > 0)) {
    const std::string digits = match[2].str() + match[3].str();
    long exponent = match[4].matched ? std::stol(match[4].str()) : 0;
    exponent -= static_cast<long>(match[3].length());
    Rational q(mpz_class(digits.empty() ? "0" : digits, 10));
    q *= power_of_ten(exponent);
    if (match[1].str() == "-") q = -q;
    q.canonicalize();
    return q;
  }
  throw SchemaError("not a rational number: '" + s + "'");
}

Rational rational_from_double(double value) {
  if (!std::isfinite(value)) throw SchemaError("non-finite number where a rational is required");
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc()) throw std::runtime_error("to_chars failed");
  return parse_rational(std::string_view(buf, static_cast<size_t>(end - buf)));
}

Rational exact_rational(double value) {
  if (!std::isfinite(value)) throw SchemaError("non-finite number where a rational is required");
  Rational q(value);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_str();
}

std::vector<double> to_doubles(const RationalVector& v) {
  std::vector<double> out;
  out.reserve(v.size());
  for (const auto& q : v) out.push_back(q.get_d());
  return out;
}

Rational pow(const Rational& q, unsigned k) {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), q.get_num_mpz_t(), k);
  mpz_pow_ui(den.get_mpz_t(), q.get_den_mpz_t(), k);
  return Rational(num, den);
}

}  // namespace toric
