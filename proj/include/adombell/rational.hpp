#pragma once

// Exact integer and rational scalars plus the small combinatorial helpers
// (factorials, falling factorials, binomials) every other header needs.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace adombell {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer factorial(unsigned n) {
  Integer r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

/// x (x-1) ... (x-k+1); an empty product for k = 0.
inline Rational falling_factorial(const Rational& x, unsigned k) {
  Rational r = 1;
  for (unsigned i = 0; i < k; ++i) r *= x - i;
  return r;
}

inline Integer falling_factorial(std::int64_t x, unsigned k) {
  Integer r = 1;
  for (unsigned i = 0; i < k; ++i) r *= Integer(x) - i;
  return r;
}

inline Integer binomial(unsigned m, unsigned k) {
  if (k > m) return 0;
  return falling_factorial(static_cast<std::int64_t>(m), k) / factorial(k);
}

inline bool is_integer(const Rational& r) {
  return boost::multiprecision::denominator(r) == 1;
}

inline std::string to_string(const Rational& r) { return r.str(); }

namespace detail {

inline Integer parse_integer(std::string_view s) {
  std::size_t i = 0;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) throw std::invalid_argument("malformed integer: '" + std::string(s) + "'");
  for (std::size_t j = i; j < s.size(); ++j) {
    if (s[j] < '0' || s[j] > '9') {
      throw std::invalid_argument("malformed integer: '" + std::string(s) + "'");
    }
  }
  Integer v(std::string(s.substr(i)));
  return s[0] == '-' ? Integer(-v) : v;
}

}  // namespace detail

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed
/// input or a zero denominator.
inline Rational parse_rational(std::string_view s) {
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(detail::parse_integer(s));
  Integer num = detail::parse_integer(s.substr(0, slash));
  Integer den = detail::parse_integer(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(s) + "'");
  return Rational(num, den);
}

}  // namespace adombell
