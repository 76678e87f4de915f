#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace cyfib {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline std::string to_string(const Integer& v) { return v.str(); }

inline std::string to_string(const Rational& v) {
  const Integer num = boost::multiprecision::numerator(v);
  const Integer den = boost::multiprecision::denominator(v);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

inline bool is_integral(const Rational& v) {
  return boost::multiprecision::denominator(v) == 1;
}

/// Numerator of an integral rational; throws if `v` has a denominator.
inline Integer as_integer(const Rational& v) {
  if (!is_integral(v)) throw std::domain_error("rational " + to_string(v) + " is not an integer");
  return boost::multiprecision::numerator(v);
}

inline std::optional<std::int64_t> to_int64(const Integer& v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    return std::nullopt;
  return v.convert_to<std::int64_t>();
}

/// Largest integer <= v.
inline Integer floor(const Rational& v) {
  const Integer num = boost::multiprecision::numerator(v);
  const Integer den = boost::multiprecision::denominator(v);
  Integer q = num / den;  // truncates toward zero
  if (num < 0 && q * den != num) --q;
  return q;
}

/// Exact quotient n / d when d divides n.
inline std::optional<Integer> exact_div(const Integer& n, const Integer& d) {
  if (d == 0) return std::nullopt;
  if (n % d != 0) return std::nullopt;
  return n / d;
}

inline Integer gcd(Integer x, Integer y) {
  if (x < 0) x = -x;
  if (y < 0) y = -y;
  while (y != 0) {
    Integer t = x % y;
    x = y;
    y = t;
  }
  return x;
}

/// Positive divisors of n > 0 in increasing order, by trial division.
inline std::vector<Integer> positive_divisors(const Integer& n) {
  if (n <= 0) throw std::domain_error("positive_divisors: argument must be positive");
  std::vector<Integer> low, high;
  for (Integer i = 1; i * i <= n; ++i) {
    if (n % i != 0) continue;
    low.push_back(i);
    const Integer j = n / i;
    if (j != i) high.push_back(j);
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

}  // namespace cyfib
