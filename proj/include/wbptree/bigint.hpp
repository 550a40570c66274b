#pragma once

#include <cstdint>
#include <mutex>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "wbptree/error.hpp"

namespace wbp {

using BigInt = boost::multiprecision::cpp_int;
/// Always stored reduced with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numerator_of(const Rational& r) {
  return boost::multiprecision::numerator(r);
}
inline BigInt denominator_of(const Rational& r) {
  return boost::multiprecision::denominator(r);
}

inline bool is_integral(const Rational& r) { return denominator_of(r) == 1; }

/// Returns r as an integer; throws ConsistencyError otherwise.
inline BigInt require_integral(const Rational& r, const std::string& what) {
  if (!is_integral(r)) {
    throw ConsistencyError(what + " is not an integer: " + r.str());
  }
  return numerator_of(r);
}

/// "133/15", or "11" when the denominator is 1.
inline std::string to_string(const Rational& r) { return r.str(); }
inline std::string to_string(const BigInt& n) { return n.str(); }

/// n! from a process-wide memo table. Safe to call concurrently.
inline BigInt factorial(std::uint64_t n) {
  static std::mutex mutex;
  static std::vector<BigInt> table{BigInt(1)};
  std::lock_guard<std::mutex> lock(mutex);
  while (table.size() <= n) {
    table.push_back(table.back() * BigInt(table.size()));
  }
  return table[n];
}

inline BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  return factorial(n) / (factorial(k) * factorial(n - k));
}

inline Rational pow(const Rational& base, std::int64_t exponent) {
  Rational result = 1;
  Rational b = exponent >= 0 ? base : Rational(1) / base;
  for (std::int64_t e = exponent >= 0 ? exponent : -exponent; e > 0; --e) {
    result *= b;
  }
  return result;
}

}  // namespace wbp
