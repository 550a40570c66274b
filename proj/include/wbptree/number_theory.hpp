#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "wbptree/error.hpp"

namespace wbp {

/// gcd with gcd(x, 0) = x.
inline std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  return std::gcd(a, b);
}

namespace detail {

inline void require_positive(std::uint64_t n, const char* what) {
  if (n == 0) throw DomainError(std::string(what) + ": argument must be >= 1");
}

/// Prime factorization by trial division, as (prime, exponent) pairs.
inline std::vector<std::pair<std::uint64_t, unsigned>> factorize(
    std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> factors;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    factors.emplace_back(p, e);
  }
  if (n > 1) factors.emplace_back(n, 1);
  return factors;
}

}  // namespace detail

inline std::uint64_t totient(std::uint64_t n) {
  detail::require_positive(n, "totient");
  std::uint64_t result = n;
  for (auto [p, e] : detail::factorize(n)) {
    result = result / p * (p - 1);
  }
  return result;
}

inline int moebius(std::uint64_t n) {
  detail::require_positive(n, "moebius");
  int sign = 1;
  for (auto [p, e] : detail::factorize(n)) {
    if (e > 1) return 0;
    sign = -sign;
  }
  return sign;
}

/// Positive divisors of n in ascending order.
inline std::vector<std::uint64_t> divisors(std::uint64_t n) {
  detail::require_positive(n, "divisors");
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace wbp
