#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <span>
#include <string>
#include <vector>

#include "wbptree/bigint.hpp"
#include "wbptree/error.hpp"
#include "wbptree/number_theory.hpp"
#include "wbptree/partition.hpp"
#include "wbptree/passport.hpp"

namespace wbp {

namespace detail {

inline void require_countable(const Passport& xi) {
  if (xi.black().empty() || xi.white().empty()) {
    throw DomainError("passport '" + to_string(xi) + "' has an empty side");
  }
  if (!xi.is_balanced()) {
    throw DomainError("passport '" + to_string(xi) + "' is not balanced");
  }
}

inline void require_star_free(const Passport& xi) {
  if (xi.has_star()) {
    throw DomainError("passport '" + to_string(xi) + "' carries a star label");
  }
}

// The tree count of a simple passport depends only on its weights, since
// all labels are distinct anyway.
inline std::string weight_key(const Passport& xi) {
  std::string key;
  for (Color c : {Color::black, Color::white}) {
    for (const auto& e : xi.side(c)) key += std::to_string(e.weight) + ',';
    key += '|';
  }
  return key;
}

inline BigInt count_ftree_uncached(const Passport& xi) {
  const std::size_t total = xi.size();
  // Partitions grouped by their multiset of block sizes.
  std::map<std::vector<std::uint32_t>, std::uint64_t> by_shape;
  std::vector<std::uint32_t> sizes;
  for_each_partition_mask(xi, [&](std::span<const std::uint64_t> masks) {
    sizes.clear();
    for (std::uint64_t m : masks) {
      sizes.push_back(static_cast<std::uint32_t>(std::popcount(m)));
    }
    std::sort(sizes.begin(), sizes.end());
    ++by_shape[sizes];
  });
  // Each n-partition contributes (-1)^(n-1) (N-1)^(n-2) prod (|B_i|-1)!.
  // Summed with one spare factor of (N-1) so the sum stays integral.
  const BigInt base = BigInt(total - 1);
  BigInt sum = 0;
  for (const auto& [shape, multiplicity] : by_shape) {
    const std::size_t n = shape.size();
    BigInt term = multiplicity;
    for (std::size_t i = 1; i < n; ++i) term *= base;
    for (std::uint32_t s : shape) term *= factorial(s - 1);
    if (n % 2 == 0) {
      sum -= term;
    } else {
      sum += term;
    }
  }
  return require_integral(Rational(sum, base),
                          "labelled tree count of " + to_string(xi));
}

}  // namespace detail

/// Number of labelled trees with a simple passport, summed over all
/// partitions of the passport. Memoized per weight multiset; safe to call
/// concurrently.
inline BigInt count_ftree(const Passport& xi) {
  if (!is_simple(xi)) {
    throw DomainError("count_ftree: passport '" + to_string(xi) +
                      "' is not simple");
  }
  detail::require_countable(xi);
  if (xi.size() < 2) throw DomainError("count_ftree: need at least two points");

  static std::mutex mutex;
  static std::map<std::string, BigInt> memo;
  const std::string key = detail::weight_key(xi);
  {
    std::lock_guard<std::mutex> lock(mutex);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
  }
  BigInt value = detail::count_ftree_uncached(xi);
  std::lock_guard<std::mutex> lock(mutex);
  return memo.try_emplace(key, std::move(value)).first->second;
}

/// G(d) = #FTree(xi/d) / (d * p(xi/d)).
inline Rational big_g(const Passport& xi, std::uint64_t d) {
  detail::require_countable(xi);
  detail::require_star_free(xi);
  const auto ds = divisor_set(xi);
  if (std::find(ds.begin(), ds.end(), d) == ds.end()) {
    throw DomainError("big_g: d = " + std::to_string(d) +
                      " is not in the divisor set of " + to_string(xi));
  }
  const Passport sector = divide(xi, d);
  return Rational(count_ftree(fill(sector)), BigInt(d) * p_factor(sector));
}

/// Number of distinct trees with passport xi.
inline BigInt count_trees(const Passport& xi) {
  detail::require_countable(xi);
  detail::require_star_free(xi);
  Rational total = big_g(xi, 1);
  for (std::uint64_t g : g_vector(xi)) {
    for (std::uint64_t d : divisors(g)) {
      if (d > 1) total += Rational(totient(d)) * big_g(xi, d);
    }
  }
  return require_integral(total, "tree count of " + to_string(xi));
}

/// Number of trees with passport xi whose automorphism group has order d.
inline BigInt count_trees_sym(const Passport& xi, std::uint64_t d) {
  detail::require_countable(xi);
  detail::require_star_free(xi);
  if (d == 0) throw DomainError("count_trees_sym: d must be >= 1");
  const auto ds = divisor_set(xi);
  if (std::find(ds.begin(), ds.end(), d) == ds.end()) return 0;
  Rational sum = 0;
  for (std::uint64_t e : ds) {
    if (e % d != 0) continue;
    const int mu = moebius(e / d);
    if (mu != 0) sum += Rational(mu) * big_g(xi, e);
  }
  const BigInt count = require_integral(
      sum * d, "symmetry count of " + to_string(xi) + " at order " +
                   std::to_string(d));
  if (count < 0) {
    throw ConsistencyError("negative symmetry count for " + to_string(xi));
  }
  return count;
}

struct CountReport {
  Passport passport;
  std::map<std::uint64_t, Rational> G;   // over the divisor set
  BigInt total;
  std::map<std::uint64_t, BigInt> by_symmetry;  // nonzero orders only
};

/// Full count for one passport, with the internal identities checked.
inline CountReport report(const Passport& xi) {
  CountReport r;
  r.passport = xi;
  const auto ds = divisor_set(xi);
  for (std::uint64_t d : ds) r.G[d] = big_g(xi, d);
  r.total = count_trees(xi);

  BigInt sum = 0;
  for (std::uint64_t d : ds) {
    BigInt c = count_trees_sym(xi, d);
    sum += c;
    if (c != 0) r.by_symmetry[d] = std::move(c);
  }
  if (sum != r.total) {
    throw ConsistencyError("symmetry counts of " + to_string(xi) + " sum to " +
                           sum.str() + ", expected " + r.total.str());
  }
  // G(d) = sum over multiples e of d of #Tree(xi, e) / e.
  for (std::uint64_t d : ds) {
    Rational s = 0;
    for (const auto& [e, c] : r.by_symmetry) {
      if (e % d == 0) s += Rational(c, BigInt(e));
    }
    if (s != r.G[d]) {
      throw ConsistencyError("G(" + std::to_string(d) + ") of " + to_string(xi) +
                             " does not match its symmetry counts");
    }
  }
  return r;
}

}  // namespace wbp
