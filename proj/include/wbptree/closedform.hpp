#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "wbptree/bigint.hpp"
#include "wbptree/error.hpp"
#include "wbptree/number_theory.hpp"
#include "wbptree/passport.hpp"

// Closed-form evaluation of the tree count for the passport (q^p | p^q):
// p black points of weight q and q white points of weight p.

namespace wbp::closedform {

struct PqParams {
  std::uint64_t p;
  std::uint64_t q;
  std::uint64_t alpha;  // p + q - 1
  std::uint64_t g0;     // gcd(p, q)
  std::uint64_t g1;     // gcd(p - 1, q)
  std::uint64_t g2;     // gcd(p, q - 1)
};

inline PqParams make_params(std::uint64_t p, std::uint64_t q) {
  if (!(q >= 1 && p > q)) {
    throw DomainError("closed form needs p > q >= 1, got p = " +
                      std::to_string(p) + ", q = " + std::to_string(q));
  }
  PqParams params{p, q, p + q - 1, gcd(p, q), gcd(p - 1, q), gcd(p, q - 1)};
  // d | q and d | q - 1 cannot both hold for d > 1.
  if (gcd(params.g1, params.g2) != 1) {
    throw ConsistencyError("g1 and g2 share a divisor");
  }
  return params;
}

/// The passport (q^p | p^q).
inline Passport pq_passport(std::uint64_t p, std::uint64_t q) {
  return Passport(std::vector<LabeledWeight>(p, LabeledWeight{q, {}}),
                  std::vector<LabeledWeight>(q, LabeledWeight{p, {}}));
}

/// Which g the divisor d belongs to: g1 puts the symmetric center on a
/// black point, g2 on a white point.
enum class Side { g1, g2 };

inline Side side_of(const PqParams& params, std::uint64_t d) {
  if (d > 1 && params.g1 % d == 0) return Side::g1;
  if (d > 1 && params.g2 % d == 0) return Side::g2;
  throw DomainError("d = " + std::to_string(d) + " divides neither g1 nor g2");
}

/// Partition type (n_1, ..., n_{g0}) with sum j n_j = g0. n[j-1] holds n_j.
struct TypeVector1 {
  std::vector<std::uint64_t> n;
  bool operator==(const TypeVector1&) const = default;
};

/// Partition type (s; n_1, ..., n_{g0}) with s + sum j n_j = floor(g0 / d).
struct TypeVectorD {
  std::uint64_t s;
  std::vector<std::uint64_t> n;
  bool operator==(const TypeVectorD&) const = default;
};

namespace detail {

// All n of length `len` with sum_j j n_j == target; n_1 largest first.
inline void compositions(std::uint64_t target, std::size_t len,
                         const std::function<void(const std::vector<std::uint64_t>&)>& emit) {
  std::vector<std::uint64_t> n(len, 0);
  std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t j,
                                                            std::uint64_t left) {
    if (j == len) {
      if (left == 0) emit(n);
      return;
    }
    const std::uint64_t part = j + 1;
    for (std::uint64_t k = left / part + 1; k-- > 0;) {
      n[j] = k;
      rec(j + 1, left - k * part);
    }
    n[j] = 0;
  };
  if (len == 0) {
    if (target == 0) emit(n);
    return;
  }
  rec(0, target);
}

inline BigInt to_int(const Rational& r, const char* what) {
  if (!is_integral(r) || r < 0) {
    throw ConsistencyError(std::string("non-integral binomial argument: ") +
                           what + " = " + r.str());
  }
  return numerator_of(r);
}

inline std::uint64_t as_u64(const BigInt& v) {
  return static_cast<std::uint64_t>(v);
}

// (j(p+q)/g0 - 1)! / ((jp/g0)! (jq/g0)!): one j-block of the partition.
inline Rational block_factor(const PqParams& pr, std::uint64_t j) {
  const std::uint64_t bp = j * pr.p / pr.g0;
  const std::uint64_t bq = j * pr.q / pr.g0;
  return Rational(factorial(bp + bq - 1), factorial(bp) * factorial(bq));
}

inline Rational block_product(const PqParams& pr,
                              const std::vector<std::uint64_t>& n) {
  Rational prod = 1;
  for (std::size_t j = 1; j <= n.size(); ++j) {
    if (n[j - 1] == 0) continue;
    prod *= pow(block_factor(pr, j), static_cast<std::int64_t>(n[j - 1])) /
            Rational(factorial(n[j - 1]));
  }
  return prod;
}

inline std::uint64_t block_count(const std::vector<std::uint64_t>& n) {
  std::uint64_t total = 0;
  for (std::uint64_t v : n) total += v;
  return total;
}

// s + {g0/d}, the scaled size of the block holding the symmetric center.
inline Rational center_scale(const PqParams& pr, std::uint64_t s, std::uint64_t d) {
  return Rational(s) + Rational(pr.g0 % d, d);
}

}  // namespace detail

inline std::vector<TypeVector1> admissible_types_1(std::uint64_t p,
                                                   std::uint64_t q) {
  const PqParams pr = make_params(p, q);
  std::vector<TypeVector1> out;
  detail::compositions(pr.g0, pr.g0, [&](const std::vector<std::uint64_t>& n) {
    out.push_back(TypeVector1{n});
  });
  return out;
}

inline std::vector<TypeVectorD> admissible_types_d(std::uint64_t p, std::uint64_t q,
                                                   std::uint64_t d) {
  const PqParams pr = make_params(p, q);
  side_of(pr, d);
  const std::uint64_t target = pr.g0 / d;
  std::vector<TypeVectorD> out;
  for (std::uint64_t s = target + 1; s-- > 0;) {
    detail::compositions(target - s, pr.g0,
                         [&](const std::vector<std::uint64_t>& n) {
                           out.push_back(TypeVectorD{s, n});
                         });
  }
  return out;
}

/// Contribution of all partitions of Fill(q^p | p^q) with type t to G(1).
inline Rational coeff_c1(const TypeVector1& t, std::uint64_t p, std::uint64_t q) {
  const PqParams pr = make_params(p, q);
  const auto n = static_cast<std::int64_t>(detail::block_count(t.n));
  const Rational sign = (n - 1) % 2 == 0 ? 1 : -1;
  return sign * pow(Rational(pr.alpha), n - 2) * detail::block_product(pr, t.n);
}

/// Contribution of all partitions of Fill(xi/d) with type t to G(d).
inline Rational coeff_cd(const TypeVectorD& t, std::uint64_t p, std::uint64_t q,
                         std::uint64_t d, Side side) {
  const PqParams pr = make_params(p, q);
  if (side_of(pr, d) != side) {
    throw DomainError("d = " + std::to_string(d) + " is not on the requested side");
  }
  const auto n = static_cast<std::int64_t>(1 + detail::block_count(t.n));
  const Rational scale = detail::center_scale(pr, t.s, d);
  const BigInt top = detail::to_int(
      scale * Rational(pr.p + pr.q, pr.g0) - Rational(1, d), "center block size");
  const BigInt bottom = detail::to_int(
      scale * Rational(side == Side::g1 ? pr.q : pr.p, pr.g0),
      "center block white/black count");
  const Rational sign = (n - 1) % 2 == 0 ? 1 : -1;
  return sign * pow(Rational(pr.alpha), n - 2) /
         pow(Rational(d), n - 1) *
         Rational(binomial(detail::as_u64(top), detail::as_u64(bottom))) *
         detail::block_product(pr, t.n);
}

/// Number of partitions of Fill(q^p | p^q) of type t.
inline BigInt partition_type_count_1(const TypeVector1& t, std::uint64_t p,
                                     std::uint64_t q) {
  const PqParams pr = make_params(p, q);
  Rational count = Rational(factorial(pr.p) * factorial(pr.q));
  for (std::size_t j = 1; j <= t.n.size(); ++j) {
    const std::uint64_t nj = t.n[j - 1];
    if (nj == 0) continue;
    count /= Rational(factorial(nj));
    count /= pow(Rational(factorial(j * pr.p / pr.g0) * factorial(j * pr.q / pr.g0)),
                 static_cast<std::int64_t>(nj));
  }
  return require_integral(count, "partition type count");
}

/// Number of partitions of Fill(xi/d) of type t; the side follows from d.
inline BigInt partition_type_count_d(const TypeVectorD& t, std::uint64_t p,
                                     std::uint64_t q, std::uint64_t d) {
  const PqParams pr = make_params(p, q);
  const Side side = side_of(pr, d);
  const Rational scale = detail::center_scale(pr, t.s, d);
  // Unstarred black and white points of xi/d, and how many of each sit in
  // the block with the symmetric center.
  std::uint64_t black_total, white_total;
  Rational black_center, white_center;
  if (side == Side::g1) {
    black_total = (pr.p - 1) / d;
    white_total = pr.q / d;
    black_center = scale * Rational(pr.p, pr.g0) - Rational(1, d);
    white_center = scale * Rational(pr.q, pr.g0);
  } else {
    black_total = pr.p / d;
    white_total = (pr.q - 1) / d;
    black_center = scale * Rational(pr.p, pr.g0);
    white_center = scale * Rational(pr.q, pr.g0) - Rational(1, d);
  }
  Rational count = Rational(factorial(black_total) * factorial(white_total));
  count /= Rational(factorial(detail::as_u64(detail::to_int(black_center, "black center count"))));
  count /= Rational(factorial(detail::as_u64(detail::to_int(white_center, "white center count"))));
  for (std::size_t j = 1; j <= t.n.size(); ++j) {
    const std::uint64_t nj = t.n[j - 1];
    if (nj == 0) continue;
    count /= Rational(factorial(nj));
    count /= pow(Rational(factorial(j * pr.p / pr.g0) * factorial(j * pr.q / pr.g0)),
                 static_cast<std::int64_t>(nj));
  }
  return require_integral(count, "partition type count");
}

/// G(d) summed over partition types.
inline Rational closed_g(std::uint64_t p, std::uint64_t q, std::uint64_t d) {
  Rational g = 0;
  if (d == 1) {
    for (const auto& t : admissible_types_1(p, q)) g += coeff_c1(t, p, q);
    return g;
  }
  const Side side = side_of(make_params(p, q), d);
  for (const auto& t : admissible_types_d(p, q, d)) g += coeff_cd(t, p, q, d, side);
  return g;
}

/// G(d) when gcd(p, q) = 1, where every filled sector is nondecomposable.
inline Rational closed_g_coprime(std::uint64_t p, std::uint64_t q, std::uint64_t d) {
  const PqParams pr = make_params(p, q);
  if (pr.g0 != 1) throw DomainError("closed_g_coprime needs gcd(p, q) = 1");
  if (d == 1) {
    return Rational(factorial(p + q - 2), factorial(p) * factorial(q));
  }
  const Side side = side_of(pr, d);
  const std::uint64_t chosen = side == Side::g1 ? q / d : p / d;
  return Rational(binomial(pr.alpha / d, chosen), BigInt(pr.alpha));
}

/// All d with G(d) defined, ascending: 1 and every d > 1 dividing g1 or g2.
inline std::vector<std::uint64_t> closed_divisors(std::uint64_t p, std::uint64_t q) {
  const PqParams pr = make_params(p, q);
  std::vector<std::uint64_t> out{1};
  for (std::uint64_t g : {pr.g1, pr.g2}) {
    for (std::uint64_t d : divisors(g)) {
      if (d > 1) out.push_back(d);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Number of trees with passport (q^p | p^q).
inline BigInt count_closed(std::uint64_t p, std::uint64_t q) {
  const PqParams pr = make_params(p, q);
  Rational total = closed_g(p, q, 1);
  for (std::uint64_t g : {pr.g1, pr.g2}) {
    for (std::uint64_t d : divisors(g)) {
      if (d > 1) total += Rational(totient(d)) * closed_g(p, q, d);
    }
  }
  return require_integral(total, "closed-form count for p = " + std::to_string(p) +
                                     ", q = " + std::to_string(q));
}

}  // namespace wbp::closedform
