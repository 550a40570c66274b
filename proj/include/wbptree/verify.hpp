#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "wbptree/bigint.hpp"
#include "wbptree/closedform.hpp"
#include "wbptree/count.hpp"
#include "wbptree/oracle.hpp"
#include "wbptree/passport.hpp"

// Formula-versus-oracle sweeps shared by the CLI and the test suite.

namespace wbp::verify {

namespace detail {

// Non-increasing sequences of parts <= max_part summing to total.
inline void weight_partitions(std::uint64_t total, Weight max_part,
                              std::vector<Weight>& prefix,
                              std::vector<std::vector<Weight>>& out) {
  if (total == 0) {
    out.push_back(prefix);
    return;
  }
  for (Weight w = std::min<Weight>(max_part, total); w >= 1; --w) {
    prefix.push_back(w);
    weight_partitions(total - w, w, prefix, out);
    prefix.pop_back();
  }
}

inline std::vector<LabeledWeight> plain(const std::vector<Weight>& ws) {
  std::vector<LabeledWeight> out;
  for (Weight w : ws) out.push_back(LabeledWeight{w, {}});
  return out;
}

}  // namespace detail

/// Every balanced star-free passport whose sides each sum to at most
/// max_side_weight, with every weight at most max_part.
inline std::vector<Passport> balanced_corpus(std::uint64_t max_side_weight,
                                             Weight max_part = 6) {
  std::vector<Passport> out;
  for (std::uint64_t s = 1; s <= max_side_weight; ++s) {
    std::vector<std::vector<Weight>> sides;
    std::vector<Weight> prefix;
    detail::weight_partitions(s, max_part, prefix, sides);
    for (const auto& b : sides) {
      for (const auto& w : sides) {
        out.emplace_back(detail::plain(b), detail::plain(w));
      }
    }
  }
  return out;
}

template <typename K, typename V>
std::string map_text(const std::map<K, V>& m) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [k, v] : m) {
    os << (first ? "" : ", ") << k << ':' << v;
    first = false;
  }
  os << '}';
  return os.str();
}

struct Result {
  std::size_t checked = 0;
  std::size_t skipped = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

/// Census, labelled double count and division identities for one passport.
/// Appends a message per violated identity.
inline void check_passport(const Passport& xi, std::size_t max_points,
                           std::vector<std::string>& failures) {
  const std::string name = to_string(xi);
  auto fail = [&](const std::string& what) { failures.push_back(name + ": " + what); };

  const CountReport r = report(xi);
  const oracle::SymmetryCensus census = oracle::symmetry_census(xi, max_points);

  std::map<std::uint64_t, BigInt> seen;
  BigInt oracle_total = 0;
  for (const auto& [e, n] : census) {
    seen[e] = n;
    oracle_total += n;
  }
  if (seen != r.by_symmetry) {
    fail("oracle census " + map_text(census) + " != formula " + map_text(r.by_symmetry));
  }
  if (oracle_total != r.total) {
    fail("oracle total " + oracle_total.str() + " != formula " + r.total.str());
  }

  const auto ds = divisor_set(xi);
  for (const auto& [e, n] : census) {
    if (std::find(ds.begin(), ds.end(), e) == ds.end()) {
      fail("symmetry order " + std::to_string(e) + " outside the divisor set");
    }
  }

  // Labelled double count: p(xi) #Tree(xi, e) = e #FTree(xi, e).
  const oracle::SymmetryCensus labeled = oracle::labeled_census(fill(xi), max_points);
  const BigInt p = p_factor(xi);
  for (const auto& [e, n] : census) {
    const auto it = labeled.find(e);
    const BigInt lab = it == labeled.end() ? BigInt(0) : BigInt(it->second);
    if (p * BigInt(n) != BigInt(e) * lab) {
      fail("labelled count at order " + std::to_string(e) + ": p*" + std::to_string(n) +
           " != " + std::to_string(e) + "*" + lab.str());
    }
  }
  for (const auto& [e, n] : labeled) {
    if (!census.contains(e)) fail("labelled trees at absent order " + std::to_string(e));
  }

  // Division: e-symmetric trees over xi/d match d*e-symmetric trees over xi.
  for (std::uint64_t d : ds) {
    if (d == 1) continue;
    const oracle::SymmetryCensus sector =
        oracle::symmetry_census(divide(xi, d), max_points);
    std::map<std::size_t, std::uint64_t> lifted;
    for (const auto& [e, n] : sector) lifted[d * e] = n;
    std::map<std::size_t, std::uint64_t> expected;
    for (const auto& [e, n] : census) {
      if (e % d == 0) expected[e] = n;
    }
    if (lifted != expected) {
      fail("division by " + std::to_string(d) + ": " + map_text(lifted) + " != " +
           map_text(expected));
    }
  }
}

/// Closed form against the generic engine for (q^p | p^q).
inline void check_pq(std::uint64_t p, std::uint64_t q, std::vector<std::string>& failures) {
  const std::string name = "(" + std::to_string(p) + "," + std::to_string(q) + ")";
  const Passport xi = closedform::pq_passport(p, q);
  const BigInt closed = closedform::count_closed(p, q);
  const BigInt generic = count_trees(xi);
  if (closed != generic) {
    failures.push_back(name + ": closed form " + closed.str() + " != generic " + generic.str());
  }
  const auto ds = closedform::closed_divisors(p, q);
  if (ds != divisor_set(xi)) failures.push_back(name + ": divisor sets differ");
  for (std::uint64_t d : ds) {
    const Rational a = closedform::closed_g(p, q, d);
    const Rational b = big_g(xi, d);
    if (a != b) {
      failures.push_back(name + ": G(" + std::to_string(d) + ") closed " + a.str() +
                         " != generic " + b.str());
    }
  }
}

/// (a) every balanced passport with side weight <= max_weight and parts <= 6
/// against the oracle; (b) every (p, q) with p + q <= max_weight against the
/// generic engine. Passports with more than max_points points are skipped
/// and counted as such.
inline Result sweep(std::uint64_t max_weight,
                    std::size_t max_points = oracle::kDefaultMaxPoints,
                    const std::function<void(const std::string&)>& progress = {}) {
  Result res;
  for (const Passport& xi : balanced_corpus(max_weight)) {
    if (progress) progress(to_string(xi));
    try {
      if (xi.size() > max_points) {
        ++res.skipped;
        continue;
      }
      check_passport(xi, max_points, res.failures);
    } catch (const ConsistencyError& e) {
      res.failures.push_back(to_string(xi) + ": " + e.what());
    }
    ++res.checked;
  }
  for (std::uint64_t sum = 3; sum <= max_weight; ++sum) {
    for (std::uint64_t q = 1; 2 * q < sum; ++q) {
      const std::uint64_t p = sum - q;
      if (progress) progress("(" + std::to_string(p) + "," + std::to_string(q) + ")");
      try {
        check_pq(p, q, res.failures);
      } catch (const ConsistencyError& e) {
        res.failures.push_back(std::string("(p,q) sweep: ") + e.what());
      }
      ++res.checked;
    }
  }
  return res;
}

}  // namespace wbp::verify
