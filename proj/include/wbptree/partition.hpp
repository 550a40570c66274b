#pragma once

#include <bit>
#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <span>
#include <vector>

#include "wbptree/error.hpp"
#include "wbptree/passport.hpp"

namespace wbp {

/// A split of a simple passport into blocks, each balanced on its own.
/// Block order carries no meaning.
struct PassportPartition {
  std::vector<Passport> blocks;
};

namespace detail {

template <typename Visitor>
class PartitionSearch {
 public:
  PartitionSearch(std::vector<std::int64_t> signed_weights, Visitor& visit)
      : w_(std::move(signed_weights)), visit_(visit) {}

  void run() {
    const std::size_t n = w_.size();
    const std::uint64_t all = n == 64 ? ~std::uint64_t{0}
                                      : (std::uint64_t{1} << n) - 1;
    if (n > 0) next_block(all);
  }

 private:
  // The lowest unassigned element anchors the next block, so blocks are
  // produced in a fixed order and never permuted.
  void next_block(std::uint64_t remaining) {
    if (remaining == 0) {
      visit_(std::span<const std::uint64_t>(blocks_));
      return;
    }
    const int anchor = std::countr_zero(remaining);
    const std::uint64_t anchor_bit = std::uint64_t{1} << anchor;

    Level level;
    for (std::uint64_t rest = remaining & ~anchor_bit; rest != 0;
         rest &= rest - 1) {
      level.candidates.push_back(std::countr_zero(rest));
    }
    const std::size_t m = level.candidates.size();
    level.black_after.assign(m + 1, 0);
    level.white_after.assign(m + 1, 0);
    for (std::size_t i = m; i-- > 0;) {
      const std::int64_t x = w_[level.candidates[i]];
      level.black_after[i] = level.black_after[i + 1] + (x > 0 ? x : 0);
      level.white_after[i] = level.white_after[i + 1] + (x < 0 ? -x : 0);
    }
    extend(level, 0, w_[anchor], anchor_bit, remaining);
  }

  struct Level {
    std::vector<int> candidates;
    std::vector<std::int64_t> black_after;
    std::vector<std::int64_t> white_after;
  };

  // Inclusion is tried before exclusion, so the very first block offered
  // is the whole remainder; at the top level that is the trivial partition.
  void extend(const Level& level, std::size_t i, std::int64_t diff,
              std::uint64_t block, std::uint64_t remaining) {
    if (diff > level.white_after[i] || -diff > level.black_after[i]) return;
    if (i == level.candidates.size()) {
      // diff == 0 here by the bound above.
      blocks_.push_back(block);
      next_block(remaining & ~block);
      blocks_.pop_back();
      return;
    }
    const int e = level.candidates[i];
    extend(level, i + 1, diff + w_[e], block | (std::uint64_t{1} << e),
           remaining);
    extend(level, i + 1, diff, block, remaining);
  }

  std::vector<std::int64_t> w_;
  Visitor& visit_;
  std::vector<std::uint64_t> blocks_;
};

}  // namespace detail

/// Visits every partition of a simple passport exactly once, starting with
/// the trivial one. Elements are indexed black-first in canonical order;
/// the visitor receives one bitmask per block.
template <typename Visitor>
void for_each_partition_mask(const Passport& xi, Visitor&& visit) {
  if (!is_simple(xi)) {
    throw DomainError("partitions are only defined here for simple passports");
  }
  if (xi.size() > 64) throw DomainError("passport too large to partition");
  std::vector<std::int64_t> w;
  for (const auto& e : xi.black()) w.push_back(static_cast<std::int64_t>(e.weight));
  for (const auto& e : xi.white()) w.push_back(-static_cast<std::int64_t>(e.weight));

  // Searching heaviest-first keeps the balance bounds tight: a heavy anchor
  // fixes most of its block before the many light elements are tried.
  std::vector<std::size_t> order(w.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::abs(w[a]) > std::abs(w[b]);
  });
  std::vector<std::int64_t> sorted(w.size());
  for (std::size_t i = 0; i < order.size(); ++i) sorted[i] = w[order[i]];

  std::vector<std::uint64_t> original;
  auto translate = [&](std::span<const std::uint64_t> masks) {
    original.clear();
    for (std::uint64_t m : masks) {
      std::uint64_t out = 0;
      for (; m != 0; m &= m - 1) out |= std::uint64_t{1} << order[std::countr_zero(m)];
      original.push_back(out);
    }
    visit(std::span<const std::uint64_t>(original));
  };
  detail::PartitionSearch<decltype(translate)> search(std::move(sorted), translate);
  search.run();
}

/// Materializes a block mask as a passport.
inline Passport block_passport(const Passport& xi, std::uint64_t mask) {
  std::vector<LabeledWeight> black, white;
  const std::size_t nb = xi.black().size();
  for (std::size_t i = 0; i < xi.size(); ++i) {
    if (!(mask >> i & 1)) continue;
    if (i < nb) {
      black.push_back(xi.black()[i]);
    } else {
      white.push_back(xi.white()[i - nb]);
    }
  }
  return Passport(std::move(black), std::move(white));
}

/// Every partition of a simple passport; the trivial partition comes first.
inline std::vector<PassportPartition> enumerate_partitions(const Passport& xi) {
  std::vector<PassportPartition> out;
  for_each_partition_mask(xi, [&](std::span<const std::uint64_t> masks) {
    PassportPartition part;
    for (std::uint64_t m : masks) part.blocks.push_back(block_passport(xi, m));
    out.push_back(std::move(part));
  });
  return out;
}

}  // namespace wbp
