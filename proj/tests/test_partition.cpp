#include <gtest/gtest.h>

#include <random>
#include <set>

#include "wbptree/partition.hpp"

namespace {

using namespace wbp;

using MaskSet = std::set<std::vector<std::uint64_t>>;

std::vector<std::int64_t> signed_weights(const Passport& xi) {
  std::vector<std::int64_t> w;
  for (const auto& e : xi.black()) w.push_back(static_cast<std::int64_t>(e.weight));
  for (const auto& e : xi.white()) w.push_back(-static_cast<std::int64_t>(e.weight));
  return w;
}

// Every set partition as a restricted growth string, filtered by balance.
MaskSet brute_force(const Passport& xi) {
  const auto w = signed_weights(xi);
  const std::size_t n = w.size();
  MaskSet out;
  std::vector<std::size_t> rgs(n, 0);
  while (true) {
    std::size_t blocks = 0;
    for (std::size_t b : rgs) blocks = std::max(blocks, b + 1);
    std::vector<std::uint64_t> masks(blocks, 0);
    std::vector<std::int64_t> sums(blocks, 0);
    for (std::size_t i = 0; i < n; ++i) {
      masks[rgs[i]] |= std::uint64_t{1} << i;
      sums[rgs[i]] += w[i];
    }
    if (std::all_of(sums.begin(), sums.end(), [](std::int64_t s) { return s == 0; })) {
      std::sort(masks.begin(), masks.end());
      out.insert(masks);
    }
    // Next restricted growth string.
    std::size_t i = n;
    while (i-- > 1) {
      std::size_t prefix_max = 0;
      for (std::size_t j = 0; j < i; ++j) prefix_max = std::max(prefix_max, rgs[j]);
      if (rgs[i] <= prefix_max) {
        ++rgs[i];
        std::fill(rgs.begin() + static_cast<std::ptrdiff_t>(i) + 1, rgs.end(), 0);
        break;
      }
    }
    if (i == 0 || i == SIZE_MAX) break;
  }
  return out;
}

std::vector<std::vector<std::uint64_t>> produced(const Passport& xi) {
  std::vector<std::vector<std::uint64_t>> out;
  for_each_partition_mask(xi, [&](std::span<const std::uint64_t> m) {
    out.emplace_back(m.begin(), m.end());
  });
  return out;
}

// Half of the draws are balanced by construction.
Passport random_simple(std::mt19937& rng, std::size_t max_points) {
  std::uniform_int_distribution<std::size_t> count(1, max_points - 1);
  std::uniform_int_distribution<Weight> weight(1, 4);
  const std::size_t nb = count(rng);
  std::vector<LabeledWeight> b, w;
  Weight total = 0;
  for (std::size_t i = 0; i < nb; ++i) {
    b.push_back(LabeledWeight{weight(rng), {}});
    total += b.back().weight;
  }
  const std::size_t room = max_points - nb;
  if (rng() % 2 == 0) {
    const std::size_t nw = std::min<std::size_t>(room, std::max<std::size_t>(1, count(rng)));
    for (std::size_t i = 0; i < nw; ++i) w.push_back(LabeledWeight{weight(rng), {}});
  } else {
    while (total > 0) {
      const Weight x = w.size() + 1 == room ? total
                                            : std::min(total, weight(rng));
      w.push_back(LabeledWeight{x, {}});
      total -= x;
    }
  }
  return fill(Passport(b, w));
}

TEST(Partition, MatchesBruteForceUpToEightPoints) {
  std::mt19937 rng(2024);
  int balanced_seen = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const Passport xi = random_simple(rng, 8);
    ASSERT_LE(xi.size(), 8u);
    const auto got = produced(xi);
    MaskSet canon;
    for (auto m : got) {
      std::sort(m.begin(), m.end());
      EXPECT_TRUE(canon.insert(m).second) << "duplicate partition of " << to_string(xi);
    }
    EXPECT_EQ(canon, brute_force(xi)) << to_string(xi);
    if (xi.is_balanced()) {
      ++balanced_seen;
      ASSERT_FALSE(got.empty());
      ASSERT_EQ(got.front().size(), 1u) << "trivial partition must come first";
    }
  }
  EXPECT_GT(balanced_seen, 20);
}

TEST(Partition, FilledExampleHasSixSplits) {
  const auto parts = enumerate_partitions(fill(parse_passport("2^2 4^3 | 8^2")));
  ASSERT_EQ(parts.size(), 7u);
  EXPECT_EQ(parts.front().blocks.size(), 1u);
  for (std::size_t i = 1; i < parts.size(); ++i) {
    EXPECT_EQ(parts[i].blocks.size(), 2u);
    for (const auto& b : parts[i].blocks) {
      EXPECT_TRUE(b.is_balanced());
      EXPECT_FALSE(b.black().empty());
      EXPECT_FALSE(b.white().empty());
    }
  }
}

TEST(Partition, BlocksReassembleParent) {
  const Passport xi = fill(parse_passport("1^3 2^2 | 3 2 1^2"));
  for (const auto& part : enumerate_partitions(xi)) {
    std::vector<LabeledWeight> b, w;
    for (const auto& blk : part.blocks) {
      EXPECT_TRUE(blk.is_balanced());
      b.insert(b.end(), blk.black().begin(), blk.black().end());
      w.insert(w.end(), blk.white().begin(), blk.white().end());
    }
    EXPECT_EQ(Passport(b, w), xi);
  }
}

TEST(Partition, NondecomposableHasOnlyTrivial) {
  for (const char* s : {"5 3 | 8", "7 | 4 3", "3 2 | 4 1"}) {
    EXPECT_EQ(enumerate_partitions(parse_passport(s)).size(), 1u) << s;
  }
}

TEST(Partition, JoinedBlocksSplit) {
  const Passport xi = parse_passport("2_1 2_2 | 1_1 1_2 1_3 1_4");
  const auto parts = enumerate_partitions(xi);
  bool found = false;
  for (const auto& p : parts) found = found || p.blocks.size() == 2;
  EXPECT_TRUE(found);
  EXPECT_EQ(parts.size(), brute_force(xi).size());
}

TEST(Partition, RequiresSimple) {
  EXPECT_THROW(enumerate_partitions(parse_passport("2^2 | 4")), DomainError);
}

}  // namespace
