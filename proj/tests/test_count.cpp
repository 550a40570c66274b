#include <gtest/gtest.h>

#include <thread>

#include "wbptree/count.hpp"
#include "wbptree/oracle.hpp"

namespace {

using namespace wbp;

Passport P(const char* s) { return parse_passport(s); }

TEST(CountFtree, Values) {
  EXPECT_EQ(count_ftree(fill(P("2^2 4^3 | 8^2"))), 48);
  EXPECT_EQ(count_ftree(P("4_1 2_1 2_* | 8_1")), 2);
  EXPECT_EQ(count_ftree(P("5 | 5")), 1);
  EXPECT_EQ(count_ftree(fill(P("1^3 | 3"))), 2);
}

TEST(CountFtree, NondecomposableIsFactorial) {
  // Sides with coprime structure admit no proper balanced sub-block.
  EXPECT_EQ(count_ftree(P("5 3 | 8")), factorial(1));
  EXPECT_EQ(count_ftree(P("7 5 | 9 3")), factorial(2));
  EXPECT_EQ(count_ftree(fill(P("7^3 | 3^7"))), factorial(8));
}

TEST(CountFtree, AgreesWithDirectLabelledCount) {
  for (const char* s : {"2^2 4^3 | 8^2", "1^3 | 3", "2^3 | 3^2", "1^2 2 | 2^2",
                        "3 1^3 | 2^3", "2^2 1^2 | 3^2", "1^4 | 2^2", "3^2 | 2^3"}) {
    const Passport f = fill(P(s));
    EXPECT_EQ(count_ftree(f), oracle::count_labeled_direct(f)) << s;
  }
}

TEST(CountFtree, Preconditions) {
  EXPECT_THROW(count_ftree(P("2^2 | 4")), DomainError);
  EXPECT_THROW(count_ftree(P("2 | 3")), DomainError);
  EXPECT_THROW(count_ftree(P("|")), DomainError);
}

TEST(CountFtree, ConcurrentCallersAgree) {
  const std::vector<Passport> inputs = {fill(P("2^2 4^3 | 8^2")), fill(P("3^5 | 5^3")),
                                        fill(P("2^4 | 4^2")), fill(P("6^4 | 4^6"))};
  std::vector<BigInt> serial;
  for (const auto& x : inputs) serial.push_back(detail::count_ftree_uncached(x));
  std::vector<std::vector<BigInt>> results(4);
  std::vector<std::thread> threads;
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([&, t] {
      for (int round = 0; round < 3; ++round) {
        for (const auto& x : inputs) results[t].push_back(count_ftree(x));
      }
    });
  }
  for (auto& th : threads) th.join();
  for (const auto& r : results) {
    for (std::size_t i = 0; i < r.size(); ++i) EXPECT_EQ(r[i], serial[i % inputs.size()]);
  }
}

TEST(BigG, Values) {
  EXPECT_EQ(big_g(P("6^10 | 10^6"), 1), Rational(133, 15));
  EXPECT_EQ(big_g(P("6^10 | 10^6"), 3), Rational(2, 3));
  EXPECT_EQ(big_g(P("6^10 | 10^6"), 5), Rational(1, 5));
  EXPECT_EQ(big_g(P("2^2 4^3 | 8^2"), 2), Rational(1));
  EXPECT_EQ(big_g(P("3^7 | 7^3"), 3), Rational(1, 3));
  EXPECT_EQ(big_g(P("3^7 | 7^3"), 1), Rational(4, 3));
  EXPECT_THROW(big_g(P("6^10 | 10^6"), 2), DomainError);
}

TEST(CountTrees, Values) {
  EXPECT_EQ(count_trees(P("6^10 | 10^6")), 11);
  EXPECT_EQ(count_trees(P("2^2 4^3 | 8^2")), 3);
  EXPECT_EQ(count_trees(P("3^7 | 7^3")), 2);
  EXPECT_EQ(count_trees(P("1^3 | 3")), 1);
  EXPECT_EQ(count_trees(P("4 | 4")), 1);
  for (std::uint64_t p = 1; p <= 50; ++p) {
    const Passport star(std::vector<LabeledWeight>(p, LabeledWeight{1, {}}),
                        {LabeledWeight{p, {}}});
    EXPECT_EQ(count_trees(star), 1) << p;
  }
}

TEST(CountTrees, Preconditions) {
  EXPECT_THROW(count_trees(P("2 | 3")), DomainError);
  EXPECT_THROW(count_trees(P("| 3")), DomainError);
  EXPECT_THROW(count_trees(P("3 1 | 2_* 2")), DomainError);
}

TEST(CountTreesSym, Values) {
  const Passport xi = P("6^10 | 10^6");
  EXPECT_EQ(count_trees_sym(xi, 1), 8);
  EXPECT_EQ(count_trees_sym(xi, 3), 2);
  EXPECT_EQ(count_trees_sym(xi, 5), 1);
  EXPECT_EQ(count_trees_sym(xi, 2), 0);
  EXPECT_EQ(count_trees_sym(xi, 15), 0);
  EXPECT_EQ(count_trees_sym(P("3^7 | 7^3"), 3), 1);
  EXPECT_EQ(count_trees_sym(P("3^7 | 7^3"), 1), 1);
  EXPECT_EQ(count_trees_sym(P("2^2 4^3 | 8^2"), 2), 2);
  EXPECT_EQ(count_trees_sym(P("2^2 4^3 | 8^2"), 1), 1);
  EXPECT_THROW(count_trees_sym(xi, 0), DomainError);
}

TEST(Report, GoldenAndIdentities) {
  const CountReport r = report(P("6^10 | 10^6"));
  EXPECT_EQ(r.G, (std::map<std::uint64_t, Rational>{
                     {1, Rational(133, 15)}, {3, Rational(2, 3)}, {5, Rational(1, 5)}}));
  EXPECT_EQ(r.total, 11);
  EXPECT_EQ(r.by_symmetry, (std::map<std::uint64_t, BigInt>{{1, 8}, {3, 2}, {5, 1}}));

  const CountReport edge = report(P("7 | 7"));
  EXPECT_EQ(edge.total, 1);
  EXPECT_EQ(edge.by_symmetry, (std::map<std::uint64_t, BigInt>{{1, 1}}));

  const CountReport star = report(P("1^3 | 3"));
  EXPECT_EQ(star.total, 1);
  EXPECT_EQ(star.by_symmetry, (std::map<std::uint64_t, BigInt>{{3, 1}}));
}

TEST(Report, RecompositionOnSweep) {
  for (const char* s : {"2^6 | 3^4", "1^6 | 2^3", "2^4 1^4 | 4^3", "4^9 | 9^4",
                        "1^12 | 12", "3^4 | 2^6", "2^3 1^6 | 3^4"}) {
    const CountReport r = report(P(s));
    BigInt sum = 0;
    for (const auto& [e, c] : r.by_symmetry) {
      EXPECT_GT(c, 0);
      sum += c;
    }
    EXPECT_EQ(sum, r.total) << s;
  }
}

}  // namespace
