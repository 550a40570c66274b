#include <gtest/gtest.h>

#include <numeric>

#include "wbptree/bigint.hpp"
#include "wbptree/number_theory.hpp"

namespace {

using namespace wbp;

std::uint64_t naive_totient(std::uint64_t n) {
  std::uint64_t c = 0;
  for (std::uint64_t k = 1; k <= n; ++k) c += std::gcd(k, n) == 1 ? 1 : 0;
  return c;
}

int naive_moebius(std::uint64_t n) {
  int sign = 1;
  for (std::uint64_t p = 2; p <= n; ++p) {
    if (n % p != 0) continue;
    bool prime = true;
    for (std::uint64_t r = 2; r * r <= p; ++r) prime = prime && p % r != 0;
    if (!prime) continue;
    if ((n / p) % p == 0) return 0;
    sign = -sign;
  }
  return sign;
}

TEST(NumberTheory, TotientMatchesCoprimeCount) {
  for (std::uint64_t n = 1; n <= 400; ++n) EXPECT_EQ(totient(n), naive_totient(n)) << n;
  EXPECT_EQ(totient(3), 2u);
}

TEST(NumberTheory, MoebiusMatchesDefinition) {
  for (std::uint64_t n = 1; n <= 400; ++n) EXPECT_EQ(moebius(n), naive_moebius(n)) << n;
  EXPECT_EQ(moebius(1), 1);
  EXPECT_EQ(moebius(4), 0);
}

TEST(NumberTheory, DivisorsAscendingAndComplete) {
  for (std::uint64_t n = 1; n <= 400; ++n) {
    std::vector<std::uint64_t> expect;
    for (std::uint64_t d = 1; d <= n; ++d) {
      if (n % d == 0) expect.push_back(d);
    }
    EXPECT_EQ(divisors(n), expect) << n;
  }
}

TEST(NumberTheory, DivisorSumIdentities) {
  for (std::uint64_t n = 1; n <= 2000; ++n) {
    std::uint64_t phi_sum = 0;
    int mu_sum = 0;
    for (std::uint64_t d : divisors(n)) {
      phi_sum += totient(d);
      mu_sum += moebius(d);
    }
    EXPECT_EQ(phi_sum, n);
    EXPECT_EQ(mu_sum, n == 1 ? 1 : 0);
  }
}

TEST(NumberTheory, ZeroIsRejected) {
  EXPECT_THROW(totient(0), DomainError);
  EXPECT_THROW(moebius(0), DomainError);
  EXPECT_THROW(divisors(0), DomainError);
}

TEST(NumberTheory, GcdWithZero) {
  EXPECT_EQ(gcd(7, 0), 7u);
  EXPECT_EQ(gcd(0, 5), 5u);
  EXPECT_EQ(gcd(12, 18), 6u);
}

TEST(BigArithmetic, FactorialAndBinomial) {
  EXPECT_EQ(factorial(0), 1);
  EXPECT_EQ(factorial(20), BigInt("2432902008176640000"));
  EXPECT_EQ(factorial(25), BigInt("15511210043330985984000000"));
  for (unsigned n = 0; n <= 30; ++n) {
    BigInt row = 0;
    for (unsigned k = 0; k <= n; ++k) row += binomial(n, k);
    EXPECT_EQ(row, BigInt(1) << n);
  }
}

TEST(BigArithmetic, RationalPowers) {
  EXPECT_EQ(pow(Rational(2, 3), 3), Rational(8, 27));
  EXPECT_EQ(pow(Rational(5), -1), Rational(1, 5));
  EXPECT_EQ(pow(Rational(7, 2), 0), Rational(1));
  EXPECT_THROW(require_integral(Rational(1, 2), "half"), ConsistencyError);
  EXPECT_EQ(require_integral(Rational(6, 3), "two"), 2);
}

}  // namespace
