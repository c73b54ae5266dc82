#include <gtest/gtest.h>

#include <cmath>
#include <cstdint>
#include <vector>

#include "oracles.hpp"
#include "radix/product_engine.hpp"

using namespace radix;

namespace {

BigInt slow_partial_product(std::uint64_t n, std::uint64_t cutoff) {
  BigInt out = 1;
  for (std::uint64_t b = 2; b <= cutoff; ++b) {
    const long long e = oracle::slow_nu(n, b);
    for (long long i = 0; i < e; ++i) out *= static_cast<unsigned long>(b);
  }
  return out;
}

// prod_k C(n, k) from Pascal's triangle.
BigInt pascal_product(std::uint64_t n) {
  std::vector<BigInt> row{1};
  for (std::uint64_t r = 1; r <= n; ++r) {
    std::vector<BigInt> next(r + 1, 1);
    for (std::uint64_t k = 1; k < r; ++k) next[k] = row[k - 1] + row[k];
    row = std::move(next);
  }
  BigInt out = 1;
  for (const auto& c : row) out *= c;
  return out;
}

std::uint64_t valuation(BigInt v, std::uint64_t b) {
  std::uint64_t k = 0;
  while (v != 0 && mpz_divisible_ui_p(v.get_mpz_t(), b)) {
    v /= static_cast<unsigned long>(b);
    ++k;
  }
  return k;
}

double rel(double a, double b) { return std::fabs(a - b) / std::fmax(1.0, std::fabs(b)); }

}  // namespace

TEST(PartialProduct, FourFour) {
  const auto pf = partial_product(4, 4.0);
  EXPECT_EQ(pf.cutoff(), 4u);
  const PartialFactorization::ExponentMap expect{{2, 5}, {3, 1}, {4, 3}};
  EXPECT_EQ(pf.exponents(), expect);
  EXPECT_EQ(pf.value(), 6144);
  const PartialFactorization::ExponentMap primes{{2, 11}, {3, 1}};
  EXPECT_EQ(pf.prime_factorization(), primes);
}

TEST(PartialProduct, SmallValues) {
  EXPECT_EQ(partial_product(3, 3.0).value(), 9);
  EXPECT_EQ(partial_product(2, 2.0).value(), 2);
  EXPECT_EQ(partial_product(4, 3.0).value(), 96);
  EXPECT_TRUE(partial_product(3, 2.0).exponents().empty());
  EXPECT_EQ(partial_product(3, 2.0).value(), 1);
}

TEST(PartialProduct, CutoffRules) {
  EXPECT_EQ(partial_product(10, 1.0).cutoff(), 1u);
  EXPECT_TRUE(partial_product(10, 1.5).exponents().empty());
  EXPECT_EQ(partial_product(10, 50.0).cutoff(), 10u);
  EXPECT_EQ(partial_product(10, 50.0), partial_product(10, 10.0));
  // 0.29 * 100 is 28.999999999999996 in binary floating point.
  EXPECT_EQ(partial_product(100, 0.29 * 100).cutoff(), 29u);
  EXPECT_THROW(partial_product(10, 0.5), std::invalid_argument);
  EXPECT_THROW(partial_product(10, std::nan("")), std::invalid_argument);
  EXPECT_THROW(partial_product(0, 3.0), std::invalid_argument);
}

TEST(PartialProduct, MatchesBruteForce) {
  for (std::uint64_t n = 1; n <= 40; ++n)
    for (std::uint64_t x = 1; x <= n + 1; ++x)
      ASSERT_EQ(partial_product(n, static_cast<double>(x)).value(), slow_partial_product(n, std::min(x, n)))
          << n << " " << x;
}

TEST(PartialProduct, SmoothAndDivisible) {
  for (std::uint64_t n = 2; n <= 120; ++n) {
    const auto full = partial_product(n, static_cast<double>(n));
    const auto pf = full.prime_factorization();
    if (!pf.empty()) {
      EXPECT_LE(pf.rbegin()->first, n);
    }
    if (n <= 60) {
      const BigInt whole = full.value();
      const BigInt half = partial_product(n, n / 2.0).value();
      EXPECT_TRUE(mpz_divisible_p(whole.get_mpz_t(), half.get_mpz_t())) << n;
    }
  }
}

TEST(PartialProduct, EstimatedBits) {
  const auto pf = partial_product(30, 30.0);
  const double bits = static_cast<double>(mpz_sizeinbase(pf.value().get_mpz_t(), 2));
  EXPECT_NEAR(pf.estimated_bits(), bits, 1.0);
}

TEST(PartialFactorization, RejectsBadExponents) {
  EXPECT_THROW(PartialFactorization(4, 4, {{5, 1}}), std::invalid_argument);
  EXPECT_THROW(PartialFactorization(4, 4, {{2, 0}}), std::invalid_argument);
  EXPECT_THROW(PartialFactorization(4, 4, {{1, 2}}), std::invalid_argument);
}

TEST(ClassicalProduct, KnownValues) {
  EXPECT_EQ(classical_product(0), 1);
  EXPECT_EQ(classical_product(1), 1);
  EXPECT_EQ(classical_product(4), 96);
  EXPECT_EQ(classical_product(6), 162000);
  for (std::uint64_t n = 0; n <= 60; ++n) ASSERT_EQ(classical_product(n), pascal_product(n)) << n;
}

TEST(ClassicalProduct, PrimeValuationEqualsNu) {
  const std::vector<std::uint64_t> primes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t n = 1; n <= 80; ++n) {
    const BigInt g = pascal_product(n);
    for (auto p : primes) ASSERT_EQ(BigInt(static_cast<unsigned long>(valuation(g, p))), nu_p_classical(n, p)) << n << " " << p;
  }
}

TEST(ClassicalProduct, CompositeValuation) {
  EXPECT_EQ(nu_b_classical(4, 4), 2);
  EXPECT_EQ(nu_b_classical(6, 4), 2);
  EXPECT_EQ(nu_b_classical(4, 2), 5);
  // Strict inequalities in both directions.
  EXPECT_GT(nu_bar(4, 4).nu, nu_b_classical(4, 4));
  EXPECT_LT(nu_bar(6, 4).nu, nu_b_classical(6, 4));
  for (std::uint64_t n = 1; n <= 40; ++n) {
    const BigInt g = pascal_product(n);
    for (std::uint64_t b = 2; b <= 30; ++b)
      ASSERT_EQ(BigInt(static_cast<unsigned long>(valuation(g, b))), nu_b_classical(n, b)) << n << " " << b;
  }
}

TEST(LogSums, HandValues) {
  const double l2 = std::log(2.0), l3 = std::log(3.0);
  EXPECT_LT(rel(a_sum(4, 4).value(), 16 * l2 + 4 * l3), 1e-15);
  EXPECT_LT(rel(b_sum(4, 4).value(), 5 * l2 + 3 * l3), 1e-15);
  EXPECT_LT(rel(b_sum(4, 3).value(), 3 * l2 + 3 * l3), 1e-15);
  EXPECT_LT(rel(log_partial_product(4, 4).value(), std::log(6144.0)), 1e-15);
  EXPECT_LT(rel(c_sum(std::uint64_t{4}, std::uint64_t{4}).value(), 4 * l2 + l3), 1e-15);
  EXPECT_LT(rel(c_sum(std::uint64_t{10}, std::uint64_t{3}).value(), 5 * l2 + 3 * l3), 1e-15);
  EXPECT_EQ(a_sum(5, 1.5).value(), 0.0);
}

TEST(LogSums, LogIdentityAndErrorBound) {
  for (std::uint64_t n = 2; n <= 400; n += 7)
    for (double x : {std::sqrt(static_cast<double>(n)), n / 2.0, static_cast<double>(n)}) {
      if (x < 1) continue;
      const auto a = a_sum(n, x), b = b_sum(n, x), g = log_partial_product(n, x);
      const double bound = a.error_bound() + b.error_bound() + g.error_bound();
      EXPECT_LE(std::fabs(g.value() - (a.value() - b.value())), bound + 1e-300) << n << " " << x;
    }
}

TEST(LogSums, ExactLogForSmallN) {
  for (std::uint64_t n = 2; n <= 30; ++n) {
    const BigInt v = slow_partial_product(n, n);
    long exp = 0;
    const double mant = mpz_get_d_2exp(&exp, v.get_mpz_t());
    const double lg = std::log(mant) + exp * std::log(2.0);
    EXPECT_LT(rel(log_partial_product(n, static_cast<double>(n)).value(), lg), 1e-13) << n;
  }
}

TEST(CSum, RationalArgumentsAndStabilization) {
  const Rational n(21, 2);  // 10.5
  double brute = 0;
  for (int b = 1; b <= 4; ++b) brute += std::floor(10.5 / b) * std::log(static_cast<double>(b));
  EXPECT_LT(rel(c_sum(n, Rational(9, 2)).value(), brute), 1e-15);
  EXPECT_EQ(c_sum(n, Rational(20)).value(), c_sum(n, n).value());
  EXPECT_EQ(c_sum(10.5, 4.5).value(), c_sum(n, Rational(9, 2)).value());
  EXPECT_THROW(c_sum(Rational(1, 2), Rational(3)), std::invalid_argument);
}

TEST(BDecomposition, MatchesBSum) {
  for (std::uint64_t n = 2; n <= 500; n += 3) {
    const auto dec = b_decomposition(n);
    const auto b = b_sum(n, static_cast<double>(n));
    EXPECT_LE(std::fabs(dec.total() - b.value()), dec.error_bound() + b.error_bound()) << n;
    EXPECT_GE(dec.br.value(), 0.0);
    EXPECT_LE(dec.br.value(), 1.5 * std::pow(n, 1.5) * std::log(static_cast<double>(n)));
  }
  EXPECT_THROW(b_decomposition(1), std::invalid_argument);
}
