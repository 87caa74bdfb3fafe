#include <algorithm>
#include <numeric>

#include <gtest/gtest.h>

#include "lattika/cyclotomic.hpp"
#include "lattika/errors.hpp"

namespace lattika {
namespace {

// Brute-force multiplicative order of a modulo m, 0 when a is not a unit.
std::uint64_t brute_order(std::uint64_t a, std::uint64_t m) {
  if (std::gcd(a, m) != 1) return 0;
  std::uint64_t x = a % m;
  for (std::uint64_t k = 1; k <= m; ++k) {
    if (x == 1 % m) return k;
    x = x * a % m;
  }
  return 0;
}

TEST(CyclotomicPoly, TableOfFirstEight) {
  EXPECT_EQ(cyclotomic_poly(1), (IntPolynomial{-1, 1}));
  EXPECT_EQ(cyclotomic_poly(2), (IntPolynomial{1, 1}));
  EXPECT_EQ(cyclotomic_poly(3), (IntPolynomial{1, 1, 1}));
  EXPECT_EQ(cyclotomic_poly(4), (IntPolynomial{1, 0, 1}));
  EXPECT_EQ(cyclotomic_poly(5), (IntPolynomial{1, 1, 1, 1, 1}));
  EXPECT_EQ(cyclotomic_poly(6), (IntPolynomial{1, -1, 1}));
  EXPECT_EQ(cyclotomic_poly(7), (IntPolynomial{1, 1, 1, 1, 1, 1, 1}));
  EXPECT_EQ(cyclotomic_poly(8), (IntPolynomial{1, 0, 0, 0, 1}));
}

TEST(CyclotomicPoly, ProductOverDivisorsIsXnMinusOne) {
  for (std::uint64_t n = 1; n <= 64; ++n) {
    IntPolynomial prod{1};
    for (std::uint64_t d = 1; d <= n; ++d) {
      if (n % d == 0) prod = prod * cyclotomic_poly(d);
    }
    ASSERT_EQ(prod, IntPolynomial::x_pow_minus_one(n)) << "n = " << n;
  }
}

TEST(CyclotomicPoly, DegreeIsTotient) {
  for (std::uint64_t n = 1; n <= 200; ++n) {
    const IntPolynomial p = cyclotomic_poly(n);
    ASSERT_EQ(static_cast<std::uint64_t>(p.degree()), euler_phi(n)) << n;
    ASSERT_EQ(p.leading(), 1);
  }
}

TEST(CyclotomicPoly, PowerOfTwoIsBinomial) {
  for (std::uint64_t n = 2; n <= 512; n *= 2) {
    std::vector<std::int64_t> c(n / 2 + 1, 0);
    c.front() = 1;
    c.back() = 1;
    EXPECT_EQ(cyclotomic_poly(n), IntPolynomial(c));
  }
}

TEST(CyclotomicPoly, Phi105HasACoefficientMinusTwo) {
  const auto& c = cyclotomic_poly(105).coefficients();
  EXPECT_NE(std::find(c.begin(), c.end(), -2), c.end());
}

TEST(EulerPhi, Values) {
  EXPECT_EQ(euler_phi(12), 4u);
  EXPECT_EQ(euler_phi(5), 4u);
  EXPECT_EQ(euler_phi(1), 1u);
  for (std::uint64_t n = 2; n <= 300; ++n) {
    std::uint64_t count = 0;
    for (std::uint64_t k = 1; k < n; ++k) count += std::gcd(k, n) == 1;
    ASSERT_EQ(euler_phi(n), count);
  }
}

TEST(IsPrime, AgreesWithSieve) {
  std::vector<bool> composite(5000, false);
  for (std::uint64_t i = 2; i < 5000; ++i) {
    if (!composite[i]) {
      for (std::uint64_t j = i * i; j < 5000; j += i) composite[j] = true;
    }
    ASSERT_EQ(is_prime(i), !composite[i]) << i;
  }
  EXPECT_TRUE(is_prime(655360001));
  EXPECT_TRUE(is_prime(6620830889ULL));
  EXPECT_FALSE(is_prime(6620830889ULL - 2));
  EXPECT_TRUE(is_prime(18446744073709551557ULL));
  EXPECT_FALSE(is_prime(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
}

TEST(PrimitiveRoots, WorkedValues) {
  std::vector<std::int64_t> got;
  for (const ZqInt& z : primitive_roots_mod(5, Modulus(11))) got.push_back(z.canonical());
  EXPECT_EQ(got, (std::vector<std::int64_t>{3, 4, 5, 9}));

  const auto order2 = primitive_roots_mod(2, Modulus(11));
  ASSERT_EQ(order2.size(), 1u);
  EXPECT_EQ(order2.front().value(), -1);

  EXPECT_TRUE(primitive_roots_mod(4, Modulus(7)).empty());
  EXPECT_THROW(primitive_roots_mod(4, Modulus(15)), NotPrime);
}

TEST(PrimitiveRoots, MatchBruteForceOrders) {
  for (std::int64_t q : {7, 11, 13, 17, 29, 31, 41, 97}) {
    for (std::uint64_t n = 1; n <= 40; ++n) {
      std::vector<std::int64_t> want;
      for (std::int64_t x = 1; x < q; ++x) {
        if (brute_order(static_cast<std::uint64_t>(x), static_cast<std::uint64_t>(q)) == n) want.push_back(x);
      }
      std::vector<std::int64_t> got;
      for (const ZqInt& z : primitive_roots_mod(n, Modulus(q))) got.push_back(z.canonical());
      ASSERT_EQ(got, want) << "n=" << n << " q=" << q;
    }
  }
}

TEST(PrimitiveRoots, PowersBehave) {
  const Modulus q(655360001);
  const auto roots = primitive_roots_mod(2048, q);
  ASSERT_EQ(roots.size(), 1024u);
  for (std::size_t i = 0; i < roots.size(); i += 97) {
    EXPECT_EQ(mod_pow(roots[i], 2048).value(), 1);
    for (std::uint64_t d : divisors(2048)) {
      if (d < 2048) EXPECT_NE(mod_pow(roots[i], d).value(), 1);
    }
  }
}

TEST(MultiplicativeOrder, MatchesBruteForce) {
  for (std::uint64_t m = 2; m <= 60; ++m) {
    for (std::uint64_t a = 1; a < m; ++a) {
      if (std::gcd(a, m) == 1) ASSERT_EQ(multiplicative_order(a, m), brute_order(a, m));
    }
  }
}

TEST(FactorCyclotomic, FullySplitOverF11) {
  const auto f = factor_cyclotomic_mod(5, Modulus(11));
  std::vector<IntPolynomial> want;
  for (std::int64_t root : {3, 9, 5, 4}) want.push_back(IntPolynomial{-root, 1}.reduced_mod(11));
  ASSERT_EQ(f.size(), 4u);
  for (const auto& w : want) EXPECT_NE(std::find(f.begin(), f.end(), w), f.end()) << w.to_string();
  IntPolynomial prod{1};
  for (const auto& p : f) prod = multiply_mod(prod, p, 11);
  EXPECT_EQ(prod, cyclotomic_poly(5).reduced_mod(11));
}

TEST(FactorCyclotomic, IrreducibleOverF3) {
  const auto f = factor_cyclotomic_mod(5, Modulus(3));
  ASSERT_EQ(f.size(), 1u);
  EXPECT_EQ(f.front(), cyclotomic_poly(5).reduced_mod(3));
  EXPECT_EQ(multiplicative_order(3, 5), 4u);
}

TEST(FactorCyclotomic, LinearPhi2) {
  const auto f = factor_cyclotomic_mod(2, Modulus(7));
  ASSERT_EQ(f.size(), 1u);
  EXPECT_EQ(f.front(), (IntPolynomial{1, 1}));
}

TEST(FactorCyclotomic, IntermediateOrderIsUnsupported) {
  // 19 has order 2 mod 5: two quadratic factors.
  EXPECT_THROW(factor_cyclotomic_mod(5, Modulus(19)), Unsupported);
  EXPECT_THROW(factor_cyclotomic_mod(5, Modulus(5)), InvalidParameter);
  EXPECT_THROW(factor_cyclotomic_mod(5, Modulus(21)), NotPrime);
}

TEST(FactorCyclotomic, EveryLinearFactorIsARoot) {
  for (std::int64_t q : {17, 41, 97, 113}) {
    for (std::uint64_t n : {4ULL, 8ULL, 16ULL}) {
      if ((q - 1) % static_cast<std::int64_t>(n) != 0) continue;
      const auto f = factor_cyclotomic_mod(n, Modulus(q));
      ASSERT_EQ(f.size(), euler_phi(n));
      IntPolynomial prod{1};
      for (const auto& p : f) prod = multiply_mod(prod, p, q);
      ASSERT_EQ(prod, cyclotomic_poly(n).reduced_mod(q));
    }
  }
}

TEST(ExactDivide, RejectsRemainder) {
  EXPECT_EQ(exact_divide(IntPolynomial::x_pow_minus_one(4), IntPolynomial{-1, 1}), (IntPolynomial{1, 1, 1, 1}));
  EXPECT_THROW(exact_divide(IntPolynomial{1, 0, 1}, IntPolynomial{-1, 1}), InvalidParameter);
}

}  // namespace
}  // namespace lattika
