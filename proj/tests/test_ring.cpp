#include <gtest/gtest.h>

#include "lattika/errors.hpp"
#include "lattika/ring.hpp"
#include "lattika/sampling.hpp"
#include "support.hpp"

namespace lattika {
namespace {

RingElement poly(const RingParams& p, std::initializer_list<std::int64_t> c) {
  Coeffs v = Coeffs::Zero(static_cast<Eigen::Index>(p.degree()));
  Eigen::Index i = 0;
  for (const std::int64_t x : c) v(i++) = x;
  return RingElement(p, v);
}

// An NTT-eligible prime q = 1 mod 2048 just above the reference BFV modulus.
std::int64_t large_ntt_prime() {
  static const std::int64_t q =
      static_cast<std::int64_t>(test::search_prime_1_mod(6620830889ULL, 2048));
  return q;
}

TEST(RingParams, Validation) {
  EXPECT_THROW(RingParams(3, Modulus(17)), InvalidParameter);
  EXPECT_THROW(RingParams(1, Modulus(17)), InvalidParameter);
  EXPECT_THROW(RingParams(1000, Modulus(17)), InvalidParameter);
  EXPECT_TRUE(RingParams(8, Modulus(17)).ntt_enabled());
  EXPECT_FALSE(RingParams(16, Modulus(17)).ntt_enabled());
  EXPECT_TRUE(RingParams(1024, Modulus(655360001)).ntt_enabled());
  EXPECT_FALSE(RingParams(1024, Modulus(6620830889LL)).ntt_enabled());
  EXPECT_FALSE(RingParams(4, Modulus(9)).ntt_enabled());
  EXPECT_THROW(RingParams(1024, Modulus(6620830889LL)).ntt(), NttUnavailable);
}

TEST(RingElement, ConstructionReducesAndChecksLength) {
  const RingParams p(2, Modulus(11));
  Coeffs c(2);
  c << 17, -6;
  const RingElement a(p, c);
  EXPECT_EQ(a[0], -5);
  EXPECT_EQ(a[1], 5);
  EXPECT_THROW(RingElement(p, Coeffs::Zero(3)), DimMismatch);
}

TEST(RingAdd, WorkedValues) {
  const RingParams p(2, Modulus(11));
  const RingElement a = poly(p, {1, 2});
  EXPECT_EQ(a + RingElement(p), a);
  EXPECT_EQ(a + (-a), RingElement(p));
  EXPECT_EQ(poly(p, {1, 2}) + poly(p, {3, 4}), poly(p, {4, -5}));
  EXPECT_THROW(a + RingElement(RingParams(2, Modulus(13))), ParamMismatch);
}

TEST(RingMul, NegacyclicShiftExample) {
  const RingParams p(4, Modulus(17));
  const RingElement a = poly(p, {1, 2, 3, 4});
  const RingElement x = RingElement::monomial(p, 1);
  EXPECT_EQ(ring_mul_schoolbook(a, x), poly(p, {-4, 1, 2, 3}));
  EXPECT_EQ(ring_mul_ntt(a, x), poly(p, {-4, 1, 2, 3}));
}

TEST(RingMul, ShiftingNTimesNegates) {
  const RingParams p(4, Modulus(17));
  const RingElement a = poly(p, {1, 2, 3, 4});
  RingElement b = a;
  for (int k = 0; k < 4; ++k) b = b * RingElement::monomial(p, 1);
  EXPECT_EQ(b, -a);
}

TEST(RingMul, SmallIdentities) {
  const RingParams p(2, Modulus(11));
  const RingElement x = RingElement::monomial(p, 1);
  EXPECT_EQ(x * x, RingElement::constant(p, -1));
  const RingElement a = poly(p, {3, -4});
  EXPECT_EQ(a * RingElement::constant(p, 1), a);
  EXPECT_EQ(RingElement::monomial(p, 3), -x);
}

TEST(RingMul, RingAxiomsAtSmallScale) {
  const RingParams p(4, Modulus(17));
  auto r = test::rng(10);
  for (int trial = 0; trial < 2000; ++trial) {
    const RingElement a = sample_uniform_ring(p, r);
    const RingElement b = sample_uniform_ring(p, r);
    const RingElement c = sample_uniform_ring(p, r);
    ASSERT_EQ(ring_mul_schoolbook(a, b), ring_mul_schoolbook(b, a));
    ASSERT_EQ(ring_mul_schoolbook(ring_mul_schoolbook(a, b), c), ring_mul_schoolbook(a, ring_mul_schoolbook(b, c)));
    ASSERT_EQ(ring_mul_schoolbook(a, b + c), ring_mul_schoolbook(a, b) + ring_mul_schoolbook(a, c));
  }
}

TEST(RingMul, SchoolbookMatchesNaiveOracleOnEveryAccumulatorPath) {
  auto r = test::rng(11);
  // Small entries (64-bit path), full q = 6620830889 (128-bit path) and
  // q near 2^62 (per-term reduction path).
  for (std::int64_t q : {17LL, 6620830889LL, 4611686018427387847LL}) {
    const RingParams p(64, Modulus(q));
    for (int trial = 0; trial < 20; ++trial) {
      const RingElement a = sample_uniform_ring(p, r);
      const RingElement b = trial % 2 ? sample_binary_ring(p, r) : sample_uniform_ring(p, r);
      ASSERT_EQ(ring_mul_schoolbook(a, b).coeffs(), test::naive_negacyclic(a.coeffs(), b.coeffs(), q)) << q;
    }
  }
}

TEST(RingMul, NttMatchesSchoolbookSmall) {
  const RingParams p(8, Modulus(17));
  ASSERT_TRUE(p.ntt_enabled());
  auto r = test::rng(12);
  for (int trial = 0; trial < 1000; ++trial) {
    const RingElement a = sample_uniform_ring(p, r);
    const RingElement b = sample_uniform_ring(p, r);
    ASSERT_EQ(ring_mul_ntt(a, b), ring_mul_schoolbook(a, b));
  }
  EXPECT_EQ(ring_mul_ntt(sample_uniform_ring(p, r), RingElement(p)), RingElement(p));
  const RingElement half = RingElement::monomial(p, 4);
  EXPECT_EQ(ring_mul_ntt(half, half), RingElement::constant(p, -1));
}

TEST(RingMul, NttMatchesSchoolbookLargePrime) {
  const std::int64_t q = large_ntt_prime();
  EXPECT_EQ((q - 1) % 2048, 0);
  const RingParams p(1024, Modulus(q));
  ASSERT_TRUE(p.ntt_enabled());
  auto r = test::rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const RingElement a = sample_uniform_ring(p, r);
    const RingElement b = sample_uniform_ring(p, r);
    ASSERT_EQ(ring_mul_ntt(a, b), ring_mul_schoolbook(a, b));
  }
  const RingElement half = RingElement::monomial(p, 512);
  EXPECT_EQ(ring_mul_ntt(half, half), RingElement::constant(p, -1));
}

TEST(RingMul, NttUnavailableWithoutEligibleModulus) {
  const RingParams p(1024, Modulus(6620830889LL));
  EXPECT_THROW(ring_mul_ntt(RingElement(p), RingElement(p)), NttUnavailable);
}

TEST(NttTables, ForwardInverseRoundTripAndRootChoice) {
  const std::uint64_t q = 655360001;
  const NttTables t(1024, q);
  // psi is the smallest primitive 2048-th root of unity.
  EXPECT_EQ(powmod_u64(t.psi(), 1024, q), q - 1);
  for (std::uint64_t x = 2; x < t.psi(); ++x) {
    ASSERT_NE(powmod_u64(x, 1024, q), q - 1) << x;
  }
  auto r = test::rng(14);
  std::vector<std::uint64_t> a(1024);
  for (auto& v : a) v = r.uniform_below(q);
  auto b = a;
  t.forward(b);
  t.inverse(b);
  EXPECT_EQ(a, b);
}

TEST(ScalarMul, WorkedValues) {
  const RingParams p(2, Modulus(5));
  const RingElement a = poly(p, {3, 1});
  EXPECT_EQ(1 * a, a);
  EXPECT_EQ(0 * a, RingElement(p));
  EXPECT_EQ(2 * poly(p, {3, 0}), poly(p, {1, 0}));
}

TEST(InfNorm, WorkedValues) {
  const RingParams p(2, Modulus(11));
  EXPECT_EQ(inf_norm(RingElement(p)), 0);
  EXPECT_EQ(inf_norm(poly(p, {-4, 3})), 4);
  const RingParams big(2, Modulus(655360001));
  EXPECT_EQ(inf_norm(RingElement::constant(big, 655360001 / 2)), 655360001 / 2);
}

// Largest ||a b|| / (||a|| ||b||) over all a, b with coefficients in {-1, 0, 1}.
std::int64_t brute_expansion(std::size_t n) {
  const RingParams p(n, Modulus(1000003));
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= 3;
  auto make = [&](std::size_t code) {
    Coeffs c(static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i, code /= 3) c(static_cast<Eigen::Index>(i)) = static_cast<std::int64_t>(code % 3) - 1;
    return RingElement(p, c);
  };
  std::int64_t best = 0;
  for (std::size_t x = 0; x < total; ++x) {
    for (std::size_t y = 0; y < total; ++y) {
      const RingElement a = make(x), b = make(y);
      if (inf_norm(a) == 0 || inf_norm(b) == 0) continue;
      best = std::max(best, inf_norm(a * b));
    }
  }
  return best;
}

TEST(ExpansionFactor, MatchesExhaustiveSearch) {
  EXPECT_EQ(expansion_factor(RingParams(2, Modulus(17))), brute_expansion(2));
  EXPECT_EQ(expansion_factor(RingParams(4, Modulus(17))), brute_expansion(4));
  EXPECT_EQ(expansion_factor(RingParams(1024, Modulus(17))), 1024);
}

TEST(ExpansionFactor, BoundsRandomProducts) {
  const RingParams p(256, Modulus(6620830889LL));
  auto r = test::rng(15);
  const GaussianParams g(3.0);
  for (int trial = 0; trial < 50; ++trial) {
    const RingElement a = sample_gauss_ring(p, g, r);
    const RingElement b = sample_gauss_ring(p, g, r);
    ASSERT_LE(inf_norm(a * b), expansion_factor(p) * inf_norm(a) * inf_norm(b));
  }
}

TEST(NegacyclicProduct, ExactWideValues) {
  const std::vector<std::int64_t> a{3000000000LL, -1};
  const std::vector<std::int64_t> b{3000000000LL, 2};
  const WideCoeffs w = negacyclic_product(a, b);
  EXPECT_EQ(w[0], static_cast<i128>(3000000000LL) * 3000000000LL + 2);
  EXPECT_EQ(w[1], static_cast<i128>(6000000000LL) - 3000000000LL);
}

TEST(Reinterpret, KeepsRepresentatives) {
  const RingParams small(4, Modulus(17));
  const RingParams big(4, Modulus(655360001));
  const RingElement a = poly(small, {-8, 8, 0, 1});
  EXPECT_EQ(reinterpret(a, big).coeffs(), a.coeffs());
  EXPECT_THROW(reinterpret(a, RingParams(8, Modulus(17))), ParamMismatch);
}

}  // namespace
}  // namespace lattika
