#include <gtest/gtest.h>

#include "lattika/arith.hpp"
#include "lattika/errors.hpp"
#include "support.hpp"

namespace lattika {
namespace {

TEST(ReduceSymmetric, WorkedValues) {
  const Modulus q(11);
  EXPECT_EQ(reduce_symmetric(7, q).value(), -4);
  EXPECT_EQ(reduce_symmetric(0, q).value(), 0);
  EXPECT_EQ(reduce_symmetric(-6, q).value(), 5);
}

TEST(ReduceSymmetric, ExhaustiveSmallModuli) {
  for (std::int64_t m = 3; m <= 101; m += 2) {
    const Modulus q(m);
    for (std::int64_t x = -3 * m; x <= 3 * m; ++x) {
      const std::int64_t r = reduce_symmetric(x, q).value();
      ASSERT_EQ(((x - r) % m + m) % m, 0) << x << " mod " << m;
      ASSERT_LE(-m, 2 * r);
      ASSERT_LT(2 * r, m);
      ASSERT_EQ(reduce_symmetric(r, q).value(), r);
    }
  }
}

TEST(ReduceSymmetric, EvenModulusHalfGoesNegative) {
  EXPECT_EQ(symmetric_mod(2, 4), -2);
  EXPECT_EQ(symmetric_mod(1, 4), 1);
  EXPECT_EQ(canonical_mod(-1, 4), 3);
}

TEST(ReduceSymmetric, WideInputs) {
  const Modulus q(6620830889LL);
  const i128 big = static_cast<i128>(6620830889LL) * 655360001LL * 1000 + 17;
  EXPECT_EQ(reduce_symmetric(big, q).value(), 17);
  EXPECT_EQ(reduce_symmetric(-big, q).value(), -17);
}

TEST(Modulus, RejectsEvenAndSmall) {
  EXPECT_THROW(Modulus(10), InvalidParameter);
  EXPECT_THROW(Modulus(1), InvalidParameter);
  EXPECT_THROW(Modulus(-7), InvalidParameter);
  EXPECT_NO_THROW(Modulus(3));
}

TEST(Modulus, BitLength) {
  EXPECT_EQ(Modulus(3).bit_length(), 2);
  EXPECT_EQ(Modulus(17).bit_length(), 5);
  EXPECT_EQ(Modulus(6620830889LL).bit_length(), 33);
}

TEST(ModInverse, WorkedValues) {
  EXPECT_EQ(mod_inverse(ZqInt(2, Modulus(11))).canonical(), 6);
  EXPECT_EQ(mod_inverse(ZqInt(1, Modulus(17))).canonical(), 1);
  const Modulus q(6620830889LL);
  const ZqInt inv = mod_inverse(ZqInt(3, q));
  EXPECT_EQ(inv.canonical(), test::euclid_inverse(3, 6620830889LL));
  EXPECT_EQ((inv * ZqInt(3, q)).value(), 1);
}

TEST(ModInverse, ExhaustiveAgainstEuclid) {
  for (std::int64_t m = 3; m <= 101; m += 2) {
    const Modulus q(m);
    for (std::int64_t a = 0; a < m; ++a) {
      const std::int64_t want = test::euclid_inverse(a, m);
      if (want == 0) {
        ASSERT_THROW(mod_inverse(ZqInt(a, q)), NotInvertible);
      } else {
        const ZqInt inv = mod_inverse(ZqInt(a, q));
        ASSERT_EQ(inv.canonical(), want);
        ASSERT_EQ((inv * ZqInt(a, q)).value(), 1);
      }
    }
  }
}

TEST(ModInverse, InverseOfTwoIsHalfOfQPlusOne) {
  for (std::int64_t m : {11LL, 655360001LL, 6620830889LL}) {
    EXPECT_EQ(mod_inverse(ZqInt(2, Modulus(m))).canonical(), (m + 1) / 2);
  }
}

TEST(ModPow, WorkedValues) {
  const Modulus q(11);
  EXPECT_EQ(mod_pow(ZqInt(3, q), 0).value(), 1);
  EXPECT_EQ(mod_pow(ZqInt(3, q), 5).value(), 1);
  EXPECT_EQ(mod_pow(ZqInt(2, q), 10).value(), 1);
  EXPECT_EQ(mod_pow(ZqInt(2, q), 3).value(), -3);
}

TEST(ModPow, MatchesRepeatedMultiplication) {
  const Modulus q(6620830889LL);
  const ZqInt base(123456789, q);
  ZqInt acc(1, q);
  for (std::uint64_t e = 0; e < 200; ++e) {
    ASSERT_EQ(mod_pow(base, e), acc);
    acc = acc * base;
  }
}

TEST(MultiplyRound, WorkedValues) {
  const std::vector<i128> x{5, 6};
  EXPECT_EQ(multiply_round(x, 5, 11), (WideCoeffs{2, 3}));
  EXPECT_EQ(multiply_round(std::vector<i128>{0, 0}, 7, 3), (WideCoeffs{0, 0}));
  EXPECT_EQ(multiply_round(std::vector<i128>{7}, 1, 2), (WideCoeffs{4}));
  EXPECT_EQ(multiply_round(std::vector<i128>{-7}, 1, 2), (WideCoeffs{-4}));
  EXPECT_EQ(multiply_round(std::vector<i128>{5}, 1, -2), (WideCoeffs{-3}));
}

TEST(MultiplyRound, IntegralRatioIsExact) {
  auto r = test::rng(1);
  std::vector<i128> x;
  for (int i = 0; i < 200; ++i) x.push_back(static_cast<i128>(r.next_u64() >> 2) - (static_cast<i128>(1) << 61));
  for (i128 k : {-3, 0, 1, 2, 83}) {
    for (i128 den : {1LL, 7LL, 6620830889LL}) {
      const WideCoeffs got = multiply_round(x, k * den, den);
      for (std::size_t i = 0; i < x.size(); ++i) ASSERT_EQ(got[i], k * x[i]);
    }
  }
}

TEST(MultiplyRound, RejectsZeroDenominator) {
  EXPECT_THROW(multiply_round(std::vector<i128>{1}, 1, 0), InvalidParameter);
}

TEST(RoundDiv, TiesAwayFromZero) {
  EXPECT_EQ(round_div(5, 2), 3);
  EXPECT_EQ(round_div(-5, 2), -3);
  EXPECT_EQ(round_div(4, 3), 1);
  EXPECT_EQ(round_div(-4, 3), -1);
  EXPECT_EQ(round_div(5, 3), 2);
  EXPECT_EQ(floor_div(-7, 2), -4);
  EXPECT_EQ(floor_div(7, 2), 3);
}

TEST(ZqInt, ArithmeticAndMismatch) {
  const Modulus q(11);
  EXPECT_EQ((ZqInt(5, q) + ZqInt(7, q)).value(), 1);
  EXPECT_EQ((ZqInt(5, q) - ZqInt(7, q)).value(), -2);
  EXPECT_EQ((ZqInt(5, q) * ZqInt(7, q)).value(), 2);
  EXPECT_EQ((-ZqInt(5, q)).value(), -5);
  EXPECT_THROW(ZqInt(1, q) + ZqInt(1, Modulus(13)), ParamMismatch);
}

TEST(WideText, RoundTrip) {
  const i128 big = static_cast<i128>(1) << 100;
  EXPECT_EQ(parse_i128(to_string(big)), big);
  EXPECT_EQ(parse_i128(to_string(-big)), -big);
  EXPECT_EQ(to_string(static_cast<i128>(0)), "0");
  EXPECT_EQ(parse_i128("+42"), 42);
  EXPECT_THROW(parse_i128(""), ParseError);
  EXPECT_THROW(parse_i128("12a"), ParseError);
  EXPECT_THROW(parse_i128("-"), ParseError);
}

}  // namespace
}  // namespace lattika
