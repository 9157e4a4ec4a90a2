#include <gtest/gtest.h>

#include "maxmaxflow/rational.hpp"
#include "maxmaxflow/rng.hpp"

using namespace maxmaxflow;

TEST(Rational, ParsesIntegersFractionsAndDecimals) {
  EXPECT_EQ(parse_rational("7"), Rational(7));
  EXPECT_EQ(parse_rational("-3/4"), Rational(-3, 4));
  EXPECT_EQ(parse_rational("6/8"), Rational(3, 4));
  EXPECT_EQ(parse_rational("0.125"), Rational(1, 8));
  EXPECT_EQ(parse_rational("2.5"), Rational(5, 2));
}

TEST(Rational, RejectsMalformedInput) {
  for (const char* bad : {"", "1/0", "1e3", "abc", "1/", "/2", "1.2.3", "--1"})
    EXPECT_THROW(parse_rational(bad), std::invalid_argument) << bad;
}

TEST(Rational, FormatsInLowestTerms) {
  EXPECT_EQ(to_string(Rational(6, 8)), "3/4");
  EXPECT_EQ(to_string(Rational(4, 2)), "2");
  EXPECT_EQ(to_string(Rational(-1, 3)), "-1/3");
  EXPECT_EQ(to_string(Integer(-12)), "-12");
}

TEST(Rational, PowerHandlesNegativeAndZeroExponents) {
  EXPECT_EQ(pow(Rational(2, 3), 3), Rational(8, 27));
  EXPECT_EQ(pow(Rational(2, 3), -2), Rational(9, 4));
  EXPECT_EQ(pow(Rational(0), 0), Rational(1));
  EXPECT_EQ(pow(Rational(5), 0), Rational(1));
}

TEST(Rational, FactorialBinomialAndCommonDenominator) {
  EXPECT_EQ(factorial(0), Integer(1));
  EXPECT_EQ(factorial(10), Integer(3628800));
  EXPECT_EQ(binomial(10, 3), Integer(120));
  EXPECT_EQ(binomial(3, 5), Integer(0));
  EXPECT_EQ(common_denominator({Rational(1, 4), Rational(5, 6), Rational(2)}), Integer(12));
  EXPECT_EQ(common_denominator({}), Integer(1));
}

TEST(Rng, SameSeedGivesSameStream) {
  Rng a(42), b(42), c(43);
  bool differs = false;
  for (int i = 0; i < 100; ++i) {
    const auto x = a.uniform(-5, 17);
    EXPECT_EQ(x, b.uniform(-5, 17));
    EXPECT_GE(x, -5);
    EXPECT_LE(x, 17);
    differs |= x != c.uniform(-5, 17);
  }
  EXPECT_TRUE(differs);
}

TEST(Rng, ChanceExtremesAndMixSeed) {
  Rng r(1);
  for (int i = 0; i < 50; ++i) {
    EXPECT_FALSE(r.chance(0, 3));
    EXPECT_TRUE(r.chance(3, 3));
  }
  EXPECT_NE(mix_seed(1, 0), mix_seed(1, 1));
  EXPECT_EQ(mix_seed(9, 4), mix_seed(9, 4));
}
