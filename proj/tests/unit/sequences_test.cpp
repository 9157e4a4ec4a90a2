#include <gtest/gtest.h>

#include "maxmaxflow/sequences.hpp"
#include "oracles.hpp"

using namespace maxmaxflow;

TEST(Sequences, ClosedFormsMatchOracle) {
  for (unsigned m = 0; m <= 12; ++m)
    for (const Rational& k : {Rational(0), Rational(1, 2), Rational(1), Rational(3), Rational(7, 3), Rational(8)}) {
      EXPECT_EQ(C_mk(m, k), oracle::C(m, k)) << m << " " << k;
      EXPECT_EQ(B_mk(m, k), oracle::B(m, k)) << m << " " << k;
    }
}

TEST(Sequences, SmallValues) {
  // C(m,1) counts rooted labelled trees up to m!: 1, 1, 3/2, 8/3, ...
  EXPECT_EQ(C_mk(2, 1), Rational(3, 2));
  EXPECT_EQ(C_mk(3, 1), Rational(16) / 6);
  EXPECT_EQ(C_mk(3, 2), Rational(2 * 25) / 6);
  EXPECT_EQ(B_mk(1, 2), Rational(1));
  EXPECT_EQ(B_mk(2, 3), Rational(2 * 6) / 2);
  EXPECT_EQ(B_mk(5, 1), Rational(0));
}

TEST(Sequences, TreeFunctionCoefficients) {
  const auto c = tree_function_series(10);
  for (unsigned m = 0; m <= 10; ++m)
    EXPECT_EQ(c[m], pow(Rational(m + 1), static_cast<long>(m) - 1) / Rational(factorial(m)));
  const auto c3 = tree_function_power(10, 3);
  auto cube = series_mul(series_mul(c, c), c);
  EXPECT_EQ(c3, cube);
}

TEST(Sequences, SeriesExpRejectsConstantTerm) {
  EXPECT_THROW(series_exp({Rational(1), Rational(1)}), std::invalid_argument);
  const auto e = series_exp({Rational(0), Rational(1), Rational(0), Rational(0)});
  EXPECT_EQ(e, (PowerSeries{Rational(1), Rational(1), Rational(1, 2), Rational(1, 6)}));
}

TEST(Sequences, IdentitiesHoldExactly) {
  std::vector<Rational> ks;
  for (int k = 1; k <= 8; ++k) ks.emplace_back(k);
  ks.emplace_back(1, 2);
  ks.emplace_back(5, 3);
  const auto report = verify_identities(12, ks, {Rational(1, 2), Rational(1), Rational(2)});
  for (const auto& c : report.checks) {
    EXPECT_TRUE(c.ok) << c.name << ": " << c.detail;
    EXPECT_GT(c.cases, 0) << c.name;
  }
  EXPECT_TRUE(report.ok());
}

TEST(Sequences, StirlingRatiosApproachOne) {
  for (const Rational& k : {Rational(1), Rational(2), Rational(3)}) {
    const auto c = c_asymptotic_ratio(2000, k);
    EXPECT_GT(c.ratio.lo(), Rational(99, 100));
    EXPECT_LT(c.ratio.hi(), Rational(101, 100));
    const auto b = b_asymptotic_ratio(2000, k + 1);
    EXPECT_GT(b.ratio.lo(), Rational(99, 100));
    EXPECT_LT(b.ratio.hi(), Rational(101, 100));
    // The ratio moves toward 1 as m grows.
    const auto early = c_asymptotic_ratio(20, k);
    EXPECT_LT(abs(c.ratio.lo() - 1), abs(early.ratio.lo() - 1));
  }
  EXPECT_THROW(c_asymptotic_ratio(0, 1), std::invalid_argument);
  EXPECT_THROW(b_asymptotic_ratio(5, 1), std::invalid_argument);
}
