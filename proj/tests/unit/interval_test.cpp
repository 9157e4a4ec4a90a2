#include <gtest/gtest.h>

#include "generators.hpp"
#include "maxmaxflow/interval.hpp"

using namespace maxmaxflow;

namespace {

Rational dec(const char* digits) { return parse_rational(digits); }

// [lo, hi] holds the true value, so a valid enclosure must meet it.
void expect_brackets(const RationalInterval& x, const char* lo, const char* hi, unsigned bits) {
  EXPECT_LE(x.lo(), dec(hi)) << x.str();
  EXPECT_GE(x.hi(), dec(lo)) << x.str();
  EXPECT_LE(x.width(), pow(Rational(2), -static_cast<long>(bits) + 2));
}

}  // namespace

TEST(Interval, ConstantsAreEnclosedTightly) {
  for (unsigned bits : {32u, 64u, 128u}) {
    expect_brackets(ln_enclosure(2, bits), "0.69314718055994", "0.69314718055995", bits);
    expect_brackets(e_enclosure(bits), "2.71828182845904", "2.71828182845905", bits);
    expect_brackets(pi_enclosure(bits), "3.14159265358979", "3.14159265358980", bits);
    expect_brackets(sqrt_enclosure(RationalInterval(Rational(2)), bits), "1.41421356237309", "1.41421356237310",
                    bits);
    expect_brackets(exp_enclosure(Rational(-1, 2), bits), "0.60653065971263", "0.60653065971264", bits);
    expect_brackets(ln_enclosure(Rational(3, 2), bits), "0.40546510810816", "0.40546510810817", bits);
  }
}

TEST(Interval, ExactLogarithmAndExponentialOfZeroAndOne) {
  EXPECT_TRUE(ln_enclosure(1, 64).contains(0));
  EXPECT_TRUE(exp_enclosure(0, 64).contains(1));
  EXPECT_TRUE(sqrt_enclosure(RationalInterval(Rational(9, 4)), 64).contains(Rational(3, 2)));
}

TEST(Interval, ArithmeticContainsThePointResults) {
  Rng rng(7);
  for (int t = 0; t < 200; ++t) {
    const Rational a = gen::weight(rng) - 2, b = gen::weight(rng) - 1;
    const Rational da = gen::weight(rng) / 8, db = gen::weight(rng) / 8;
    const RationalInterval A(a - da, a + da), B(b - db, b + db);
    EXPECT_TRUE((A + B).contains(a + b));
    EXPECT_TRUE((A - B).contains(a - b));
    EXPECT_TRUE((A * B).contains(a * b));
    if (!B.contains(0)) {
      EXPECT_TRUE((A / B).contains(a / b));
    }
    EXPECT_TRUE(pow(A, 3).contains(a * a * a));
    const auto r = (A * B).rounded(8);
    EXPECT_LE(r.lo(), (A * B).lo());
    EXPECT_GE(r.hi(), (A * B).hi());
  }
}

TEST(Interval, DivisionByZeroIntervalThrows) {
  EXPECT_THROW(RationalInterval(Rational(1)) / RationalInterval(Rational(-1), Rational(1)), std::domain_error);
}

TEST(Interval, CompareIsConservative) {
  const RationalInterval x(Rational(1), Rational(2));
  EXPECT_EQ(compare(x, Rational(3)), Comparison::Less);
  EXPECT_EQ(compare(x, Rational(0)), Comparison::Greater);
  EXPECT_EQ(compare(x, Rational(3, 2)), Comparison::Undecided);
  EXPECT_EQ(compare(RationalInterval(Rational(5)), Rational(5)), Comparison::Equal);
}
