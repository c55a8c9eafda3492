#include <gtest/gtest.h>

#include "cachelab/rational.hpp"

using namespace cachelab;

TEST(Rational, ParsesFractionsIntegersAndDecimals) {
  EXPECT_EQ(parse_rational("3"), Rational(3));
  EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
  EXPECT_EQ(parse_rational("0.125"), Rational(1, 8));
  EXPECT_EQ(parse_rational("-2.5"), Rational(-5, 2));
  EXPECT_EQ(parse_rational("0"), Rational(0));
}

TEST(Rational, RejectsMalformedText) {
  for (const char* bad : {"", "1//2", "1/0", "1e3", " 1", "1 ", "abc", "1/", "/2", "1.2.3", "--1"}) {
    EXPECT_THROW(parse_rational(bad), std::invalid_argument) << bad;
  }
}

TEST(Rational, FormatIsCanonical) {
  EXPECT_EQ(format_rational(Rational(4, 2)), "2");
  EXPECT_EQ(format_rational(Rational(-3, 6)), "-1/2");
  EXPECT_EQ(format_rational(parse_rational("0.75")), "3/4");
}

TEST(Rational, FloorAndCeilHandleNegatives) {
  EXPECT_EQ(floor_integer(Rational(7, 2)), 3);
  EXPECT_EQ(floor_integer(Rational(-7, 2)), -4);
  EXPECT_EQ(ceil_integer(Rational(7, 2)), 4);
  EXPECT_EQ(ceil_integer(Rational(-7, 2)), -3);
  EXPECT_EQ(floor_integer(Rational(5)), 5);
  EXPECT_EQ(ceil_integer(Rational(5)), 5);
}

TEST(Rational, HarmonicNumbers) {
  EXPECT_EQ(harmonic(0), Rational(0));
  EXPECT_EQ(harmonic(1), Rational(1));
  EXPECT_EQ(harmonic(3), Rational(11, 6));
  EXPECT_EQ(Rational(3) * harmonic(3), Rational(11, 2));
}

TEST(Rational, EulerApproximation) {
  EXPECT_NEAR(to_double(euler_e()), 2.718281828459045, 1e-15);
  EXPECT_NEAR(to_double(e_over_e_minus_one()), 1.5819767068693265, 1e-15);
}

TEST(Rational, Int64NarrowingIsChecked) {
  EXPECT_EQ(to_int64(Integer(42)), 42);
  Integer big = Integer(1) << 70;
  EXPECT_THROW(to_int64(big), std::overflow_error);
}
