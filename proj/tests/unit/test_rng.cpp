#include <gtest/gtest.h>

#include <set>

#include "cachelab/rng.hpp"

using namespace cachelab;

TEST(Rng, SameKeySameStream) {
  Rng a(123);
  Rng b(123);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.next(), b.next());
  EXPECT_EQ(a.counter(), 100u);
}

TEST(Rng, SplitsAreIndependentOfParentPosition) {
  Rng a(9);
  Rng b(9);
  b.next();
  b.next();
  EXPECT_EQ(a.split(4).next(), b.split(4).next());
  EXPECT_NE(a.split(4).next(), a.split(5).next());
  EXPECT_NE(a.split(0).key(), a.key());
}

TEST(Rng, BelowStaysInRangeAndCoversIt) {
  Rng r(1);
  std::set<std::uint64_t> seen;
  for (int i = 0; i < 2000; ++i) {
    auto v = r.below(7);
    ASSERT_LT(v, 7u);
    seen.insert(v);
  }
  EXPECT_EQ(seen.size(), 7u);
  EXPECT_EQ(r.below(1), 0u);
}

TEST(Rng, UnitRationalIsDyadicInUnitInterval) {
  Rng r(77);
  for (int i = 0; i < 100; ++i) {
    Rational u = r.unit_rational();
    ASSERT_GE(u, 0);
    ASSERT_LT(u, 1);
    Rational scaled = u * Rational(Integer(1) << 53);
    EXPECT_EQ(denominator(scaled), 1);
  }
}

TEST(Rng, UniformMeanIsCentred) {
  Rng r(5);
  double sum = 0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) sum += r.unit();
  EXPECT_NEAR(sum / n, 0.5, 0.01);
}
