#include <gtest/gtest.h>

#include "cachelab/bounds.hpp"

using namespace cachelab;

namespace {

Bound query(Problem p, Setting s, std::int64_t k, Rational lambda, std::optional<Rational> n = std::nullopt) {
  BoundQuery q;
  q.problem = p;
  q.setting = s;
  q.k = k;
  q.lambda = lambda;
  q.zap_cost = n;
  return bounds(q);
}

}  // namespace

TEST(Bounds, RentalPagingHighBand) {
  auto b = query(Problem::RentalPaging, Setting::Deterministic, 4, 1);
  EXPECT_EQ(b.upper, Rational(2));
  EXPECT_EQ(b.lower, Rational(1));
}

TEST(Bounds, PagingZapping) {
  auto b = query(Problem::PagingZapping, Setting::Deterministic, 2, 0, Rational(5));
  EXPECT_EQ(b.lower, Rational(22, 9));
  EXPECT_EQ(b.upper, Rational(5));
  EXPECT_THROW(query(Problem::PagingZapping, Setting::Deterministic, 2, 0), std::invalid_argument);
}

TEST(Bounds, RentalPagingLowBand) {
  auto b = query(Problem::RentalPaging, Setting::Deterministic, 10, Rational(1, 200));
  EXPECT_EQ(b.upper, Rational(10));
  EXPECT_EQ(rental_band(10, Rational(1, 200)), Band::Low);
}

TEST(Bounds, Bands) {
  EXPECT_EQ(rental_band(4, Rational(1, 4)), Band::High);
  EXPECT_EQ(rental_band(4, Rational(1, 16)), Band::Middle);
  EXPECT_EQ(rental_band(4, Rational(1, 17)), Band::Low);
  EXPECT_EQ(rental_band(1, Rational(1)), Band::High);
}

TEST(Bounds, MiddleBandMeetsHighBandAtOneOverK) {
  for (std::int64_t k = 1; k <= 64; k *= 2) {
    Rational kk(k);
    Rational lambda = 1 / kk;
    EXPECT_EQ(1 + 1 / (kk * lambda), 2);
    auto just_below = query(Problem::RentalPaging, Setting::Deterministic, k + 1, 1 / (kk + 1) - Rational(1, 1000000));
    EXPECT_LE(*just_below.upper, Rational(21, 10));
  }
}

TEST(Bounds, LowerNeverExceedsUpper) {
  std::vector<Rational> lambdas;
  for (int e = -12; e <= 4; ++e) lambdas.push_back(e < 0 ? Rational(1, std::int64_t(1) << -e) : Rational(1 << e));
  for (auto p : all_problems()) {
    for (auto s : {Setting::Deterministic, Setting::Randomized}) {
      for (std::int64_t k = 1; k <= 64; k = k < 4 ? k + 1 : k * 2) {
        for (const auto& l : lambdas) {
          for (std::int64_t n : {1, 2, 5, 30, 1000}) {
            auto b = query(p, s, k, l, Rational(n));
            if (b.lower && b.upper) {
              EXPECT_LE(*b.lower, *b.upper) << to_string(p) << " k=" << k << " lambda=" << l << " N=" << n;
            }
          }
        }
      }
    }
  }
}

TEST(Bounds, InfiniteCacheRows) {
  EXPECT_EQ(query(Problem::InfiniteRentalCaching, Setting::Deterministic, 1, 1).upper, Rational(2));
  EXPECT_EQ(query(Problem::InfiniteRentalCaching, Setting::Randomized, 1, 1).upper, e_over_e_minus_one());
}

TEST(Bounds, NamesRoundTrip) {
  for (auto p : all_problems()) EXPECT_EQ(parse_problem(to_string(p)), p);
  EXPECT_THROW(parse_problem("nope"), std::invalid_argument);
  EXPECT_EQ(parse_setting("rand"), Setting::Randomized);
}
