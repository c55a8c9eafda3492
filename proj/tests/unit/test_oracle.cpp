#include <gtest/gtest.h>

#include "../support/corpus.hpp"
#include "../support/reference.hpp"
#include "cachelab/baselines.hpp"
#include "cachelab/covering.hpp"
#include "cachelab/oracle.hpp"

using namespace cachelab;
using cachelab::testing::make_trace;

namespace {

ProblemParams params(std::int64_t k, Rational lambda = 0, std::optional<Rational> n = std::nullopt) {
  ProblemParams p;
  p.k = k;
  p.lambda = lambda;
  p.zap_cost = n;
  return p;
}

}  // namespace

TEST(Oracle, Basics) {
  Trace empty;
  EXPECT_EQ(opt(empty, params(1)).cost, 0);
  EXPECT_EQ(opt(make_trace("a"), params(1)).cost, 1);
}

TEST(Oracle, RentMakesRefetchCheaper) {
  auto t = make_trace("a . . a");
  auto s = opt(t, params(1, 1));
  EXPECT_EQ(s.cost, 4);
  EXPECT_EQ(s.ledger.retrieval, 2);
  EXPECT_EQ(s.ledger.rental, 2);
  EXPECT_EQ(replay(t, params(1, 1), s.schedule), s.ledger);
}

TEST(Oracle, ScheduleReplaysToItsCost) {
  for (const auto& inst : cachelab::testing::corpus(100, 41, true, false)) {
    for (std::optional<Rational> n : {std::optional<Rational>{}, std::optional<Rational>{Rational(3)}}) {
      auto p = params(inst.k, Rational(1, 3), n);
      auto s = opt(inst.trace, p);
      auto ref = cachelab::testing::reference_ledger(inst.trace, p, s.schedule);
      ASSERT_TRUE(ref);
      EXPECT_EQ(ref->total(), s.cost);
    }
  }
}

TEST(Oracle, MatchesIndependentExhaustiveSearch) {
  int compared = 0;
  for (const auto& inst : cachelab::testing::corpus(300, 42, true, false)) {
    if (inst.trace.catalog.size() > 3 || inst.trace.steps() > 6) continue;
    for (const auto& lambda : {Rational(0), Rational(1, 2), Rational(2)}) {
      for (std::optional<Rational> n : {std::optional<Rational>{}, std::optional<Rational>{Rational(2)}}) {
        auto p = params(inst.k, lambda, n);
        EXPECT_EQ(opt(inst.trace, p).cost, cachelab::testing::reference_opt(inst.trace, p));
        ++compared;
      }
    }
  }
  EXPECT_GT(compared, 50);
}

TEST(Oracle, BruteForceAgreesOnSmallInstances) {
  for (const auto& inst : cachelab::testing::corpus(150, 43)) {
    Trace t = inst.trace;
    if (t.catalog.size() > 4) continue;
    if (t.steps() > 8) t.events.resize(8);
    auto p = params(inst.k, Rational(1, 4), Rational(2));
    EXPECT_EQ(opt(t, p).cost, brute_force_opt(t, p));
  }
}

TEST(Oracle, LowerBoundsEveryPolicy) {
  for (const auto& inst : cachelab::testing::corpus(100, 44)) {
    auto p = params(inst.k);
    auto s = opt(inst.trace, p);
    Lru lru(inst.trace.catalog, p);
    Fifo fifo(inst.trace.catalog, p);
    auto report = opt_lower_bound_sanity(
        s, {{"lru", run(inst.trace, p, lru).ledger}, {"fifo", run(inst.trace, p, fifo).ledger}});
    EXPECT_TRUE(report.ok());
    // paging without rent: Belady is optimal
    EXPECT_EQ(belady_ledger(inst.trace.catalog, inst.trace.events, p).total(), s.cost);
  }
}

TEST(Oracle, MonotoneInCacheAndActions) {
  for (const auto& inst : cachelab::testing::corpus(100, 45)) {
    Rational prev = opt(inst.trace, params(1, Rational(1, 3))).cost;
    for (std::int64_t k = 2; k <= 4; ++k) {
      Rational c = opt(inst.trace, params(k, Rational(1, 3))).cost;
      EXPECT_LE(c, prev);
      prev = c;
    }
    EXPECT_LE(opt(inst.trace, params(inst.k, 0, Rational(1))).cost, opt(inst.trace, params(inst.k)).cost);
  }
}

TEST(Oracle, LpAssignmentObjectiveIsInitialPotential) {
  for (const auto& inst : cachelab::testing::corpus(60, 46)) {
    auto p = params(inst.k, Rational(1, 2), Rational(3));
    auto s = opt(inst.trace, p);
    // register the assignment's variables in a fresh engine
    CoveringEngine e;
    std::vector<Rational> ref;
    Rational expected = 0;
    for (auto t : s.lp.x) {
      Rational cost = inst.trace.catalog[inst.trace.events[t].file].cost;
      e.add_variable(cost);
      ref.push_back(1);
      expected += cost;
    }
    for (std::size_t i = 0; i < s.lp.y.size(); ++i) {
      e.add_variable(p.lambda);
      ref.push_back(1);
      expected += p.lambda;
    }
    for (std::size_t i = 0; i < s.lp.z.size(); ++i) {
      e.add_variable(*p.zap_cost);
      ref.push_back(1);
      expected += *p.zap_cost;
    }
    EXPECT_EQ(e.potential(ref), s.lp_objective);
    EXPECT_EQ(expected, s.lp_objective);
    EXPECT_LE(s.lp_objective, s.cost);
  }
}

TEST(Oracle, RefusesLargeInstances) {
  auto t = make_trace("a b c d e f g h i j k l");
  OracleLimits tight{4, 30, 6};
  EXPECT_THROW(opt(t, params(2), tight), OracleLimitError);
}

TEST(Belady, EvictsFurthestNextUse) {
  auto t = make_trace("a b c a b");
  auto l = belady_ledger(t.catalog, t.events, params(2));
  EXPECT_EQ(l.retrieval, 4);
}
