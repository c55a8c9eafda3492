#include <gtest/gtest.h>

#include <vector>

#include "cachelab/covering.hpp"

using namespace cachelab;

TEST(Covering, SingleTermRaisesToOne) {
  CoveringEngine e;
  VarId x = e.add_variable(1);
  CoveringConstraint c;
  c.term(x);
  auto r = e.process_constraint(c);
  EXPECT_EQ(r.work, 1);
  EXPECT_EQ(e.variable(x).value, 1);
  EXPECT_EQ(r.objective_delta, 1);
  EXPECT_EQ(r.fired, std::vector<VarId>{x});
  EXPECT_TRUE(e.satisfied(c));
}

TEST(Covering, RentAndEvictRaiseProportionally) {
  CoveringEngine e;
  VarId y = e.add_variable(Rational(1, 2));
  VarId x = e.add_variable(1);
  CoveringConstraint c;
  c.term(y).term(x);
  auto r = e.process_constraint(c);
  EXPECT_EQ(r.work, Rational(1, 2));
  EXPECT_EQ(e.variable(y).value, 1);
  EXPECT_EQ(e.variable(x).value, Rational(1, 2));
  EXPECT_EQ(r.objective_delta, 1);
  EXPECT_EQ(r.fired, std::vector<VarId>{y});
  // cost-weighted increases match
  EXPECT_EQ(e.variable(y).value * e.variable(y).coefficient, e.variable(x).value * e.variable(x).coefficient);
}

TEST(Covering, SatisfiedConstraintIsNoOp) {
  CoveringEngine e;
  VarId x = e.add_variable(1);
  VarId w = e.add_variable(3);
  CoveringConstraint c;
  c.term(x);
  e.process_constraint(c);
  CoveringConstraint c2;
  c2.term(x).term(w);
  auto r = e.process_constraint(c2);
  EXPECT_FALSE(r.worked());
  EXPECT_EQ(r.work, 0);
  EXPECT_EQ(r.objective_delta, 0);
  EXPECT_EQ(e.variable(w).value, 0);
}

TEST(Covering, ThresholdAboveOneWalksSeveralBreakpoints) {
  CoveringEngine e;
  VarId a = e.add_variable(1);
  VarId b = e.add_variable(2);
  VarId c = e.add_variable(4);
  CoveringConstraint k;
  k.term(a).term(b).term(c);
  k.threshold = 2;
  auto r = e.process_constraint(k);
  // a fires at tau 1, b at tau 2
  EXPECT_EQ(r.work, 2);
  EXPECT_EQ(e.variable(a).value, 1);  // frozen once fired
  EXPECT_EQ(e.variable(b).value, 1);
  EXPECT_EQ(e.variable(c).value, Rational(1, 2));
  EXPECT_EQ(r.objective_delta, 1 + 2 + 2);
  EXPECT_EQ(e.objective(), 5);
}

TEST(Covering, WeightedTermsCountSize) {
  CoveringEngine e;
  VarId a = e.add_variable(1);
  VarId b = e.add_variable(1);
  CoveringConstraint k;
  k.term(a, 3).term(b, 1);
  k.threshold = 2;
  auto r = e.process_constraint(k);
  EXPECT_EQ(r.work, 1);
  EXPECT_TRUE(e.satisfied(k));
}

TEST(Covering, CappedGroupCountsOnce) {
  CoveringEngine e;
  VarId x = e.add_variable(1);
  VarId z = e.add_variable(1);
  VarId g = e.add_variable(4);
  CoveringConstraint k;
  k.capped_group({x, z}, 2).term(g, 2);
  k.threshold = 4;
  auto r = e.process_constraint(k);
  // group reaches its cap of 2 at tau 1; g alone must cover the rest
  EXPECT_EQ(r.work, 4);
  EXPECT_EQ(e.variable(g).value, 1);
  EXPECT_EQ(e.variable(x).value, 1);
  EXPECT_EQ(e.variable(z).value, 1);
  EXPECT_EQ(k.term_count(), 3u);
}

TEST(Covering, RateOverride) {
  CoveringEngine e;
  VarId y = e.add_variable(Rational(1, 4));
  VarId x = e.add_variable(1);
  CoveringConstraint c;
  c.term(y).term(x);
  std::vector<RateOverride> o{{y, Rational(2)}};
  auto r = e.process_constraint(c, o);
  EXPECT_EQ(r.work, Rational(1, 2));
  EXPECT_EQ(e.variable(x).value, Rational(1, 2));
}

TEST(Covering, ZeroCoefficientJumpsForFree) {
  CoveringEngine e;
  VarId free = e.add_variable(0);
  VarId x = e.add_variable(1);
  CoveringConstraint c;
  c.term(free).term(x);
  auto r = e.process_constraint(c);
  EXPECT_EQ(r.work, 0);
  EXPECT_EQ(r.objective_delta, 0);
  EXPECT_EQ(e.variable(free).value, 1);
  EXPECT_EQ(e.variable(x).value, 0);
}

TEST(Covering, UnsatisfiableThrows) {
  CoveringEngine e;
  VarId x = e.add_variable(1);
  e.freeze(x);
  CoveringConstraint c;
  c.term(x);
  EXPECT_THROW(e.process_constraint(c), UnsatisfiableConstraint);
}

TEST(Covering, ValuesNeverDecrease) {
  CoveringEngine e;
  std::vector<VarId> v;
  for (int i = 1; i <= 4; ++i) v.push_back(e.add_variable(Rational(i, 3), false));
  std::vector<Rational> before(v.size(), 0);
  for (int round = 0; round < 5; ++round) {
    CoveringConstraint c;
    for (auto id : v) c.term(id);
    c.threshold = round + 1;
    e.process_constraint(c);
    for (std::size_t i = 0; i < v.size(); ++i) {
      EXPECT_GE(e.variable(v[i]).value, before[i]);
      before[i] = e.variable(v[i]).value;
    }
  }
}

TEST(Potential, Basics) {
  CoveringEngine e;
  VarId x = e.add_variable(2);
  VarId y = e.add_variable(Rational(1, 2));
  std::vector<Rational> zero{0, 0};
  std::vector<Rational> ref{1, 1};
  EXPECT_EQ(e.potential(zero), 0);
  EXPECT_EQ(e.potential(ref), Rational(5, 2));  // fresh run: reference objective
  CoveringConstraint c;
  c.term(x).term(y);
  e.process_constraint(c);
  std::vector<Rational> current{e.variable(x).value, e.variable(y).value};
  EXPECT_EQ(e.potential(current), 0);
  EXPECT_EQ(e.potential(zero), 0);
  std::vector<Rational> shorter{1};
  EXPECT_THROW(e.potential(shorter), std::invalid_argument);
}
