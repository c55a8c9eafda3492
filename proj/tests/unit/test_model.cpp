#include <gtest/gtest.h>

#include "../support/reference.hpp"
#include "cachelab/model.hpp"
#include "cachelab/policy.hpp"

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

TEST(Catalog, RejectsBadFiles) {
  Catalog c;
  c.add({"a", 1, 1});
  EXPECT_THROW(c.add({"a", 1, 1}), std::invalid_argument);
  EXPECT_THROW(c.add({"b", 0, 1}), std::invalid_argument);
  EXPECT_THROW(c.add({"c", 1, -1}), std::invalid_argument);
  EXPECT_EQ(c.find("a"), FileIndex{0});
  EXPECT_FALSE(c.find("zz"));
}

TEST(Params, Validation) {
  EXPECT_THROW(params(0).validate(), std::invalid_argument);
  EXPECT_THROW(params(1, -1).validate(), std::invalid_argument);
  EXPECT_THROW(params(1, 0, Rational(1, 2)).validate(), std::invalid_argument);
  EXPECT_NO_THROW(params(1, 0, Rational(1)).validate());
}

TEST(AdvanceStep, HitPaysRentOnly) {
  Catalog cat;
  auto a = cat.add({"a", 1, 1});
  CacheState s;
  s.admit(a, 1);
  auto d = advance_step(s, Event::request(a), cat, params(1, 1), {});
  EXPECT_EQ(d.rental, 1);
  EXPECT_EQ(d.retrieval, 0);
}

TEST(AdvanceStep, MissPaysCost) {
  Catalog cat;
  auto a = cat.add({"a", 1, 3});
  CacheState s;
  auto d = advance_step(s, Event::request(a), cat, params(1), {});
  EXPECT_EQ(d.retrieval, 3);
  EXPECT_TRUE(s.resident(a));
}

TEST(AdvanceStep, ZappedRequestIsFree) {
  Catalog cat;
  auto a = cat.add({"a", 1, 1});
  CacheState s;
  auto p = params(1, 1, Rational(2));
  auto d0 = advance_step(s, Event::request(a), cat, p, {{}, {a}});
  EXPECT_EQ(d0.zapping, 2);
  EXPECT_EQ(d0.retrieval, 0);
  auto d1 = advance_step(s, Event::request(a), cat, p, {});
  EXPECT_EQ(d1.total(), 0);
  EXPECT_FALSE(s.resident(a));
}

TEST(AdvanceStep, RejectsIllegalDecisions) {
  Catalog cat;
  auto a = cat.add({"a", 1, 1});
  auto b = cat.add({"b", 1, 1});
  CacheState s;
  EXPECT_THROW(advance_step(s, Event::tick(), cat, params(1), {{a}, {}}), DecisionError);
  EXPECT_THROW(advance_step(s, Event::tick(), cat, params(1), {{}, {a}}), ModelError);
  advance_step(s, Event::request(a), cat, params(1), {});
  EXPECT_THROW(advance_step(s, Event::request(b), cat, params(1), {}), CapacityError);
  CacheState z;
  auto p = params(1, 0, Rational(1));
  advance_step(z, Event::tick(), cat, p, {{}, {a}});
  EXPECT_THROW(advance_step(z, Event::tick(), cat, p, {{}, {a}}), DecisionError);
}

TEST(AdvanceStep, UnboundedCapacityAllowsOverflow) {
  Catalog cat;
  auto a = cat.add({"a", 1, 1});
  auto b = cat.add({"b", 1, 1});
  CacheState s;
  advance_step(s, Event::request(a), cat, params(1), {}, Capacity::Unbounded);
  EXPECT_NO_THROW(advance_step(s, Event::request(b), cat, params(1), {}, Capacity::Unbounded));
  EXPECT_EQ(s.used(), 2);
}

TEST(AdvanceStep, RentBySize) {
  Catalog cat;
  auto a = cat.add({"a", 3, 1});
  CacheState s;
  auto p = params(4, Rational(1, 2));
  p.rent_by_size = true;
  EXPECT_EQ(advance_step(s, Event::request(a), cat, p, {}).rental, Rational(3, 2));
}

TEST(ValidateTrace, ReportsModelViolations) {
  auto ok = make_trace("a b a");
  ProblemParams p = params(2);
  p.model = CostModel::Paging;
  EXPECT_TRUE(validate_trace(ok, p).empty());

  auto fault = make_trace("a", {{"a", 1, 2}});
  ProblemParams f = params(2);
  f.model = CostModel::FaultModel;
  EXPECT_TRUE(has_errors(validate_trace(fault, f)));

  auto big = make_trace("a", {{"a", 3, 1}});
  auto issues = validate_trace(big, params(2));
  ASSERT_FALSE(issues.empty());
  EXPECT_FALSE(has_errors(issues));
  EXPECT_NE(issues[0].message.find("uncacheable"), std::string::npos);
}

TEST(Trace, NextAndLatestRequests) {
  auto t = make_trace("a b . a");
  auto next = t.next_request();
  EXPECT_EQ(next[0], 3u);
  EXPECT_EQ(next[1], kNever);
  EXPECT_EQ(next[2], kNever);
  auto latest = t.latest_requests(2);
  EXPECT_EQ(latest[0], 0u);
  EXPECT_EQ(latest[1], 1u);
  EXPECT_EQ(t.last_request(), 3u);
  EXPECT_EQ(t.requested_files().size(), 2u);
}

namespace {

// Keeps everything until forced, then drops the lowest index.
class Greedy : public Policy {
 public:
  explicit Greedy(const Catalog& c) : c_(c) {}
  PolicyDecision decide(StepIndex, const Event& e, const CacheState& cache) override {
    PolicyDecision d;
    if (e.is_request() && !cache.resident(e.file) && cache.used() + c_[e.file].size > 1) {
      d.evictions.push_back(*cache.residents().begin());
    }
    return d;
  }

 private:
  const Catalog& c_;
};

}  // namespace

TEST(Simulation, LedgerEqualsSumOfDeltasAndReference) {
  auto t = make_trace("a b . a b b . a");
  auto p = params(1, Rational(1, 3));
  Greedy g(t.catalog);
  auto r = run(t, p, g);
  CostLedger sum;
  std::vector<PolicyDecision> schedule;
  for (const auto& s : r.steps) {
    sum += s.delta;
    schedule.push_back(s.decision);
  }
  EXPECT_EQ(sum, r.ledger);
  auto ref = cachelab::testing::reference_ledger(t, p, schedule);
  ASSERT_TRUE(ref);
  EXPECT_EQ(*ref, r.ledger);
}

TEST(Simulation, EmptyTraceCostsNothing) {
  Trace t;
  Greedy g(t.catalog);
  EXPECT_EQ(run(t, params(1, 1), g).ledger.total(), 0);
}

TEST(Simulation, NoRentNoZapIsRetrievalOnly) {
  auto t = make_trace("a b a b");
  Greedy g(t.catalog);
  auto l = run(t, params(1), g).ledger;
  EXPECT_EQ(l.retrieval, 4);
  EXPECT_EQ(l.rental, 0);
  EXPECT_EQ(l.zapping, 0);
}
