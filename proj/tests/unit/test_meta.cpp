#include <gtest/gtest.h>

#include "../support/corpus.hpp"
#include "../support/reference.hpp"
#include "cachelab/baselines.hpp"
#include "cachelab/experiment.hpp"
#include "cachelab/meta.hpp"
#include "cachelab/oracle.hpp"
#include "cachelab/registry.hpp"

using namespace cachelab;
using cachelab::testing::make_trace;

namespace {

ProblemParams params(std::int64_t k, Rational lambda) {
  ProblemParams p;
  p.k = k;
  p.lambda = lambda;
  return p;
}

std::unique_ptr<MetaPolicy> meta_lru(const Catalog& c, const ProblemParams& p) {
  auto inner_params = p;
  inner_params.lambda = 0;
  return std::make_unique<MetaPolicy>(c, p, std::make_unique<Lru>(c, inner_params),
                                      std::make_unique<AlgInfinity>(c, p, SkiKind::Deterministic));
}

}  // namespace

TEST(Meta, KeepsFilesBothComponentsKeep) {
  auto t = make_trace("a b a b");
  auto p = params(2, Rational(1, 10));
  auto m = meta_lru(t.catalog, p);
  auto r = run(t, p, *m);
  EXPECT_EQ(r.ledger.retrieval, 2);
  for (const auto& s : r.steps) EXPECT_TRUE(s.decision.evictions.empty());
}

TEST(Meta, SkiEvictionRemovesFileAndCausesMiss) {
  // lambda = 1: ALG-infinity drops a after one idle step, LRU would keep it
  auto t = make_trace("a . . a");
  auto p = params(2, 1);
  auto m = meta_lru(t.catalog, p);
  auto r = run(t, p, *m);
  EXPECT_EQ(r.steps[1].decision.evictions, std::vector<FileIndex>{0});
  EXPECT_EQ(r.ledger.retrieval, 2);
  EXPECT_TRUE(m->inner().cache().resident(0));
  EXPECT_EQ(m->audit().evictions_by_ski, 1u);
  EXPECT_EQ(m->audit().faults_by_ski, 1u);
}

TEST(Meta, CostDominatedByComponents) {
  for (const auto& inst : cachelab::testing::corpus(150, 31)) {
    for (const auto& lambda : {Rational(1, 9), Rational(1, 2), Rational(3)}) {
      auto p = params(inst.k, lambda);
      for (const char* name : {"meta:lru+alg-inf:det", "meta:rand-marking+alg-inf:rand"}) {
        auto pol = make_policy(name, inst.trace.catalog, p, inst.seed);
        auto r = run(inst.trace, p, *pol);
        auto& m = dynamic_cast<MetaPolicy&>(*pol);
        EXPECT_LE(r.ledger.total(), m.inner().ledger().total() + m.ski().ledger().total()) << name;
      }
    }
  }
}

TEST(Meta, LruCompositionWithinKPlusTwo) {
  for (const auto& inst : cachelab::testing::corpus(150, 32)) {
    for (const auto& lambda : {Rational(1, 16), Rational(1, 2)}) {
      auto p = params(inst.k, lambda);
      auto m = meta_lru(inst.trace.catalog, p);
      auto total = run(inst.trace, p, *m).ledger.total();
      auto o = opt(inst.trace, p).cost;
      EXPECT_LE(total, (inst.k + 2) * o + first_load_cost(inst.trace));
    }
  }
}

TEST(Meta, RandomizedCompositionMeanWithinBound) {
  auto t = make_trace("a b c a . b d . a c b . d a");
  auto p = params(2, Rational(1, 4));
  auto o = opt(t, p).cost;
  const int trials = 10000;
  Rational sum = 0;
  for (int s = 0; s < trials; ++s) {
    auto pol = make_policy("meta:rand-marking+alg-inf:rand", t.catalog, p, static_cast<std::uint64_t>(s));
    sum += run(t, p, *pol).ledger.total();
  }
  double mean = to_double(sum / trials);
  double bound = (2 * to_double(harmonic(2)) - 1 + to_double(e_over_e_minus_one())) * to_double(o) * 1.05;
  EXPECT_LE(mean, bound + to_double(first_load_cost(t)));
}
