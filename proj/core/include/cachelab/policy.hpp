#pragma once

#include <memory>
#include <vector>

#include "cachelab/model.hpp"

namespace cachelab {

/// An online caching policy. decide() sees the step's event and the
/// authoritative cache contents, and returns the evictions and zaps to apply
/// before the event is served. The requested file is loaded by the simulator
/// unless the policy zaps it.
class Policy {
 public:
  virtual ~Policy() = default;

  virtual PolicyDecision decide(StepIndex t, const Event& event, const CacheState& cache) = 0;

  /// ALG-infinity runs on an unbounded cache; everything else respects k.
  virtual Capacity capacity() const { return Capacity::Bounded; }
};

struct StepRecord {
  Event event;
  PolicyDecision decision;
  LedgerDelta delta;
};

/// Drives one policy over an event stream, owning the cache state and the
/// ledger. Events may be supplied incrementally, which is how adaptive
/// adversaries interleave with their target.
class Simulation {
 public:
  Simulation(const Catalog& catalog, ProblemParams params, Policy& policy);

  const StepRecord& step(const Event& event);

  StepIndex now() const noexcept { return history_.size(); }
  const CacheState& cache() const noexcept { return cache_; }
  const CostLedger& ledger() const noexcept { return ledger_; }
  const std::vector<StepRecord>& history() const noexcept { return history_; }
  const ProblemParams& params() const noexcept { return params_; }

 private:
  const Catalog& catalog_;
  ProblemParams params_;
  Policy& policy_;
  CacheState cache_;
  CostLedger ledger_;
  std::vector<StepRecord> history_;
};

struct RunResult {
  CostLedger ledger;
  std::vector<StepRecord> steps;
};

RunResult run(const Trace& trace, const ProblemParams& params, Policy& policy);

}  // namespace cachelab
