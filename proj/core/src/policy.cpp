#include "cachelab/policy.hpp"

namespace cachelab {

Simulation::Simulation(const Catalog& catalog, ProblemParams params, Policy& policy)
    : catalog_(catalog), params_(std::move(params)), policy_(policy) {
  params_.validate();
}

const StepRecord& Simulation::step(const Event& event) {
  StepIndex t = history_.size();
  PolicyDecision decision = policy_.decide(t, event, cache_);
  LedgerDelta delta = advance_step(cache_, event, catalog_, params_, decision, policy_.capacity());
  ledger_ += delta;
  history_.push_back({event, std::move(decision), std::move(delta)});
  return history_.back();
}

RunResult run(const Trace& trace, const ProblemParams& params, Policy& policy) {
  Simulation sim(trace.catalog, params, policy);
  for (const auto& e : trace.events) sim.step(e);
  return {sim.ledger(), sim.history()};
}

}  // namespace cachelab
