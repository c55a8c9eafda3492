#pragma once

#include <memory>

#include "cachelab/policy.hpp"
#include "cachelab/ski_rental.hpp"

namespace cachelab {

/// Runs a capacity-k caching policy and ALG-infinity side by side, each in
/// its own simulation over the same events, and keeps the intersection of
/// their caches. Zaps of the inner policy are mirrored.
///
/// The inner simulation sees lambda = 0 and ALG-infinity sees zapping
/// disabled; both keep full ledgers so their costs can be compared with
/// the composite.
class MetaPolicy : public Policy {
 public:
  struct Audit {
    std::size_t evictions_by_inner = 0;
    std::size_t evictions_by_ski = 0;
    std::size_t faults_by_inner = 0;  // the inner policy faulted too
    std::size_t faults_by_ski = 0;    // only ALG-infinity faulted
  };

  MetaPolicy(const Catalog& catalog, const ProblemParams& params, std::unique_ptr<Policy> inner,
             std::unique_ptr<AlgInfinity> ski);

  PolicyDecision decide(StepIndex t, const Event& event, const CacheState& cache) override;

  const Simulation& inner() const noexcept { return *inner_sim_; }
  const Simulation& ski() const noexcept { return *ski_sim_; }
  const Audit& audit() const noexcept { return audit_; }

 private:
  const Catalog& catalog_;
  ProblemParams params_;
  std::unique_ptr<Policy> inner_;
  std::unique_ptr<AlgInfinity> ski_policy_;
  std::unique_ptr<Simulation> inner_sim_;
  std::unique_ptr<Simulation> ski_sim_;
  Audit audit_;
};

}  // namespace cachelab
