#include "cachelab/meta.hpp"

#include <stdexcept>

namespace cachelab {

MetaPolicy::MetaPolicy(const Catalog& catalog, const ProblemParams& params, std::unique_ptr<Policy> inner,
                       std::unique_ptr<AlgInfinity> ski)
    : catalog_(catalog), params_(params), inner_(std::move(inner)), ski_policy_(std::move(ski)) {
  if (!inner_ || !ski_policy_) throw std::invalid_argument("meta needs both components");
  ProblemParams inner_params = params_;
  inner_params.lambda = 0;
  ProblemParams ski_params = params_;
  ski_params.zap_cost.reset();
  inner_sim_ = std::make_unique<Simulation>(catalog_, inner_params, *inner_);
  ski_sim_ = std::make_unique<Simulation>(catalog_, ski_params, *ski_policy_);
}

PolicyDecision MetaPolicy::decide(StepIndex, const Event& event, const CacheState& cache) {
  const CacheState before1 = inner_sim_->cache();
  inner_sim_->step(event);
  ski_sim_->step(event);
  const CacheState& after1 = inner_sim_->cache();
  const CacheState& after2 = ski_sim_->cache();

  PolicyDecision d;
  for (auto f : after1.zapped_files()) {
    if (!cache.zapped(f)) d.zaps.push_back(f);
  }
  for (auto f : cache.residents()) {
    bool kept = after1.resident(f) && after2.resident(f);
    if (kept || after1.zapped(f)) continue;
    d.evictions.push_back(f);
    if (!after1.resident(f)) {
      ++audit_.evictions_by_inner;
    } else {
      ++audit_.evictions_by_ski;
    }
  }

  if (event.is_request() && !cache.zapped(event.file) && !cache.resident(event.file) &&
      !after1.zapped(event.file)) {
    if (!before1.resident(event.file)) {
      ++audit_.faults_by_inner;
    } else {
      ++audit_.faults_by_ski;
    }
    // The requested file must end up in both caches; otherwise the
    // intersection would not hold it.
    if (!after1.resident(event.file) || !after2.resident(event.file)) {
      throw std::logic_error("meta component did not admit the requested file");
    }
  }
  return d;
}

}  // namespace cachelab
