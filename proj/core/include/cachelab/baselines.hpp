#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>

#include "cachelab/policy.hpp"
#include "cachelab/rng.hpp"

namespace cachelab {

/// Shared plumbing for the classical policies: catalog access and the
/// "make room for the request" test.
class BaselinePolicy : public Policy {
 public:
  BaselinePolicy(const Catalog& catalog, const ProblemParams& params);

 protected:
  /// True when the event is a request that must be loaded (absent, not zapped).
  bool needs_load(const Event& event, const CacheState& cache) const;
  /// Throws ModelError when the requested file can never fit.
  void require_cacheable(FileIndex f) const;
  void require_unit_size(FileIndex f, const char* policy) const;

  const Catalog& catalog_;
  ProblemParams params_;
};

/// Evicts least recently requested files until the request fits.
class Lru : public BaselinePolicy {
 public:
  using BaselinePolicy::BaselinePolicy;
  PolicyDecision decide(StepIndex t, const Event& event, const CacheState& cache) override;

 private:
  std::map<FileIndex, StepIndex> last_use_;
};

/// Evicts in load order until the request fits.
class Fifo : public BaselinePolicy {
 public:
  using BaselinePolicy::BaselinePolicy;
  PolicyDecision decide(StepIndex t, const Event& event, const CacheState& cache) override;

 private:
  std::map<FileIndex, StepIndex> loaded_at_;
};

/// Flush-when-full: empties the cache whenever the request does not fit.
class Fwf : public BaselinePolicy {
 public:
  using BaselinePolicy::BaselinePolicy;
  PolicyDecision decide(StepIndex t, const Event& event, const CacheState& cache) override;
};

/// Marking on unit-size pages. Deterministic marking evicts the least
/// recently used unmarked page; the randomized variant picks uniformly.
class Marking : public BaselinePolicy {
 public:
  Marking(const Catalog& catalog, const ProblemParams& params, bool randomized, std::uint64_t seed = 0);
  PolicyDecision decide(StepIndex t, const Event& event, const CacheState& cache) override;

  const std::set<FileIndex>& marked() const noexcept { return marked_; }
  std::size_t phases() const noexcept { return phases_; }

 private:
  bool randomized_;
  Rng rng_;
  std::set<FileIndex> marked_;
  std::map<FileIndex, StepIndex> last_use_;
  std::size_t phases_ = 0;
};

/// Landlord for sized, costed files: credit is set to cost on load and on
/// every hit; under pressure all residents pay rent proportional to size
/// and zero-credit files are evicted.
class Landlord : public BaselinePolicy {
 public:
  using BaselinePolicy::BaselinePolicy;
  PolicyDecision decide(StepIndex t, const Event& event, const CacheState& cache) override;

  const std::map<FileIndex, Rational>& credits() const noexcept { return credit_; }

 private:
  std::map<FileIndex, Rational> credit_;
};

/// Zaps every file on its first request.
class ZapFirst : public BaselinePolicy {
 public:
  /// Throws ModelError when zapping is disabled.
  ZapFirst(const Catalog& catalog, const ProblemParams& params);
  PolicyDecision decide(StepIndex t, const Event& event, const CacheState& cache) override;
};

/// A_d: any file not requested for d steps (ticks included) is evicted; the
/// remaining decisions come from the wrapped policy, which sees the cache
/// without those files.
class IdleEvicting : public BaselinePolicy {
 public:
  IdleEvicting(const Catalog& catalog, const ProblemParams& params, std::unique_ptr<Policy> inner,
               std::int64_t d);
  PolicyDecision decide(StepIndex t, const Event& event, const CacheState& cache) override;

  std::int64_t d() const noexcept { return d_; }

 private:
  std::unique_ptr<Policy> inner_;
  std::int64_t d_;
  std::map<FileIndex, StepIndex> last_request_;
};

}  // namespace cachelab
