#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <vector>

#include "cachelab/policy.hpp"
#include "cachelab/rng.hpp"

namespace cachelab {

enum class SkiKind : std::uint8_t { Deterministic, Randomized };

inline constexpr std::int64_t kNeverBuy = std::numeric_limits<std::int64_t>::max();

/// B = max(1, ceil(buy / rent)); kNeverBuy when rent is 0.
std::int64_t break_even_steps(const Rational& rent, const Rational& buy);

/// p_i for i = 1..b, proportional to (1 - 1/b)^(b - i). Exact.
std::vector<Rational> randomized_buy_distribution(std::int64_t b);

/// Cost of a strategy that buys on step buy_step (1-based) when the season
/// lasts season steps: rent for every step before buying, plus buy if the
/// season reaches buy_step.
Rational ski_cost(const Rational& rent, const Rational& buy, std::int64_t buy_step, std::int64_t season);

/// min(season * rent, buy).
Rational ski_opt(const Rational& rent, const Rational& buy, std::int64_t season);

/// Expected cost of buying on step i with probability dist[i-1].
Rational expected_ski_cost(const Rational& rent, const Rational& buy, const std::vector<Rational>& dist,
                           std::int64_t season);

class SkiRentalStrategy {
 public:
  static SkiRentalStrategy deterministic(const Rational& rent, const Rational& buy);
  /// Threshold drawn once from randomized_buy_distribution by inverting the
  /// CDF at an exact 53-bit uniform.
  static SkiRentalStrategy randomized(const Rational& rent, const Rational& buy, Rng& rng);

  /// step_index counts steps of the phase after the arrival step, from 1.
  bool should_buy(std::int64_t step_index) const noexcept { return step_index >= threshold_; }

  std::int64_t threshold() const noexcept { return threshold_; }
  SkiKind kind() const noexcept { return kind_; }

 private:
  SkiRentalStrategy(SkiKind kind, std::int64_t threshold) : kind_(kind), threshold_(threshold) {}

  SkiKind kind_;
  std::int64_t threshold_;
};

/// Rental caching on an unbounded cache: every file runs its own ski-rental
/// instance (rent = its rent rate, buy = its retrieval cost) from each
/// request, and is evicted on the step the instance buys. A fresh strategy
/// is drawn per phase from the seed split by (file, phase start).
class AlgInfinity : public Policy {
 public:
  struct Phase {
    StepIndex start = 0;
    std::int64_t elapsed = 0;
    SkiRentalStrategy strategy;
  };

  AlgInfinity(const Catalog& catalog, const ProblemParams& params, SkiKind kind, std::uint64_t seed = 0);

  PolicyDecision decide(StepIndex t, const Event& event, const CacheState& cache) override;
  Capacity capacity() const override { return Capacity::Unbounded; }

  SkiKind kind() const noexcept { return kind_; }
  const std::map<FileIndex, Phase>& phases() const noexcept { return phases_; }

 protected:
  const Catalog& catalog_;
  ProblemParams params_;

 private:
  SkiKind kind_;
  Rng rng_;
  std::map<FileIndex, Phase> phases_;
};

/// The same per-file rule inside a size-k cache. Requires lambda >= 1/k and
/// asserts on admission that the cache never overflows.
class HighRentPaging : public AlgInfinity {
 public:
  /// Throws ModelError when lambda < 1/k.
  HighRentPaging(const Catalog& catalog, const ProblemParams& params, SkiKind kind, std::uint64_t seed = 0);

  /// Throws CapacityError if the request could not be admitted.
  PolicyDecision decide(StepIndex t, const Event& event, const CacheState& cache) override;
  Capacity capacity() const override { return Capacity::Bounded; }
};

}  // namespace cachelab
