#include "cachelab/ski_rental.hpp"

#include <stdexcept>

namespace cachelab {

std::int64_t break_even_steps(const Rational& rent, const Rational& buy) {
  if (rent < 0 || buy < 0) throw std::invalid_argument("ski rental costs must be >= 0");
  if (rent == 0) return kNeverBuy;
  std::int64_t b = to_int64(ceil_integer(buy / rent));
  return b < 1 ? 1 : b;
}

std::vector<Rational> randomized_buy_distribution(std::int64_t b) {
  if (b < 1) throw std::invalid_argument("break-even must be >= 1");
  std::vector<Rational> p(static_cast<std::size_t>(b));
  Rational q = 1 - Rational(1, b);
  // p_b = 1, p_{i-1} = q * p_i before normalization.
  Rational w = 1;
  Rational total = 0;
  for (std::int64_t i = b; i >= 1; --i) {
    p[static_cast<std::size_t>(i - 1)] = w;
    total += w;
    w *= q;
  }
  for (auto& v : p) v /= total;
  return p;
}

Rational ski_cost(const Rational& rent, const Rational& buy, std::int64_t buy_step, std::int64_t season) {
  if (season < buy_step) return rent * season;
  return rent * (buy_step - 1) + buy;
}

Rational ski_opt(const Rational& rent, const Rational& buy, std::int64_t season) {
  Rational renting = rent * season;
  return renting < buy ? renting : buy;
}

Rational expected_ski_cost(const Rational& rent, const Rational& buy, const std::vector<Rational>& dist,
                           std::int64_t season) {
  Rational e = 0;
  for (std::size_t i = 0; i < dist.size(); ++i) {
    e += dist[i] * ski_cost(rent, buy, static_cast<std::int64_t>(i + 1), season);
  }
  return e;
}

SkiRentalStrategy SkiRentalStrategy::deterministic(const Rational& rent, const Rational& buy) {
  return {SkiKind::Deterministic, break_even_steps(rent, buy)};
}

SkiRentalStrategy SkiRentalStrategy::randomized(const Rational& rent, const Rational& buy, Rng& rng) {
  std::int64_t b = break_even_steps(rent, buy);
  if (b == kNeverBuy) return {SkiKind::Randomized, kNeverBuy};
  auto dist = randomized_buy_distribution(b);
  Rational u = rng.unit_rational();
  Rational cdf = 0;
  for (std::size_t i = 0; i < dist.size(); ++i) {
    cdf += dist[i];
    if (u < cdf) return {SkiKind::Randomized, static_cast<std::int64_t>(i + 1)};
  }
  return {SkiKind::Randomized, b};
}

AlgInfinity::AlgInfinity(const Catalog& catalog, const ProblemParams& params, SkiKind kind, std::uint64_t seed)
    : catalog_(catalog), params_(params), kind_(kind), rng_(seed) {
  params_.validate();
}

PolicyDecision AlgInfinity::decide(StepIndex t, const Event& event, const CacheState& cache) {
  PolicyDecision d;
  for (auto f : cache.residents()) {
    if (event.is_request() && event.file == f) continue;
    auto it = phases_.find(f);
    if (it == phases_.end()) throw std::logic_error("resident file has no ski-rental phase");
    if (it->second.strategy.should_buy(++it->second.elapsed)) {
      d.evictions.push_back(f);
      phases_.erase(it);
    }
  }
  if (event.is_request() && !cache.zapped(event.file)) {
    FileIndex f = event.file;
    const auto& spec = catalog_[f];
    Rational rent = params_.rent_rate(spec);
    auto strategy = SkiRentalStrategy::deterministic(rent, spec.cost);
    if (kind_ == SkiKind::Randomized) {
      Rng phase_rng = rng_.split(f).split(t);
      strategy = SkiRentalStrategy::randomized(rent, spec.cost, phase_rng);
    }
    phases_.insert_or_assign(f, Phase{t, 0, strategy});
  }
  return d;
}

HighRentPaging::HighRentPaging(const Catalog& catalog, const ProblemParams& params, SkiKind kind,
                               std::uint64_t seed)
    : AlgInfinity(catalog, params, kind, seed) {
  if (params_.lambda * params_.k < 1) throw ModelError("high-rent paging needs lambda >= 1/k");
}

PolicyDecision HighRentPaging::decide(StepIndex t, const Event& event, const CacheState& cache) {
  PolicyDecision d = AlgInfinity::decide(t, event, cache);
  if (event.is_request() && !cache.zapped(event.file) && !cache.resident(event.file)) {
    std::int64_t used = cache.used();
    for (auto f : d.evictions) used -= catalog_[f].size;
    if (used + catalog_[event.file].size > params_.k) {
      throw CapacityError("high-rent paging cannot admit file " + catalog_[event.file].id +
                          ": cache full at step " + std::to_string(t));
    }
  }
  return d;
}

}  // namespace cachelab
