#include "cachelab/baselines.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace cachelab {

BaselinePolicy::BaselinePolicy(const Catalog& catalog, const ProblemParams& params)
    : catalog_(catalog), params_(params) {
  params_.validate();
}

bool BaselinePolicy::needs_load(const Event& event, const CacheState& cache) const {
  return event.is_request() && !cache.resident(event.file) && !cache.zapped(event.file);
}

void BaselinePolicy::require_cacheable(FileIndex f) const {
  if (catalog_[f].size > params_.k) {
    throw ModelError("file '" + catalog_[f].id + "' is larger than the cache");
  }
}

void BaselinePolicy::require_unit_size(FileIndex f, const char* policy) const {
  if (catalog_[f].size != 1) {
    throw ModelError(std::string(policy) + " needs unit-size files; '" + catalog_[f].id + "' has size " +
                     std::to_string(catalog_[f].size));
  }
}

namespace {

// Evicts residents in ascending key order until size(g) fits.
template <typename Key>
PolicyDecision evict_in_order(const std::map<FileIndex, Key>& key, const CacheState& cache,
                              const Catalog& catalog, std::int64_t k, FileIndex g) {
  PolicyDecision d;
  std::int64_t used = cache.used();
  std::vector<std::pair<Key, FileIndex>> order;
  for (auto f : cache.residents()) order.emplace_back(key.at(f), f);
  std::sort(order.begin(), order.end());
  for (const auto& [unused, f] : order) {
    if (used + catalog[g].size <= k) break;
    d.evictions.push_back(f);
    used -= catalog[f].size;
  }
  return d;
}

}  // namespace

PolicyDecision Lru::decide(StepIndex t, const Event& event, const CacheState& cache) {
  PolicyDecision d;
  if (needs_load(event, cache)) {
    require_cacheable(event.file);
    d = evict_in_order(last_use_, cache, catalog_, params_.k, event.file);
  }
  if (event.is_request() && !cache.zapped(event.file)) last_use_[event.file] = t;
  return d;
}

PolicyDecision Fifo::decide(StepIndex t, const Event& event, const CacheState& cache) {
  PolicyDecision d;
  if (needs_load(event, cache)) {
    require_cacheable(event.file);
    d = evict_in_order(loaded_at_, cache, catalog_, params_.k, event.file);
    loaded_at_[event.file] = t;
  }
  return d;
}

PolicyDecision Fwf::decide(StepIndex, const Event& event, const CacheState& cache) {
  PolicyDecision d;
  if (needs_load(event, cache)) {
    require_cacheable(event.file);
    if (cache.used() + catalog_[event.file].size > params_.k) {
      d.evictions.assign(cache.residents().begin(), cache.residents().end());
    }
  }
  return d;
}

Marking::Marking(const Catalog& catalog, const ProblemParams& params, bool randomized, std::uint64_t seed)
    : BaselinePolicy(catalog, params), randomized_(randomized), rng_(seed) {}

PolicyDecision Marking::decide(StepIndex t, const Event& event, const CacheState& cache) {
  PolicyDecision d;
  std::erase_if(marked_, [&](FileIndex f) { return !cache.resident(f); });
  if (!event.is_request() || cache.zapped(event.file)) return d;
  FileIndex g = event.file;
  require_unit_size(g, randomized_ ? "rand-marking" : "marking");
  if (!cache.resident(g) && cache.used() + 1 > params_.k) {
    std::vector<FileIndex> unmarked;
    for (auto f : cache.residents()) {
      if (!marked_.contains(f)) unmarked.push_back(f);
    }
    if (unmarked.empty()) {
      marked_.clear();
      ++phases_;
      unmarked.assign(cache.residents().begin(), cache.residents().end());
    }
    FileIndex victim;
    if (randomized_) {
      victim = unmarked[rng_.below(unmarked.size())];
    } else {
      victim = *std::min_element(unmarked.begin(), unmarked.end(), [&](FileIndex a, FileIndex b) {
        return std::pair(last_use_.at(a), a) < std::pair(last_use_.at(b), b);
      });
    }
    d.evictions.push_back(victim);
  }
  marked_.insert(g);
  last_use_[g] = t;
  return d;
}

PolicyDecision Landlord::decide(StepIndex, const Event& event, const CacheState& cache) {
  PolicyDecision d;
  std::erase_if(credit_, [&](const auto& kv) { return !cache.resident(kv.first); });
  if (!event.is_request() || cache.zapped(event.file)) return d;
  FileIndex g = event.file;
  if (cache.resident(g)) {
    credit_[g] = catalog_[g].cost;
    return d;
  }
  require_cacheable(g);
  std::int64_t used = cache.used();
  std::set<FileIndex> live = cache.residents();
  while (used + catalog_[g].size > params_.k) {
    Rational delta;
    bool first = true;
    for (auto f : live) {
      Rational r = credit_.at(f) / catalog_[f].size;
      if (first || r < delta) delta = r;
      first = false;
    }
    for (auto f : live) credit_[f] -= delta * catalog_[f].size;
    for (auto it = live.begin(); it != live.end() && used + catalog_[g].size > params_.k;) {
      if (credit_[*it] == 0) {
        d.evictions.push_back(*it);
        used -= catalog_[*it].size;
        credit_.erase(*it);
        it = live.erase(it);
      } else {
        ++it;
      }
    }
  }
  credit_[g] = catalog_[g].cost;
  return d;
}

ZapFirst::ZapFirst(const Catalog& catalog, const ProblemParams& params) : BaselinePolicy(catalog, params) {
  if (!params_.zapping()) throw ModelError("zap-first needs a zap cost");
}

PolicyDecision ZapFirst::decide(StepIndex, const Event& event, const CacheState& cache) {
  PolicyDecision d;
  if (event.is_request() && !cache.zapped(event.file)) d.zaps.push_back(event.file);
  return d;
}

IdleEvicting::IdleEvicting(const Catalog& catalog, const ProblemParams& params, std::unique_ptr<Policy> inner,
                           std::int64_t d)
    : BaselinePolicy(catalog, params), inner_(std::move(inner)), d_(d) {
  if (!inner_) throw std::invalid_argument("a_d needs an inner policy");
  if (d_ < 1) throw std::invalid_argument("a_d needs d >= 1");
}

PolicyDecision IdleEvicting::decide(StepIndex t, const Event& event, const CacheState& cache) {
  PolicyDecision d;
  CacheState view = cache;
  for (auto f : cache.residents()) {
    if (event.is_request() && event.file == f) continue;
    if (static_cast<std::int64_t>(t - last_request_.at(f)) >= d_) {
      d.evictions.push_back(f);
      view.evict(f, catalog_[f].size);
    }
  }
  PolicyDecision rest = inner_->decide(t, event, view);
  d.evictions.insert(d.evictions.end(), rest.evictions.begin(), rest.evictions.end());
  d.zaps = std::move(rest.zaps);
  if (event.is_request() && !cache.zapped(event.file)) last_request_[event.file] = t;
  return d;
}

}  // namespace cachelab
