#pragma once

// Small, slow, independent re-implementations used to cross-check the
// library in tests. Nothing here calls into the code under test beyond the
// plain data types.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <list>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cachelab/model.hpp"

namespace cachelab::testing {

/// Builds a trace from "a b . a" style text: '.' is a tick, any other token a
/// request. Files are unit size and unit cost unless listed in specs.
inline Trace make_trace(const std::string& text, const std::vector<FileSpec>& specs = {}) {
  Trace t;
  for (const auto& s : specs) t.catalog.add(s);
  std::istringstream in(text);
  for (std::string tok; in >> tok;) {
    if (tok == ".") {
      t.events.push_back(Event::tick());
      continue;
    }
    auto f = t.catalog.find(tok);
    if (!f) f = t.catalog.add({tok, 1, 1});
    t.events.push_back(Event::request(*f));
  }
  return t;
}

/// Recomputes the cost of a schedule step by step with a plain set model.
/// Returns nullopt if the schedule is illegal.
inline std::optional<CostLedger> reference_ledger(const Trace& trace, const ProblemParams& p,
                                                  const std::vector<PolicyDecision>& schedule) {
  std::set<FileIndex> cache;
  std::set<FileIndex> zapped;
  CostLedger l;
  for (std::size_t i = 0; i < trace.events.size(); ++i) {
    const auto& d = schedule[i];
    for (auto f : d.evictions) {
      if (!cache.count(f)) return std::nullopt;
      cache.erase(f);
    }
    for (auto f : d.zaps) {
      if (zapped.count(f) || !p.zap_cost) return std::nullopt;
      cache.erase(f);
      zapped.insert(f);
      l.zapping += *p.zap_cost;
    }
    const auto& e = trace.events[i];
    if (e.is_request() && !zapped.count(e.file) && !cache.count(e.file)) {
      l.retrieval += trace.catalog[e.file].cost;
      cache.insert(e.file);
    }
    std::int64_t used = 0;
    for (auto f : cache) {
      used += trace.catalog[f].size;
      l.rental += p.rent_by_size ? p.lambda * trace.catalog[f].size : p.lambda;
    }
    if (used > p.k) return std::nullopt;
  }
  return l;
}

/// Exhaustive optimum over every legal sequence of cache contents: at each
/// step any subset of the files may be dropped or zapped before the event.
/// Exponential; meant for at most 3 files and 6 steps.
inline Rational reference_opt(const Trace& trace, const ProblemParams& p) {
  const std::size_t m = trace.catalog.size();
  const std::size_t n = trace.events.size();
  std::optional<Rational> best;
  std::function<void(std::size_t, std::uint32_t, std::uint32_t, Rational)> go =
      [&](std::size_t i, std::uint32_t cache, std::uint32_t zap, Rational acc) {
        if (best && acc >= *best) return;
        if (i == n) {
          best = acc;
          return;
        }
        // choose kept subset of the cache and newly zapped subset
        for (std::uint32_t keep = cache;; keep = (keep - 1) & cache) {
          std::uint32_t free_files = ((1u << m) - 1) & ~zap;
          std::uint32_t zap_options = p.zap_cost ? free_files : 0;
          for (std::uint32_t nz = zap_options;; nz = (nz - 1) & zap_options) {
            std::uint32_t c2 = keep & ~nz;
            std::uint32_t z2 = zap | nz;
            Rational cost = acc;
            if (nz) cost += *p.zap_cost * static_cast<std::int64_t>(std::popcount(nz));
            const auto& e = trace.events[i];
            if (e.is_request() && !(z2 >> e.file & 1) && !(c2 >> e.file & 1)) {
              cost += trace.catalog[e.file].cost;
              c2 |= 1u << e.file;
            }
            std::int64_t used = 0;
            for (std::size_t f = 0; f < m; ++f) {
              if (c2 >> f & 1) {
                used += trace.catalog[static_cast<FileIndex>(f)].size;
                cost += p.lambda;
              }
            }
            if (used <= p.k) go(i + 1, c2, z2, cost);
            if (nz == 0) break;
          }
          if (keep == 0) break;
        }
      };
  go(0, 0, 0, Rational(0));
  return best.value_or(Rational(0));
}

/// Textbook LRU miss count with a recency list.
inline std::size_t reference_lru_misses(const Trace& trace, std::size_t k) {
  std::list<FileIndex> order;  // front = most recent
  std::size_t misses = 0;
  for (const auto& e : trace.events) {
    if (!e.is_request()) continue;
    auto it = std::find(order.begin(), order.end(), e.file);
    if (it != order.end()) {
      order.erase(it);
    } else {
      ++misses;
      if (order.size() == k) order.pop_back();
    }
    order.push_front(e.file);
  }
  return misses;
}

}  // namespace cachelab::testing
