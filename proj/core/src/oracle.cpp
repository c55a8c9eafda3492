#include "cachelab/oracle.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <limits>
#include <map>
#include <stdexcept>

namespace cachelab {

Rational LpAssignment::objective(const Trace& trace, const ProblemParams& params, bool include_rent) const {
  Rational total = 0;
  for (auto t : x) total += trace.catalog[trace.events.at(t).file].cost;
  if (include_rent) {
    for (const auto& [t, s] : y) total += params.rent_rate(trace.catalog[trace.events.at(t).file]);
  }
  if (!z.empty()) {
    if (!params.zapping()) throw std::invalid_argument("LP assignment zaps without a zap cost");
    total += *params.zap_cost * static_cast<std::int64_t>(z.size());
  }
  return total;
}

CostLedger replay(const Trace& trace, const ProblemParams& params, std::span<const PolicyDecision> schedule) {
  if (schedule.size() != trace.events.size()) throw std::invalid_argument("schedule length mismatch");
  CacheState state;
  CostLedger ledger;
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    ledger += advance_step(state, trace.events[i], trace.catalog, params, schedule[i]);
  }
  return ledger;
}

LpAssignment lp_assignment_of(const Trace& trace, const ProblemParams& params,
                              std::span<const PolicyDecision> schedule) {
  const std::size_t n = trace.events.size();
  std::vector<CacheState> after(n);
  CacheState state;
  for (std::size_t i = 0; i < n; ++i) {
    advance_step(state, trace.events[i], trace.catalog, params, schedule[i]);
    after[i] = state;
  }
  LpAssignment lp;
  if (n == 0) return lp;
  const auto& zapped = after.back().zapped_files();
  auto next = trace.next_request();
  for (std::size_t t = 0; t < n; ++t) {
    if (!trace.events[t].is_request()) continue;
    FileIndex f = trace.events[t].file;
    if (zapped.contains(f)) {
      lp.z.insert(f);
      continue;
    }
    StepIndex end = next[t] == kNever ? n : next[t];
    bool left = false;
    for (StepIndex s = t; s < end; ++s) {
      if (!after[s].resident(f)) {
        left = true;
        break;
      }
    }
    if (left) {
      lp.x.insert(t);
    } else {
      for (StepIndex s = t; s < end; ++s) lp.y.insert({t, s});
    }
  }
  return lp;
}

namespace {

// Costs scaled to integers by the lcm of all denominators involved.
struct Scaled {
  Integer scale = 1;
  std::vector<FileIndex> files;         // local bit -> file
  std::map<FileIndex, unsigned> bit;    // file -> local bit
  std::vector<std::int64_t> cost;       // per bit
  std::vector<std::int64_t> rent;       // per bit
  std::vector<std::int64_t> size;       // per bit
  std::int64_t zap = 0;
  bool zapping = false;
  std::int64_t k = 0;
  std::vector<int> request;             // per step: bit or -1
  std::vector<std::int64_t> rent_of;    // per mask
  std::vector<std::int64_t> size_of;    // per mask
};

Integer lcm_of(const Integer& a, const Integer& b) { return a / boost::multiprecision::gcd(a, b) * b; }

Scaled scale_instance(const Trace& trace, const ProblemParams& params) {
  Scaled sc;
  sc.files = trace.requested_files();
  for (unsigned i = 0; i < sc.files.size(); ++i) sc.bit[sc.files[i]] = i;
  for (auto f : sc.files) {
    sc.scale = lcm_of(sc.scale, denominator(trace.catalog[f].cost));
    sc.scale = lcm_of(sc.scale, denominator(params.rent_rate(trace.catalog[f])));
  }
  sc.zapping = params.zapping();
  if (sc.zapping) sc.scale = lcm_of(sc.scale, denominator(*params.zap_cost));
  auto to_scaled = [&](const Rational& v) { return to_int64(numerator(Rational(v * sc.scale))); };
  for (auto f : sc.files) {
    const auto& spec = trace.catalog[f];
    sc.cost.push_back(to_scaled(spec.cost));
    sc.rent.push_back(to_scaled(params.rent_rate(spec)));
    sc.size.push_back(spec.size);
  }
  if (sc.zapping) sc.zap = to_scaled(*params.zap_cost);
  sc.k = params.k;
  for (const auto& e : trace.events) sc.request.push_back(e.is_request() ? static_cast<int>(sc.bit.at(e.file)) : -1);
  std::size_t masks = std::size_t{1} << sc.files.size();
  sc.rent_of.assign(masks, 0);
  sc.size_of.assign(masks, 0);
  for (std::size_t m = 1; m < masks; ++m) {
    unsigned low = static_cast<unsigned>(std::countr_zero(m));
    sc.rent_of[m] = sc.rent_of[m & (m - 1)] + sc.rent[low];
    sc.size_of[m] = sc.size_of[m & (m - 1)] + sc.size[low];
  }
  // Guard the int64 DP against overflow: bound the worst schedule.
  Integer worst = 0;
  for (std::size_t i = 0; i < sc.files.size(); ++i) worst += Integer(sc.cost[i]) + sc.rent[i] + sc.zap;
  worst *= static_cast<std::int64_t>(trace.events.size() + 1);
  if (worst > std::numeric_limits<std::int64_t>::max() / 4) throw OracleLimitError("scaled costs overflow");
  return sc;
}

// Enumerates the lazy successors of (R, Z) at step i. visit(R', Z', cost).
template <typename Visit>
void successors(const Scaled& sc, std::size_t i, std::uint32_t R, std::uint32_t Z, Visit&& visit) {
  auto subsets = [](std::uint32_t m, auto&& fn) {
    for (std::uint32_t s = m;; s = (s - 1) & m) {
      fn(s);
      if (s == 0) break;
    }
  };
  int r = sc.request[i];
  if (r < 0 || (Z >> r & 1U)) {
    subsets(R, [&](std::uint32_t R2) { visit(R2, Z, sc.rent_of[R2]); });
    return;
  }
  std::uint32_t fb = 1U << r;
  if (sc.zapping) {
    subsets(R & ~fb, [&](std::uint32_t R2) { visit(R2, Z | fb, sc.zap + sc.rent_of[R2]); });
  }
  if (sc.size[static_cast<std::size_t>(r)] > sc.k) {
    if (!sc.zapping) throw ModelError("file larger than the cache cannot be served without zapping");
    return;
  }
  std::int64_t load = (R & fb) ? 0 : sc.cost[static_cast<std::size_t>(r)];
  subsets(R & ~fb, [&](std::uint32_t rest) {
    std::uint32_t R2 = rest | fb;
    if (sc.size_of[R2] <= sc.k) visit(R2, Z, load + sc.rent_of[R2]);
  });
}

PolicyDecision decision_between(const Scaled& sc, std::uint32_t R, std::uint32_t Z, std::uint32_t R2,
                                std::uint32_t Z2) {
  PolicyDecision d;
  for (unsigned b = 0; b < sc.files.size(); ++b) {
    std::uint32_t m = 1U << b;
    bool zapped_now = (Z2 & m) && !(Z & m);
    if (zapped_now) d.zaps.push_back(sc.files[b]);
    if ((R & m) && !(R2 & m) && !zapped_now) d.evictions.push_back(sc.files[b]);
  }
  return d;
}

}  // namespace

OracleSolution opt(const Trace& trace, const ProblemParams& params, const OracleLimits& limits) {
  params.validate();
  auto files = trace.requested_files();
  if (files.size() > limits.max_files || trace.events.size() > limits.max_steps || params.k > limits.max_k) {
    throw OracleLimitError("instance exceeds oracle limits (files " + std::to_string(files.size()) + ", steps " +
                           std::to_string(trace.events.size()) + ", k " + std::to_string(params.k) + ")");
  }
  Scaled sc = scale_instance(trace, params);
  const unsigned m = static_cast<unsigned>(sc.files.size());
  auto key = [m](std::uint32_t R, std::uint32_t Z) { return R | (Z << m); };

  struct Node {
    std::int64_t cost;
    std::uint32_t parent;
  };
  const std::size_t n = trace.events.size();
  std::vector<std::map<std::uint32_t, Node>> layers(n + 1);
  layers[0][0] = {0, 0};
  const std::uint32_t low = (m == 0) ? 0 : ((1U << m) - 1);
  for (std::size_t i = 0; i < n; ++i) {
    auto& next = layers[i + 1];
    for (const auto& [k0, node] : layers[i]) {
      std::uint32_t R = k0 & low;
      std::uint32_t Z = k0 >> m;
      successors(sc, i, R, Z, [&](std::uint32_t R2, std::uint32_t Z2, std::int64_t c) {
        std::int64_t total = node.cost + c;
        auto [it, inserted] = next.try_emplace(key(R2, Z2), Node{total, k0});
        if (!inserted && total < it->second.cost) it->second = {total, k0};
      });
    }
  }

  OracleSolution sol;
  std::uint32_t best = 0;
  std::int64_t best_cost = 0;
  bool first = true;
  for (const auto& [k0, node] : layers[n]) {
    if (first || node.cost < best_cost) {
      best = k0;
      best_cost = node.cost;
      first = false;
    }
  }
  sol.schedule.resize(n);
  std::uint32_t cur = best;
  for (std::size_t i = n; i-- > 0;) {
    std::uint32_t prev = layers[i + 1].at(cur).parent;
    sol.schedule[i] = decision_between(sc, prev & low, prev >> m, cur & low, cur >> m);
    cur = prev;
  }
  sol.cost = Rational(Integer(best_cost), sc.scale);
  sol.ledger = replay(trace, params, sol.schedule);
  if (sol.ledger.total() != sol.cost) throw InvariantViolation("oracle schedule does not replay to its cost");
  sol.lp = lp_assignment_of(trace, params, sol.schedule);
  sol.lp_objective = sol.lp.objective(trace, params, params.lambda > 0);
  return sol;
}

Rational brute_force_opt(const Trace& trace, const ProblemParams& params) {
  params.validate();
  Scaled sc = scale_instance(trace, params);
  const std::size_t n = trace.events.size();
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  std::function<void(std::size_t, std::uint32_t, std::uint32_t, std::int64_t)> go =
      [&](std::size_t i, std::uint32_t R, std::uint32_t Z, std::int64_t acc) {
        if (i == n) {
          best = std::min(best, acc);
          return;
        }
        successors(sc, i, R, Z, [&](std::uint32_t R2, std::uint32_t Z2, std::int64_t c) { go(i + 1, R2, Z2, acc + c); });
      };
  go(0, 0, 0, 0);
  return Rational(Integer(best), sc.scale);
}

Rational brute_force_opt_full(const Trace& trace, const ProblemParams& params) {
  params.validate();
  const std::size_t n = trace.events.size();
  const auto& catalog = trace.catalog;
  const std::size_t m = catalog.size();
  Rational best = -1;
  // Per file per step: 0 keep/idle, 1 evict (resident only), 2 zap.
  std::function<void(std::size_t, const CacheState&, const Rational&)> go = [&](std::size_t i, const CacheState& st,
                                                                               const Rational& acc) {
    if (i == n) {
      if (best < 0 || acc < best) best = acc;
      return;
    }
    PolicyDecision d;
    std::function<void(std::size_t)> choose = [&](std::size_t f) {
      if (f == m) {
        CacheState next = st;
        try {
          LedgerDelta delta = advance_step(next, trace.events[i], catalog, params, d);
          go(i + 1, next, acc + delta.total());
        } catch (const CapacityError&) {
        }
        return;
      }
      auto fi = static_cast<FileIndex>(f);
      choose(f + 1);
      if (st.resident(fi)) {
        d.evictions.push_back(fi);
        choose(f + 1);
        d.evictions.pop_back();
      }
      if (params.zapping() && !st.zapped(fi)) {
        d.zaps.push_back(fi);
        choose(f + 1);
        d.zaps.pop_back();
      }
    };
    choose(0);
  };
  go(0, CacheState{}, Rational(0));
  if (best < 0) throw ModelError("no feasible schedule");
  return best;
}

bool SanityReport::ok() const {
  return std::all_of(entries.begin(), entries.end(), [](const SanityEntry& e) { return e.ok; });
}

SanityReport opt_lower_bound_sanity(const OracleSolution& solution,
                                    const std::vector<std::pair<std::string, CostLedger>>& ledgers) {
  SanityReport report{solution.cost, {}};
  for (const auto& [name, ledger] : ledgers) {
    Rational total = ledger.total();
    report.entries.push_back({name, total, solution.cost <= total});
  }
  return report;
}

CostLedger belady_ledger(const Catalog& catalog, std::span<const Event> events, const ProblemParams& params) {
  const std::size_t n = events.size();
  std::vector<StepIndex> next(n, kNever);
  std::map<FileIndex, StepIndex> upcoming;
  for (std::size_t i = n; i-- > 0;) {
    if (!events[i].is_request()) continue;
    auto f = events[i].file;
    if (catalog[f].size != 1) throw ModelError("furthest-in-future comparator needs unit-size files");
    if (auto it = upcoming.find(f); it != upcoming.end()) next[i] = it->second;
    upcoming[f] = i;
  }
  ProblemParams no_zap = params;
  no_zap.zap_cost.reset();
  std::map<FileIndex, StepIndex> next_use;
  CacheState state;
  CostLedger ledger;
  for (std::size_t i = 0; i < n; ++i) {
    PolicyDecision d;
    if (events[i].is_request()) {
      auto f = events[i].file;
      if (!state.resident(f) && state.used() + 1 > params.k) {
        FileIndex victim = *state.residents().begin();
        for (auto r : state.residents()) {
          if (next_use.at(r) > next_use.at(victim)) victim = r;
        }
        d.evictions.push_back(victim);
      }
      next_use[f] = next[i];
    }
    ledger += advance_step(state, events[i], catalog, no_zap, d);
  }
  return ledger;
}

}  // namespace cachelab
