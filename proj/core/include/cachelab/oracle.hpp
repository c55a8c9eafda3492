#pragma once

#include <map>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cachelab/model.hpp"

namespace cachelab {

struct OracleLimits {
  std::size_t max_files = 10;
  std::size_t max_steps = 30;
  std::int64_t max_k = 6;
};

/// 0/1 LP values induced by an offline schedule. For every request of f at
/// t with next request t' (or the trace end): if f is ever zapped, z_f = 1
/// and nothing else; else if f leaves the cache before t', x_t = 1; else
/// y_{t,s} = 1 for t <= s < t'.
struct LpAssignment {
  std::set<StepIndex> x;
  std::set<std::pair<StepIndex, StepIndex>> y;
  std::set<FileIndex> z;

  Rational x_value(StepIndex t) const { return x.contains(t) ? 1 : 0; }
  Rational y_value(StepIndex t, StepIndex s) const { return y.contains({t, s}) ? 1 : 0; }
  Rational z_value(FileIndex f) const { return z.contains(f) ? 1 : 0; }

  /// sum cost(f_t) x_t + [rent] sum rate(f) y_{t,s} + N sum z_f.
  Rational objective(const Trace& trace, const ProblemParams& params, bool include_rent) const;

  bool operator==(const LpAssignment&) const = default;
};

/// Derives the LP assignment of a schedule replayed on trace.
LpAssignment lp_assignment_of(const Trace& trace, const ProblemParams& params,
                              std::span<const PolicyDecision> schedule);

struct OracleSolution {
  Rational cost = 0;
  CostLedger ledger;
  /// Per step, actions applied before the event is served. Loading the
  /// requested file is implicit, as for online policies.
  std::vector<PolicyDecision> schedule;
  LpAssignment lp;
  Rational lp_objective = 0;  // rental terms only when lambda > 0
};

/// Exact offline optimum by dynamic programming over (resident, zapped)
/// states. Throws OracleLimitError above the limits, ModelError for files
/// larger than k when zapping is off.
///
/// Some optimal schedule only loads a file when it is requested and only
/// zaps a file on its own request, so the search is restricted to those
/// actions; brute_force_opt_full checks that restriction on tiny inputs.
OracleSolution opt(const Trace& trace, const ProblemParams& params, const OracleLimits& limits = {});

/// Replays a schedule with advance_step; used to check oracle output.
CostLedger replay(const Trace& trace, const ProblemParams& params, std::span<const PolicyDecision> schedule);

/// Plain recursive enumeration over the same action space as opt().
Rational brute_force_opt(const Trace& trace, const ProblemParams& params);

/// Enumeration over every evict/zap subset at every step, including zaps of
/// files that are not requested. Intended for <= 3 files and <= 5 steps.
Rational brute_force_opt_full(const Trace& trace, const ProblemParams& params);

struct SanityEntry {
  std::string name;
  Rational total;
  bool ok = true;
};

struct SanityReport {
  Rational opt;
  std::vector<SanityEntry> entries;
  bool ok() const;
};

/// Compares OPT with every given ledger; ok iff OPT <= each total.
SanityReport opt_lower_bound_sanity(const OracleSolution& solution,
                                    const std::vector<std::pair<std::string, CostLedger>>& ledgers);

/// Furthest-in-future eviction on a full cache, unit-size files, paying the
/// rent of whatever is resident. A feasible schedule, hence an upper bound
/// on OPT for long traces. Zapping is never used.
CostLedger belady_ledger(const Catalog& catalog, std::span<const Event> events, const ProblemParams& params);

}  // namespace cachelab
