#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cachelab/bounds.hpp"
#include "cachelab/cilp.hpp"
#include "cachelab/oracle.hpp"

namespace cachelab {

struct ExperimentSpec {
  Trace trace;
  std::vector<std::string> policies;
  ProblemParams params;
  std::size_t trials = 1;  // randomized policies only
  std::uint64_t seed = 0;
  bool use_oracle = true;
  /// Check the potential invariant of CILP policies against the oracle.
  bool monitor = true;
  bool keep_work_logs = false;
};

struct PolicyResult {
  std::string name;
  bool randomized = false;
  std::size_t trials = 1;
  /// Exact mean over trials (the single run for deterministic policies).
  CostLedger ledger;
  std::optional<Rational> ratio;
  std::optional<BoundQuery> bound_query;
  std::optional<Bound> bound;
  /// upper * OPT + slack - total, when an oracle-backed OPT and an upper
  /// bound are both available; pass iff it is >= 0.
  std::optional<Rational> margin;
  std::optional<bool> pass;
  std::size_t potential_checks = 0;
  std::optional<Rational> potential_min_slack;
  std::vector<std::string> work_log;  // JSON lines, first trial only
};

struct RatioReport {
  ProblemParams params;
  std::size_t steps = 0;
  std::optional<Rational> opt;
  std::string opt_source = "none";  // "oracle", "belady" (upper bound) or "none"
  std::optional<Rational> opt_lp;
  Rational slack = 0;  // cost of first loads
  std::vector<PolicyResult> results;
  std::vector<std::string> warnings;
};

/// Runs every policy on the trace, attaches OPT and the matching bound-table
/// row. CILP runs with an oracle-backed OPT are monitored; a broken
/// invariant surfaces as InvariantViolation.
RatioReport run_experiment(const ExperimentSpec& spec);

/// Sum of cost(f) over distinct requested files.
Rational first_load_cost(const Trace& trace);

/// The bound-table row that describes a policy on this instance, if any.
std::optional<BoundQuery> applicable_bound(const std::string& policy, const Catalog& catalog,
                                           const ProblemParams& params);

/// Canonical JSON with sorted keys; rationals as "p/q" strings.
std::string report_json(const RatioReport& report);
std::string report_csv(const RatioReport& report);

/// One JSON object per line.
std::string work_log_jsonl(const std::vector<WorkRecord>& log, const VariableSpace& vars, const Catalog& catalog);

std::string symbol_name(const Symbol& s, const Catalog& catalog);

}  // namespace cachelab
