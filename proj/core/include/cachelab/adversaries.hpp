#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cachelab/oracle.hpp"
#include "cachelab/policy.hpp"

namespace cachelab {

/// Builds the target against the adversary's catalog. Adversaries that mint
/// files mid-run append to that catalog, so the target must keep the
/// reference rather than copy it.
using PolicyFactory = std::function<std::unique_ptr<Policy>(const Catalog&, const ProblemParams&)>;

struct AdversaryReport {
  Trace trace;
  CostLedger target;         // over the whole trace
  Rational measured_cost;    // the part of target cost the ratio uses
  Rational opt;              // oracle value or certified upper bound
  std::string opt_source;    // "oracle", "belady", "zap-formula", ...
  std::optional<Rational> ratio;
  std::optional<Rational> bound;  // the lower bound the construction targets
  std::map<std::string, Rational> stats;
  std::vector<std::string> diagnostics;
};

/// Requests, each step, the smallest-index file of {p0..pk} that is absent
/// from the target's cache. OPT comes from the oracle when the trace is
/// within its limits, else from the furthest-in-future schedule (an upper
/// bound, so the ratio is a valid lower-bound certificate).
AdversaryReport rental_det_adversary(const PolicyFactory& target, std::int64_t k, const Rational& lambda,
                                     std::size_t steps, const OracleLimits& limits = {});

/// Oblivious random trace over k+1 unit files: the first request is
/// uniform, every later one uniform over the files other than the previous
/// request. Reports phase statistics (a phase is a maximal run with at most
/// k distinct files; the last, incomplete phase is not counted).
AdversaryReport rental_rand_adversary(std::int64_t k, const Rational& lambda, std::size_t steps,
                                      std::uint64_t seed);

/// Keeps k+1 live files, replaces each zapped one with a fresh file, and
/// requests the smallest-index live file absent from the target's cache.
/// Runs until `rounds` rounds complete or max_steps is reached.
///
/// Costs are measured over completed rounds. Per round, OPT is bounded by
/// the offline strategy that either never zaps or zaps one early file:
///   formula:   min(k + T - 1 + sum H_j / k, k + T + N - 1)
///   simulated: furthest-in-future cost of both options, computed exactly
/// "opt" is the formula certificate; stats hold the simulated one and the
/// per-round values.
AdversaryReport zapping_adversary(const PolicyFactory& target, std::int64_t k, const Rational& zap_cost,
                                  std::size_t rounds, std::size_t max_steps = 1'000'000);

}  // namespace cachelab
