#pragma once

#include <string>
#include <vector>

#include "cachelab/cilp.hpp"
#include "cachelab/oracle.hpp"

namespace cachelab {

enum class PotentialBound : std::uint8_t { Delta, Gamma };

/// Checks the charging invariant of a CILP run against an offline LP
/// assignment after every worked constraint:
///
///   Delta: ALG_lp / Delta_eff + phi <= OPT_lp
///   Gamma: min(1, gamma) * ALG_lp / (b + gamma) + phi <= OPT_lp
///
/// with b = 1 for rental variants and 2 for rental-zapping variants, and
/// phi = sum over all LP variables of coefficient * max(ref - value, 0)
/// (variables the run never registered count at value 0). The reference
/// must also satisfy every worked constraint.
class PotentialMonitor {
 public:
  /// Registers itself as the policy's observer; the policy must outlive
  /// the monitor's use.
  PotentialMonitor(CilpPolicy& policy, const Trace& trace, const ProblemParams& params, LpAssignment reference);

  PotentialBound bound() const noexcept { return bound_; }
  const Rational& opt_lp() const noexcept { return opt_lp_; }
  std::size_t checks() const noexcept { return checks_; }
  /// Smallest OPT_lp - lhs seen so far (>= 0 while the invariant holds).
  const Rational& min_slack() const noexcept { return min_slack_; }
  /// Violations are thrown as InvariantViolation; this keeps their text too.
  const std::vector<std::string>& violations() const noexcept { return violations_; }

  /// Throw on the first violation (default) or only record it.
  void set_throw_on_violation(bool enabled) { throw_ = enabled; }

 private:
  void check(const WorkRecord& record);
  Rational reference_value(const Symbol& symbol) const;
  void fail(std::string message);

  CilpPolicy& policy_;
  const Trace& trace_;
  ProblemParams params_;
  LpAssignment ref_;
  PotentialBound bound_;
  Rational base_ = 1;
  Rational opt_lp_;
  std::vector<Rational> ref_values_;
  Rational registered_ref_objective_ = 0;
  std::size_t checks_ = 0;
  Rational min_slack_;
  bool have_slack_ = false;
  bool throw_ = true;
  std::vector<std::string> violations_;
};

}  // namespace cachelab
