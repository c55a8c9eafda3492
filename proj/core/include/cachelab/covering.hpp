#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cachelab/errors.hpp"
#include "cachelab/rational.hpp"

namespace cachelab {

using VarId = std::uint32_t;

struct CoveringVariable {
  Rational coefficient;  // objective weight, >= 0 (0 means free to raise)
  Rational value = 0;
  bool frozen = false;
  /// Policy variables model one-shot actions (evict, zap) and stop rising
  /// once their floor crosses an integer.
  bool freeze_on_fire = true;
};

/// One additive part of a covering constraint. A group with a single member
/// is an ordinary term weight * floor(value). A capped group contributes
/// weight * min(1, sum of member floors); once it reaches the cap its members
/// stop rising for the rest of the call.
struct TermGroup {
  Rational weight;
  std::vector<VarId> vars;
  bool capped = false;
};

/// Satisfied iff sum over groups of the group contribution >= threshold,
/// evaluated on floors of exact values.
struct CoveringConstraint {
  std::vector<TermGroup> groups;
  Rational threshold = 1;

  CoveringConstraint& term(VarId var, Rational weight = 1);
  CoveringConstraint& capped_group(std::vector<VarId> vars, Rational weight = 1);
  std::size_t term_count() const;
};

struct RateOverride {
  VarId var;
  Rational rate;  // > 0
};

struct WorkReport {
  Rational objective_delta = 0;
  std::vector<VarId> fired;  // ascending
  Rational work = 0;         // the common raise parameter tau
  std::size_t raised = 0;    // variables that moved
  bool worked() const noexcept { return raised > 0 || !fired.empty(); }
};

/// Greedy online covering: whenever it receives an unsatisfied constraint it
/// raises every variable in it at a rate inversely proportional to its
/// objective coefficient until the constraint holds. The raise is piecewise
/// linear in tau, so tau is found exactly by walking integer-crossing
/// breakpoints.
class CoveringEngine {
 public:
  VarId add_variable(Rational coefficient, bool freeze_on_fire = true);

  const CoveringVariable& variable(VarId id) const { return vars_.at(id); }
  std::size_t size() const noexcept { return vars_.size(); }

  /// Stop raising a variable; its value is kept.
  void freeze(VarId id) { vars_.at(id).frozen = true; }

  bool satisfied(const CoveringConstraint& c) const;

  /// Feasibility of an arbitrary assignment (indexed by VarId) for c.
  static bool satisfied_by(const CoveringConstraint& c, std::span<const Rational> values);

  /// Raises the constraint's variables until it is satisfied. rate(i) is
  /// 1/coefficient(i) unless overridden. Variables with coefficient 0 and no
  /// override jump to their next integer at zero work. An already satisfied
  /// constraint yields an all-zero report.
  ///
  /// Throws UnsatisfiableConstraint when no variable can move.
  WorkReport process_constraint(const CoveringConstraint& c,
                                std::span<const RateOverride> rate_overrides = {});

  /// sum_i coefficient_i * max(reference_i - value_i, 0) over registered
  /// variables. Throws std::invalid_argument if reference is too short.
  Rational potential(std::span<const Rational> reference) const;

  /// Cumulative sum of coefficient * raise over the run.
  const Rational& objective() const noexcept { return objective_; }

 private:
  std::vector<CoveringVariable> vars_;
  Rational objective_ = 0;
};

}  // namespace cachelab
