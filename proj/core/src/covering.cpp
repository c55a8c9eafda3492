#include "cachelab/covering.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace cachelab {

CoveringConstraint& CoveringConstraint::term(VarId var, Rational weight) {
  groups.push_back({std::move(weight), {var}, false});
  return *this;
}

CoveringConstraint& CoveringConstraint::capped_group(std::vector<VarId> vars, Rational weight) {
  groups.push_back({std::move(weight), std::move(vars), true});
  return *this;
}

std::size_t CoveringConstraint::term_count() const {
  std::size_t n = 0;
  for (const auto& g : groups) n += g.vars.size();
  return n;
}

VarId CoveringEngine::add_variable(Rational coefficient, bool freeze_on_fire) {
  if (coefficient < 0) throw std::invalid_argument("covering coefficient must be >= 0");
  vars_.push_back({std::move(coefficient), 0, false, freeze_on_fire});
  return static_cast<VarId>(vars_.size() - 1);
}

namespace {

template <typename ValueOf>
bool evaluate(const CoveringConstraint& c, ValueOf&& value_of) {
  Rational total = 0;
  for (const auto& g : c.groups) {
    Integer floors = 0;
    for (auto v : g.vars) floors += floor_integer(value_of(v));
    if (g.capped && floors > 1) floors = 1;
    total += g.weight * floors;
  }
  return total >= c.threshold;
}

}  // namespace

bool CoveringEngine::satisfied(const CoveringConstraint& c) const {
  return evaluate(c, [this](VarId v) -> const Rational& { return vars_.at(v).value; });
}

bool CoveringEngine::satisfied_by(const CoveringConstraint& c, std::span<const Rational> values) {
  return evaluate(c, [&](VarId v) -> const Rational& {
    if (v >= values.size()) throw std::invalid_argument("assignment does not cover variable");
    return values[v];
  });
}

WorkReport CoveringEngine::process_constraint(const CoveringConstraint& c,
                                              std::span<const RateOverride> rate_overrides) {
  struct Member {
    VarId id;
    std::size_t group;
    Rational rate;
    bool instant;
    Rational increase;
  };

  WorkReport report;
  for (const auto& g : c.groups) {
    if (g.weight <= 0) throw std::invalid_argument("covering weight must be positive");
  }
  if (satisfied(c)) return report;

  std::unordered_map<VarId, const Rational*> overrides;
  for (const auto& o : rate_overrides) {
    if (o.rate <= 0) throw std::invalid_argument("rate override must be positive");
    overrides[o.var] = &o.rate;
  }

  std::vector<Member> members;
  std::vector<bool> saturated(c.groups.size(), false);
  std::vector<VarId> seen;
  for (std::size_t gi = 0; gi < c.groups.size(); ++gi) {
    const auto& g = c.groups[gi];
    Integer floors = 0;
    for (auto id : g.vars) {
      const auto& var = vars_.at(id);
      if (std::find(seen.begin(), seen.end(), id) != seen.end()) {
        throw std::invalid_argument("variable appears twice in one constraint");
      }
      seen.push_back(id);
      floors += floor_integer(var.value);
      if (auto it = overrides.find(id); it != overrides.end()) {
        members.push_back({id, gi, *it->second, false, 0});
      } else if (var.coefficient == 0) {
        members.push_back({id, gi, 0, true, 0});
      } else {
        members.push_back({id, gi, Rational(1) / var.coefficient, false, 0});
      }
    }
    if (g.capped && floors >= 1) saturated[gi] = true;
  }

  auto active = [&](const Member& m) { return !saturated[m.group] && !vars_[m.id].frozen; };

  Rational tau = 0;
  while (!satisfied(c)) {
    bool any_active = false;
    bool any_instant = false;
    Rational step;
    bool have_step = false;
    for (const auto& m : members) {
      if (!active(m)) continue;
      any_active = true;
      if (m.instant) {
        any_instant = true;
        continue;
      }
      const auto& v = vars_[m.id].value;
      Rational to_next = (floor(v) + 1 - v) / m.rate;
      if (!have_step || to_next < step) {
        step = to_next;
        have_step = true;
      }
    }
    if (!any_active) {
      throw UnsatisfiableConstraint("covering constraint cannot be satisfied: all variables frozen");
    }
    if (any_instant) step = 0;

    std::vector<std::size_t> crossed;
    for (std::size_t i = 0; i < members.size(); ++i) {
      auto& m = members[i];
      if (!active(m)) continue;
      if (any_instant && !m.instant) continue;
      auto& var = vars_[m.id];
      Integer before = floor_integer(var.value);
      Rational inc = m.instant ? Rational(floor(var.value) + 1 - var.value) : Rational(step * m.rate);
      if (inc == 0) continue;
      var.value += inc;
      m.increase += inc;
      Rational cost = var.coefficient * inc;
      objective_ += cost;
      report.objective_delta += cost;
      if (floor_integer(var.value) > before) crossed.push_back(i);
    }
    // Freeze and saturate only after every member moved by the same tau.
    for (auto i : crossed) {
      auto& m = members[i];
      auto& var = vars_[m.id];
      report.fired.push_back(m.id);
      if (var.freeze_on_fire) var.frozen = true;
      if (c.groups[m.group].capped) saturated[m.group] = true;
    }
    tau += step;
  }

  std::sort(report.fired.begin(), report.fired.end());
  report.fired.erase(std::unique(report.fired.begin(), report.fired.end()), report.fired.end());
  report.work = tau;
  report.raised = static_cast<std::size_t>(
      std::count_if(members.begin(), members.end(), [](const Member& m) { return m.increase > 0; }));
  return report;
}

Rational CoveringEngine::potential(std::span<const Rational> reference) const {
  if (reference.size() < vars_.size()) {
    throw std::invalid_argument("reference assignment is missing values for registered variables");
  }
  Rational phi = 0;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (reference[i] > vars_[i].value) phi += vars_[i].coefficient * (reference[i] - vars_[i].value);
  }
  return phi;
}

}  // namespace cachelab
