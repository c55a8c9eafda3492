#include "cachelab/potential_monitor.hpp"

namespace cachelab {

PotentialMonitor::PotentialMonitor(CilpPolicy& policy, const Trace& trace, const ProblemParams& params,
                                   LpAssignment reference)
    : policy_(policy), trace_(trace), params_(params), ref_(std::move(reference)) {
  const auto& cfg = policy_.config();
  bound_ = cfg.gamma ? PotentialBound::Gamma : PotentialBound::Delta;
  base_ = is_zapping(cfg.variant) ? 2 : 1;
  opt_lp_ = ref_.objective(trace_, params_, is_rental(cfg.variant) && params_.lambda > 0);
  policy_.set_observer([this](const WorkRecord& r) { check(r); });
}

Rational PotentialMonitor::reference_value(const Symbol& symbol) const {
  switch (symbol.kind) {
    case Symbol::Kind::X: return ref_.x_value(symbol.t);
    case Symbol::Kind::Y: return ref_.y_value(symbol.t, symbol.s);
    case Symbol::Kind::Z: return ref_.z_value(symbol.file);
  }
  return 0;
}

void PotentialMonitor::fail(std::string message) {
  violations_.push_back(message);
  if (throw_) throw InvariantViolation(message);
}

void PotentialMonitor::check(const WorkRecord& record) {
  const auto& engine = policy_.engine();
  const auto& vars = policy_.variables();
  while (ref_values_.size() < vars.size()) {
    auto id = static_cast<VarId>(ref_values_.size());
    Rational v = reference_value(vars.symbol(id));
    registered_ref_objective_ += engine.variable(id).coefficient * v;
    ref_values_.push_back(std::move(v));
  }
  ++checks_;
  std::string where = "step " + std::to_string(record.step) + " (" + std::string(to_string(record.kind)) + ")";
  if (!CoveringEngine::satisfied_by(record.constraint, ref_values_)) {
    fail("reference assignment violates the constraint worked at " + where);
  }
  Rational phi = engine.potential(ref_values_) + (opt_lp_ - registered_ref_objective_);
  Rational lhs;
  if (bound_ == PotentialBound::Delta) {
    lhs = engine.objective() / static_cast<std::int64_t>(policy_.max_terms_worked()) + phi;
  } else {
    const Rational& gamma = *policy_.config().gamma;
    // ALG grows at rate base+gamma per unit of work, phi drops at rate
    // >= min(1, gamma); phi starts at OPT, so scale ALG rather than phi.
    Rational m = gamma < 1 ? gamma : Rational(1);
    lhs = m * engine.objective() / (base_ + gamma) + phi;
  }
  Rational slack = opt_lp_ - lhs;
  if (!have_slack_ || slack < min_slack_) {
    min_slack_ = slack;
    have_slack_ = true;
  }
  if (slack < 0) {
    fail("potential invariant broken at " + where + ": lhs " + format_rational(lhs) + " > OPT_lp " +
         format_rational(opt_lp_));
  }
}

}  // namespace cachelab
