#include "cachelab/cilp.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace cachelab {

std::string_view to_string(CilpVariant v) {
  switch (v) {
    case CilpVariant::Paging: return "paging-cilp";
    case CilpVariant::RentalPaging: return "rental-paging-cilp";
    case CilpVariant::RentalCaching: return "rental-caching-cilp";
    case CilpVariant::ZappingPaging: return "zapping-paging-cilp";
    case CilpVariant::ZappingCaching: return "zapping-caching-cilp";
    case CilpVariant::RentalZappingPaging: return "rental-zapping-paging-cilp";
    case CilpVariant::RentalZappingCaching: return "rental-zapping-caching-cilp";
  }
  return "paging-cilp";
}

bool is_rental(CilpVariant v) {
  return v == CilpVariant::RentalPaging || v == CilpVariant::RentalCaching ||
         v == CilpVariant::RentalZappingPaging || v == CilpVariant::RentalZappingCaching;
}

bool is_zapping(CilpVariant v) {
  return v == CilpVariant::ZappingPaging || v == CilpVariant::ZappingCaching ||
         v == CilpVariant::RentalZappingPaging || v == CilpVariant::RentalZappingCaching;
}

std::optional<Rational> recommended_gamma(std::int64_t k, const Rational& lambda) {
  Rational kk(k);
  if (lambda >= 1 / (kk * kk) && lambda < 1 / kk) return kk * lambda;
  return std::nullopt;
}

std::optional<VarId> VariableSpace::find_x(StepIndex t) const {
  if (auto it = x_.find(t); it != x_.end()) return it->second;
  return std::nullopt;
}

std::optional<VarId> VariableSpace::find_y(StepIndex t, StepIndex s) const {
  if (auto it = y_.find({t, s}); it != y_.end()) return it->second;
  return std::nullopt;
}

std::optional<VarId> VariableSpace::find_z(FileIndex f) const {
  if (auto it = z_.find(f); it != z_.end()) return it->second;
  return std::nullopt;
}

VarId VariableSpace::add(CoveringEngine& engine, Symbol symbol, const Rational& coefficient) {
  VarId id = engine.add_variable(coefficient);
  if (id != symbols_.size()) throw std::logic_error("variable space out of sync with engine");
  symbols_.push_back(symbol);
  return id;
}

VarId VariableSpace::x(CoveringEngine& engine, StepIndex t, FileIndex f, const Rational& cost) {
  if (auto id = find_x(t)) return *id;
  VarId id = add(engine, {Symbol::Kind::X, t, 0, f}, cost);
  x_.emplace(t, id);
  return id;
}

VarId VariableSpace::y(CoveringEngine& engine, StepIndex t, StepIndex s, FileIndex f, const Rational& rent) {
  if (auto id = find_y(t, s)) return *id;
  VarId id = add(engine, {Symbol::Kind::Y, t, s, f}, rent);
  y_.emplace(std::make_pair(t, s), id);
  return id;
}

VarId VariableSpace::z(CoveringEngine& engine, FileIndex f, const Rational& zap_cost) {
  if (auto id = find_z(f)) return *id;
  VarId id = add(engine, {Symbol::Kind::Z, 0, 0, f}, zap_cost);
  z_.emplace(f, id);
  return id;
}

std::string_view to_string(ConstraintKind kind) {
  return kind == ConstraintKind::RentEvict ? "rent-evict" : "cache-size";
}

CilpPolicy::CilpPolicy(const Catalog& catalog, const ProblemParams& params, CilpConfig config)
    : catalog_(catalog), params_(params), config_(std::move(config)) {
  params_.validate();
  if (config_.gamma) {
    if (!is_rental(config_.variant)) throw std::invalid_argument("gamma applies to rental variants only");
    if (*config_.gamma <= 0) throw std::invalid_argument("gamma must be positive");
  }
  if (is_zapping(config_.variant) && !params_.zapping()) {
    throw ModelError(std::string(to_string(config_.variant)) + " needs a zap cost");
  }
}

StepIndex CilpPolicy::latest(FileIndex f) const {
  auto it = latest_.find(f);
  if (it == latest_.end()) throw std::logic_error("resident file was never requested");
  return it->second;
}

std::vector<std::pair<FileIndex, CoveringConstraint>> CilpPolicy::rent_evict_constraints(
    StepIndex t, const Event& event, const CacheState& cache) {
  std::vector<std::pair<FileIndex, CoveringConstraint>> out;
  if (!is_rental(config_.variant) || params_.lambda == 0) return out;
  bool zapping = is_zapping(config_.variant);
  for (auto f : cache.residents()) {
    if (event.is_request() && event.file == f) continue;
    out.emplace_back(f, rent_evict(latest(f), t, f, zapping));
  }
  return out;
}

CoveringConstraint CilpPolicy::rent_evict(StepIndex r, StepIndex t, FileIndex f, bool zapping) {
  const auto& spec = catalog_[f];
  CoveringConstraint c;
  c.term(vars_.y(engine_, r, t, f, params_.rent_rate(spec)));
  c.term(vars_.x(engine_, r, f, spec.cost));
  if (zapping) c.term(vars_.z(engine_, f, *params_.zap_cost));
  return c;
}

std::optional<CoveringConstraint> CilpPolicy::served_constraint(StepIndex t, FileIndex g) {
  if (!is_rental(config_.variant) || params_.lambda == 0) return std::nullopt;
  return rent_evict(t, t, g, is_zapping(config_.variant));
}

std::optional<CoveringConstraint> CilpPolicy::cache_size_constraint(FileIndex g,
                                                                    const std::set<FileIndex>& resident,
                                                                    std::int64_t used) {
  const auto& spec = catalog_[g];
  if (used + spec.size <= params_.k) return std::nullopt;
  bool zapping = is_zapping(config_.variant);
  CoveringConstraint c;
  for (auto f : resident) {
    const auto& fs = catalog_[f];
    VarId x = vars_.x(engine_, latest(f), f, fs.cost);
    if (zapping) {
      c.capped_group({x, vars_.z(engine_, f, *params_.zap_cost)}, fs.size);
    } else {
      c.term(x, fs.size);
    }
  }
  if (zapping) c.term(vars_.z(engine_, g, *params_.zap_cost), spec.size);
  // Free exactly the overflow; equals size(g) once the cache is full.
  c.threshold = used + spec.size - params_.k;
  return c;
}

WorkReport CilpPolicy::work(StepIndex t, ConstraintKind kind, FileIndex f, CoveringConstraint c) {
  std::vector<RateOverride> overrides;
  if (config_.gamma && kind == ConstraintKind::RentEvict) {
    for (const auto& g : c.groups) {
      for (auto v : g.vars) {
        if (vars_.symbol(v).kind == Symbol::Kind::Y) {
          overrides.push_back({v, *config_.gamma / engine_.variable(v).coefficient});
        }
      }
    }
  }
  WorkReport report = engine_.process_constraint(c, overrides);
  if (report.worked()) {
    max_terms_ = std::max(max_terms_, c.term_count());
    if (kind == ConstraintKind::CacheSize) ++cache_size_work_;
    WorkRecord record{t, kind, f, std::move(c), report};
    if (observer_) observer_(record);
    if (keep_log_) log_.push_back(std::move(record));
  }
  return report;
}

PolicyDecision CilpPolicy::decide(StepIndex t, const Event& event, const CacheState& cache) {
  PolicyDecision d;
  std::set<FileIndex> resident = cache.residents();
  std::int64_t used = cache.used();

  auto drop = [&](FileIndex f) {
    resident.erase(f);
    used -= catalog_[f].size;
  };
  auto fired = [](const WorkReport& r, std::optional<VarId> v) {
    return v && std::binary_search(r.fired.begin(), r.fired.end(), *v);
  };

  for (auto f : pending_) {
    if (!resident.contains(f) || (event.is_request() && event.file == f)) continue;
    d.evictions.push_back(f);
    drop(f);
  }
  pending_.clear();

  for (auto& [f, c] : rent_evict_constraints(t, event, cache)) {
    if (!resident.contains(f)) continue;
    WorkReport r = work(t, ConstraintKind::RentEvict, f, std::move(c));
    if (fired(r, vars_.find_z(f))) {
      d.zaps.push_back(f);
      drop(f);
    } else if (fired(r, vars_.find_x(latest(f)))) {
      d.evictions.push_back(f);
      drop(f);
    }
  }

  if (event.is_request()) {
    FileIndex g = event.file;
    if (!cache.zapped(g) && !resident.contains(g)) {
      if (auto c = cache_size_constraint(g, resident, used)) {
        std::vector<FileIndex> members(resident.begin(), resident.end());
        WorkReport r = work(t, ConstraintKind::CacheSize, g, std::move(*c));
        for (auto f : members) {
          if (fired(r, vars_.find_z(f))) {
            d.zaps.push_back(f);
          } else if (fired(r, vars_.find_x(latest(f)))) {
            d.evictions.push_back(f);
          }
        }
        if (fired(r, vars_.find_z(g))) d.zaps.push_back(g);
      }
    }
    bool zapped_now = std::find(d.zaps.begin(), d.zaps.end(), g) != d.zaps.end();
    if (!cache.zapped(g) && !zapped_now) {
      latest_[g] = t;
      // The served file pays rent for this step too: y_{t,t} + x_t (+ z) >= 1.
      if (auto c = served_constraint(t, g)) {
        WorkReport r = work(t, ConstraintKind::RentEvict, g, std::move(*c));
        if (fired(r, vars_.find_z(g))) {
          d.zaps.push_back(g);
        } else if (fired(r, vars_.find_x(t))) {
          pending_.insert(g);
        }
      }
    }
  }
  return d;
}

}  // namespace cachelab
