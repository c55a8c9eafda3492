#include "cachelab/model.hpp"

#include <algorithm>
#include <stdexcept>

namespace cachelab {

FileIndex Catalog::add(FileSpec spec) {
  if (spec.size < 1) throw std::invalid_argument("file '" + spec.id + "' has size < 1");
  if (spec.cost < 0) throw std::invalid_argument("file '" + spec.id + "' has negative cost");
  if (by_id_.contains(spec.id)) throw std::invalid_argument("duplicate file id '" + spec.id + "'");
  auto index = static_cast<FileIndex>(files_.size());
  by_id_.emplace(spec.id, index);
  files_.push_back(std::move(spec));
  return index;
}

std::optional<FileIndex> Catalog::find(std::string_view id) const {
  if (auto it = by_id_.find(std::string(id)); it != by_id_.end()) return it->second;
  return std::nullopt;
}

StepIndex Trace::last_request() const {
  for (std::size_t i = events.size(); i-- > 0;) {
    if (events[i].is_request()) return i;
  }
  return kNever;
}

std::vector<StepIndex> Trace::next_request() const {
  std::vector<StepIndex> next(events.size(), kNever);
  std::unordered_map<FileIndex, StepIndex> upcoming;
  for (std::size_t i = events.size(); i-- > 0;) {
    if (!events[i].is_request()) continue;
    auto f = events[i].file;
    if (auto it = upcoming.find(f); it != upcoming.end()) next[i] = it->second;
    upcoming[f] = i;
  }
  return next;
}

std::vector<StepIndex> Trace::latest_requests(StepIndex t) const {
  std::vector<StepIndex> latest(catalog.size(), kNever);
  for (std::size_t i = 0; i < events.size() && i <= t; ++i) {
    if (events[i].is_request() && events[i].file < latest.size()) latest[events[i].file] = i;
  }
  return latest;
}

std::vector<FileIndex> Trace::requested_files() const {
  std::set<FileIndex> seen;
  for (const auto& e : events) {
    if (e.is_request()) seen.insert(e.file);
  }
  return {seen.begin(), seen.end()};
}

std::string_view to_string(CostModel model) {
  switch (model) {
    case CostModel::Paging: return "paging";
    case CostModel::WeightedPaging: return "weighted-paging";
    case CostModel::BitModel: return "bit";
    case CostModel::FaultModel: return "fault";
    case CostModel::General: return "general";
  }
  return "general";
}

CostModel parse_cost_model(std::string_view text) {
  for (auto m : {CostModel::Paging, CostModel::WeightedPaging, CostModel::BitModel,
                 CostModel::FaultModel, CostModel::General}) {
    if (to_string(m) == text) return m;
  }
  throw std::invalid_argument("unknown cost model '" + std::string(text) + "'");
}

Rational ProblemParams::rent_rate(const FileSpec& file) const {
  return rent_by_size ? Rational(lambda * file.size) : lambda;
}

void ProblemParams::validate() const {
  if (k < 1) throw std::invalid_argument("cache size k must be >= 1");
  if (lambda < 0) throw std::invalid_argument("rental rate must be >= 0");
  if (zap_cost && *zap_cost < 1) throw std::invalid_argument("zap cost must be >= 1");
}

void CacheState::admit(FileIndex f, std::int64_t size) {
  if (zapped_.contains(f)) throw DecisionError("cannot admit zapped file " + std::to_string(f));
  if (!resident_.insert(f).second) throw DecisionError("file " + std::to_string(f) + " already resident");
  used_ += size;
}

void CacheState::evict(FileIndex f, std::int64_t size) {
  if (resident_.erase(f) == 0) throw DecisionError("eviction of non-resident file " + std::to_string(f));
  used_ -= size;
}

void CacheState::zap(FileIndex f, std::int64_t size) {
  if (!zapped_.insert(f).second) throw DecisionError("file " + std::to_string(f) + " already zapped");
  if (resident_.erase(f) != 0) used_ -= size;
}

CostLedger& CostLedger::operator+=(const CostLedger& other) {
  retrieval += other.retrieval;
  rental += other.rental;
  zapping += other.zapping;
  return *this;
}

LedgerDelta advance_step(CacheState& state, const Event& event, const Catalog& catalog,
                         const ProblemParams& params, const PolicyDecision& decision,
                         Capacity capacity) {
  LedgerDelta delta;
  for (auto f : decision.evictions) state.evict(f, catalog[f].size);
  for (auto f : decision.zaps) {
    if (!params.zapping()) throw ModelError("zap requested but zapping is disabled");
    state.zap(f, catalog[f].size);
    delta.zapping += *params.zap_cost;
  }
  if (event.is_request()) {
    auto f = event.file;
    if (f >= catalog.size()) throw DecisionError("request for unknown file " + std::to_string(f));
    if (!state.zapped(f) && !state.resident(f)) {
      delta.retrieval += catalog[f].cost;
      state.admit(f, catalog[f].size);
    }
  }
  if (capacity == Capacity::Bounded && state.used() > params.k) {
    throw CapacityError("resident size " + std::to_string(state.used()) + " exceeds k=" +
                        std::to_string(params.k));
  }
  if (params.lambda != 0) {
    std::int64_t units = 0;
    for (auto f : state.residents()) units += params.rent_by_size ? catalog[f].size : 1;
    delta.rental = params.lambda * units;
  }
  return delta;
}

std::vector<TraceIssue> validate_trace(const Trace& trace, const ProblemParams& params) {
  std::vector<TraceIssue> issues;
  auto error = [&](std::string m) { issues.push_back({TraceIssue::Severity::Error, std::move(m)}); };
  auto warn = [&](std::string m) { issues.push_back({TraceIssue::Severity::Warning, std::move(m)}); };

  try {
    params.validate();
  } catch (const std::invalid_argument& e) {
    error(e.what());
  }

  for (const auto& file : trace.catalog) {
    switch (params.model) {
      case CostModel::Paging:
        if (file.size != 1) error("paging model requires size 1 for '" + file.id + "'");
        if (file.cost != 1) error("paging model requires cost 1 for '" + file.id + "'");
        break;
      case CostModel::WeightedPaging:
        if (file.size != 1) error("weighted paging requires size 1 for '" + file.id + "'");
        break;
      case CostModel::BitModel:
        if (file.cost != file.size) error("bit model requires cost = size for '" + file.id + "'");
        break;
      case CostModel::FaultModel:
        if (file.cost != 1) error("fault model requires cost 1 for '" + file.id + "'");
        break;
      case CostModel::General:
        break;
    }
    if (file.size > params.k) {
      warn("file '" + file.id + "' has size " + std::to_string(file.size) + " > k and is uncacheable");
    }
  }
  for (std::size_t i = 0; i < trace.events.size(); ++i) {
    const auto& e = trace.events[i];
    if (e.is_request() && e.file >= trace.catalog.size()) {
      error("step " + std::to_string(i) + " requests unknown file index " + std::to_string(e.file));
    }
  }
  return issues;
}

bool has_errors(const std::vector<TraceIssue>& issues) {
  return std::any_of(issues.begin(), issues.end(),
                     [](const TraceIssue& i) { return i.severity == TraceIssue::Severity::Error; });
}

}  // namespace cachelab
