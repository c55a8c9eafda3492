#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cachelab/covering.hpp"
#include "cachelab/policy.hpp"

namespace cachelab {

enum class CilpVariant : std::uint8_t {
  Paging,
  RentalPaging,
  RentalCaching,
  ZappingPaging,
  ZappingCaching,
  RentalZappingPaging,
  RentalZappingCaching,
};

std::string_view to_string(CilpVariant v);
bool is_rental(CilpVariant v);
bool is_zapping(CilpVariant v);

struct CilpConfig {
  CilpVariant variant = CilpVariant::Paging;
  /// Rate of every y variable becomes gamma / (its coefficient).
  std::optional<Rational> gamma;
};

/// k*lambda inside the band 1/k^2 <= lambda < 1/k, absent elsewhere.
std::optional<Rational> recommended_gamma(std::int64_t k, const Rational& lambda);

/// LP symbol housed by a covering variable.
struct Symbol {
  enum class Kind : std::uint8_t { X, Y, Z };
  Kind kind = Kind::X;
  StepIndex t = 0;  // request time (X, Y)
  StepIndex s = 0;  // rented step (Y)
  FileIndex file = 0;

  bool operator==(const Symbol&) const = default;
};

/// Lazily registered x_t, y_{t,s} and z_f variables of one run.
class VariableSpace {
 public:
  std::optional<VarId> find_x(StepIndex t) const;
  std::optional<VarId> find_y(StepIndex t, StepIndex s) const;
  std::optional<VarId> find_z(FileIndex f) const;

  const Symbol& symbol(VarId id) const { return symbols_.at(id); }
  std::size_t size() const noexcept { return symbols_.size(); }

  VarId x(CoveringEngine& engine, StepIndex t, FileIndex f, const Rational& cost);
  VarId y(CoveringEngine& engine, StepIndex t, StepIndex s, FileIndex f, const Rational& rent);
  VarId z(CoveringEngine& engine, FileIndex f, const Rational& zap_cost);

 private:
  VarId add(CoveringEngine& engine, Symbol symbol, const Rational& coefficient);

  std::vector<Symbol> symbols_;
  std::unordered_map<StepIndex, VarId> x_;
  std::map<std::pair<StepIndex, StepIndex>, VarId> y_;
  std::unordered_map<FileIndex, VarId> z_;
};

enum class ConstraintKind : std::uint8_t { RentEvict, CacheSize };

std::string_view to_string(ConstraintKind kind);

struct WorkRecord {
  StepIndex step = 0;
  ConstraintKind kind = ConstraintKind::RentEvict;
  FileIndex file = 0;  // resident file (rent-evict) or requested file (cache-size)
  CoveringConstraint constraint;
  WorkReport report;
};

/// Online covering policies for the rental and zapping LPs.
///
/// Per step, in order: one rent-evict(-zap) constraint for every resident
/// file except the one hit by this step's request, ascending by file index;
/// then, on a miss that would overflow the cache, one cache-size constraint
/// over the resident set. A fired z zaps its file, otherwise a fired x
/// evicts it.
class CilpPolicy : public Policy {
 public:
  using Observer = std::function<void(const WorkRecord&)>;

  /// Throws std::invalid_argument when gamma is set for a non-rental variant
  /// or is not positive, and ModelError when a zapping variant runs with
  /// zapping disabled.
  CilpPolicy(const Catalog& catalog, const ProblemParams& params, CilpConfig config);

  PolicyDecision decide(StepIndex t, const Event& event, const CacheState& cache) override;

  /// The rent-evict constraints of step t for the given cache, registering
  /// any variables they need. Does not run the engine.
  std::vector<std::pair<FileIndex, CoveringConstraint>> rent_evict_constraints(StepIndex t,
                                                                               const Event& event,
                                                                               const CacheState& cache);

  /// Rent-evict constraint for the file served at step t, covering its rent
  /// on that same step; nothing for non-rental variants or lambda = 0.
  std::optional<CoveringConstraint> served_constraint(StepIndex t, FileIndex g);

  /// Cache-size constraint for admitting g on top of the given resident set,
  /// or nothing if g fits.
  std::optional<CoveringConstraint> cache_size_constraint(FileIndex g,
                                                          const std::set<FileIndex>& resident,
                                                          std::int64_t used);

  const CilpConfig& config() const noexcept { return config_; }
  const CoveringEngine& engine() const noexcept { return engine_; }
  const VariableSpace& variables() const noexcept { return vars_; }

  /// Records are kept unless disabled; long adversarial runs turn it off.
  void set_keep_work_log(bool keep) { keep_log_ = keep; }
  const std::vector<WorkRecord>& work_log() const noexcept { return log_; }
  void set_observer(Observer observer) { observer_ = std::move(observer); }

  /// Largest term count over constraints that were actually worked on.
  std::size_t max_terms_worked() const noexcept { return max_terms_; }
  std::size_t cache_size_work() const noexcept { return cache_size_work_; }

 private:
  WorkReport work(StepIndex t, ConstraintKind kind, FileIndex f, CoveringConstraint c);
  StepIndex latest(FileIndex f) const;
  CoveringConstraint rent_evict(StepIndex r, StepIndex t, FileIndex f, bool zapping);

  const Catalog& catalog_;
  ProblemParams params_;
  CilpConfig config_;
  CoveringEngine engine_;
  VariableSpace vars_;
  std::unordered_map<FileIndex, StepIndex> latest_;
  // x fired on the step its file was served; evicted on the next step.
  std::set<FileIndex> pending_;
  std::vector<WorkRecord> log_;
  bool keep_log_ = true;
  Observer observer_;
  std::size_t max_terms_ = 0;
  std::size_t cache_size_work_ = 0;
};

}  // namespace cachelab
