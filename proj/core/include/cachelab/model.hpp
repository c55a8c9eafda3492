#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "cachelab/errors.hpp"
#include "cachelab/rational.hpp"

namespace cachelab {

using FileIndex = std::uint32_t;
using StepIndex = std::size_t;

inline constexpr StepIndex kNever = std::numeric_limits<StepIndex>::max();

struct FileSpec {
  std::string id;
  std::int64_t size = 1;
  Rational cost = 1;

  bool operator==(const FileSpec&) const = default;
};

/// Append-only file table. Indices are dense and stable, so a catalog may
/// grow while policies hold a reference to it (adaptive adversaries mint
/// fresh files mid-run).
class Catalog {
 public:
  /// Throws std::invalid_argument on duplicate ids, size < 1 or cost < 0.
  FileIndex add(FileSpec spec);

  std::optional<FileIndex> find(std::string_view id) const;
  const FileSpec& operator[](FileIndex f) const { return files_[f]; }
  std::size_t size() const noexcept { return files_.size(); }
  bool empty() const noexcept { return files_.empty(); }

  auto begin() const { return files_.begin(); }
  auto end() const { return files_.end(); }

  bool operator==(const Catalog& other) const { return files_ == other.files_; }

 private:
  std::vector<FileSpec> files_;
  std::unordered_map<std::string, FileIndex> by_id_;
};

struct Event {
  enum class Kind : std::uint8_t { Request, Tick };

  Kind kind = Kind::Tick;
  FileIndex file = 0;

  static Event request(FileIndex f) { return {Kind::Request, f}; }
  static Event tick() { return {Kind::Tick, 0}; }
  bool is_request() const noexcept { return kind == Kind::Request; }

  bool operator==(const Event&) const = default;
};

struct Trace {
  Catalog catalog;
  std::vector<Event> events;

  std::size_t steps() const noexcept { return events.size(); }

  /// Index of the last request event, kNever when the trace has none.
  StepIndex last_request() const;

  /// For each step t holding a request, the step of the next request to the
  /// same file; kNever when there is none and for tick steps.
  std::vector<StepIndex> next_request() const;

  /// Per file, the most recent request time at or before t (kNever if the
  /// file has not been requested yet).
  std::vector<StepIndex> latest_requests(StepIndex t) const;

  /// Distinct requested files, ascending.
  std::vector<FileIndex> requested_files() const;

  bool operator==(const Trace&) const = default;
};

enum class CostModel : std::uint8_t { Paging, WeightedPaging, BitModel, FaultModel, General };

std::string_view to_string(CostModel model);
CostModel parse_cost_model(std::string_view text);

struct ProblemParams {
  std::int64_t k = 1;
  Rational lambda = 0;
  std::optional<Rational> zap_cost;  // absent: zapping disabled
  CostModel model = CostModel::General;
  /// Off by default: rent is lambda per resident file per step. When set,
  /// a file pays lambda * size per step.
  bool rent_by_size = false;

  bool zapping() const noexcept { return zap_cost.has_value(); }
  Rational rent_rate(const FileSpec& file) const;

  /// Throws std::invalid_argument for k < 1, lambda < 0 or zap cost < 1.
  void validate() const;
};

class CacheState {
 public:
  bool resident(FileIndex f) const { return resident_.contains(f); }
  bool zapped(FileIndex f) const { return zapped_.contains(f); }
  const std::set<FileIndex>& residents() const noexcept { return resident_; }
  const std::set<FileIndex>& zapped_files() const noexcept { return zapped_; }
  std::int64_t used() const noexcept { return used_; }

  void admit(FileIndex f, std::int64_t size);
  void evict(FileIndex f, std::int64_t size);
  /// Moves f to the zap set; drops it from the resident set if present.
  void zap(FileIndex f, std::int64_t size);

  bool operator==(const CacheState&) const = default;

 private:
  std::set<FileIndex> resident_;
  std::set<FileIndex> zapped_;
  std::int64_t used_ = 0;
};

struct CostLedger {
  Rational retrieval = 0;
  Rational rental = 0;
  Rational zapping = 0;

  Rational total() const { return retrieval + rental + zapping; }
  CostLedger& operator+=(const CostLedger& other);
  bool operator==(const CostLedger&) const = default;
};

using LedgerDelta = CostLedger;

/// Actions taken before the step's event is served. Loading the requested
/// file is implicit: after the decision it must end the step resident or
/// zapped.
struct PolicyDecision {
  std::vector<FileIndex> evictions;
  std::vector<FileIndex> zaps;

  bool empty() const noexcept { return evictions.empty() && zaps.empty(); }
  bool operator==(const PolicyDecision&) const = default;
};

enum class Capacity : std::uint8_t { Bounded, Unbounded };

/// Applies decision then serves event, mutating state in place.
///
/// Charges cost(f) when the requested file is neither resident nor zapped,
/// N per newly zapped file, and the rent rate of every file resident once
/// the event has been served (so the arrival step pays rent and the step on
/// which an eviction is decided does not).
///
/// Throws DecisionError for evicting a non-resident file or re-zapping,
/// ModelError for zapping with zapping disabled and CapacityError when the
/// resident size exceeds k afterwards (Capacity::Bounded only).
LedgerDelta advance_step(CacheState& state, const Event& event, const Catalog& catalog,
                         const ProblemParams& params, const PolicyDecision& decision,
                         Capacity capacity = Capacity::Bounded);

struct TraceIssue {
  enum class Severity : std::uint8_t { Error, Warning };
  Severity severity;
  std::string message;
};

/// Empty result means the trace is usable under params.
std::vector<TraceIssue> validate_trace(const Trace& trace, const ProblemParams& params);

bool has_errors(const std::vector<TraceIssue>& issues);

}  // namespace cachelab
