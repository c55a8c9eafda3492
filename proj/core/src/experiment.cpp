#include "cachelab/experiment.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "cachelab/potential_monitor.hpp"
#include "cachelab/registry.hpp"
#include "cachelab/rng.hpp"
#include "json.hpp"

namespace cachelab {

namespace {

using nlohmann::json;

json rational_json(const Rational& r) { return format_rational(r); }

json ledger_json(const CostLedger& l) {
  return {{"retrieval", rational_json(l.retrieval)},
          {"rental", rational_json(l.rental)},
          {"zapping", rational_json(l.zapping)},
          {"total", rational_json(l.total())}};
}

bool all_unit_size(const Catalog& catalog) {
  return std::all_of(catalog.begin(), catalog.end(), [](const FileSpec& f) { return f.size == 1; });
}

bool all_unit_cost(const Catalog& catalog) {
  return std::all_of(catalog.begin(), catalog.end(), [](const FileSpec& f) { return f.cost == 1; });
}

CostLedger mean(const CostLedger& sum, std::size_t n) {
  auto d = static_cast<std::int64_t>(n);
  return {sum.retrieval / d, sum.rental / d, sum.zapping / d};
}

}  // namespace

Rational first_load_cost(const Trace& trace) {
  Rational c = 0;
  for (auto f : trace.requested_files()) c += trace.catalog[f].cost;
  return c;
}

std::optional<BoundQuery> applicable_bound(const std::string& policy, const Catalog& catalog,
                                           const ProblemParams& params) {
  PolicyInfo info = describe_policy(policy);
  BoundQuery q;
  q.k = params.k;
  q.lambda = params.lambda;
  q.zap_cost = params.zap_cost;
  q.setting = info.randomized ? Setting::Randomized : Setting::Deterministic;
  if (policy.rfind("alg-inf", 0) == 0) {
    q.problem = Problem::InfiniteRentalCaching;
    return q;
  }
  bool unit_size = all_unit_size(catalog);
  bool unit_cost = all_unit_cost(catalog);
  bool rental = params.lambda > 0;
  if (params.zapping()) {
    if (rental) {
      q.problem = unit_size ? (unit_cost ? Problem::RentalPagingZapping : Problem::WeightedRentalPagingZapping)
                            : (unit_cost ? Problem::RentalCachingZappingFault : Problem::RentalCachingZapping);
    } else {
      q.problem = unit_size ? (unit_cost ? Problem::PagingZapping : Problem::WeightedPagingZapping)
                            : Problem::CachingZapping;
    }
  } else {
    q.problem = unit_size ? (unit_cost ? Problem::RentalPaging : Problem::WeightedRentalPaging)
                          : (unit_cost ? Problem::RentalCachingFault : Problem::RentalCaching);
  }
  return q;
}

std::string symbol_name(const Symbol& s, const Catalog& catalog) {
  switch (s.kind) {
    case Symbol::Kind::X: return "x_" + std::to_string(s.t);
    case Symbol::Kind::Y: return "y_" + std::to_string(s.t) + "_" + std::to_string(s.s);
    case Symbol::Kind::Z: return "z_" + catalog[s.file].id;
  }
  return "?";
}

std::string work_log_jsonl(const std::vector<WorkRecord>& log, const VariableSpace& vars, const Catalog& catalog) {
  std::string out;
  for (const auto& r : log) {
    json fired = json::array();
    for (auto v : r.report.fired) fired.push_back(symbol_name(vars.symbol(v), catalog));
    json line = {{"step", r.step},
                 {"kind", std::string(to_string(r.kind))},
                 {"file", catalog[r.file].id},
                 {"terms", r.constraint.term_count()},
                 {"tau", rational_json(r.report.work)},
                 {"objective_delta", rational_json(r.report.objective_delta)},
                 {"fired", fired}};
    out += line.dump() + "\n";
  }
  return out;
}

RatioReport run_experiment(const ExperimentSpec& spec) {
  RatioReport report;
  report.params = spec.params;
  report.steps = spec.trace.steps();
  report.slack = first_load_cost(spec.trace);
  spec.params.validate();

  auto issues = validate_trace(spec.trace, spec.params);
  for (const auto& i : issues) {
    report.warnings.push_back(std::string(i.severity == TraceIssue::Severity::Error ? "error: " : "warning: ") +
                              i.message);
  }
  if (has_errors(issues)) throw ModelError("trace does not fit the problem parameters");

  std::optional<OracleSolution> oracle;
  // The reference for non-zapping CILP variants must not zap.
  std::optional<OracleSolution> oracle_no_zap;
  if (spec.use_oracle) {
    try {
      oracle = opt(spec.trace, spec.params);
      report.opt = oracle->cost;
      report.opt_lp = oracle->lp_objective;
      report.opt_source = "oracle";
    } catch (const OracleLimitError&) {
      if (all_unit_size(spec.trace.catalog)) {
        report.opt = belady_ledger(spec.trace.catalog, spec.trace.events, spec.params).total();
        report.opt_source = "belady";
        report.warnings.push_back("instance beyond oracle limits; OPT is a furthest-in-future upper bound");
      } else {
        report.warnings.push_back("instance beyond oracle limits; no OPT available");
      }
    }
  }

  for (const auto& name : spec.policies) {
    PolicyInfo info = describe_policy(name);
    PolicyResult res;
    res.name = name;
    res.randomized = info.randomized;
    res.trials = info.randomized ? std::max<std::size_t>(spec.trials, 1) : 1;
    if (!info.randomized && spec.trials > 1) {
      report.warnings.push_back(name + " is deterministic; trials > 1 ignored");
    }

    CostLedger sum;
    Rng trial_seeds(spec.seed);
    for (std::size_t trial = 0; trial < res.trials; ++trial) {
      std::uint64_t seed = trial_seeds.split(trial).key();
      auto policy = make_policy(name, spec.trace.catalog, spec.params, seed);
      std::optional<PotentialMonitor> monitor;
      auto* cilp = dynamic_cast<CilpPolicy*>(policy.get());
      if (cilp && spec.monitor && oracle) {
        bool variant_zaps = is_zapping(cilp->config().variant);
        if (variant_zaps == spec.params.zapping()) {
          monitor.emplace(*cilp, spec.trace, spec.params, oracle->lp);
        } else if (!variant_zaps) {
          if (!oracle_no_zap) {
            ProblemParams p = spec.params;
            p.zap_cost.reset();
            oracle_no_zap = opt(spec.trace, p);
          }
          monitor.emplace(*cilp, spec.trace, spec.params, oracle_no_zap->lp);
        }
      }
      if (cilp && trial > 0) cilp->set_keep_work_log(false);
      RunResult run_result = run(spec.trace, spec.params, *policy);
      sum += run_result.ledger;
      if (monitor) {
        res.potential_checks += monitor->checks();
        if (monitor->checks() > 0 &&
            (!res.potential_min_slack || monitor->min_slack() < *res.potential_min_slack)) {
          res.potential_min_slack = monitor->min_slack();
        }
      }
      if (cilp && trial == 0 && spec.keep_work_logs) {
        std::istringstream lines(work_log_jsonl(cilp->work_log(), cilp->variables(), spec.trace.catalog));
        for (std::string l; std::getline(lines, l);) res.work_log.push_back(l);
      }
    }
    res.ledger = mean(sum, res.trials);

    res.bound_query = applicable_bound(name, spec.trace.catalog, spec.params);
    if (res.bound_query) res.bound = bounds(*res.bound_query);
    if (report.opt && *report.opt > 0) res.ratio = res.ledger.total() / *report.opt;
    if (report.opt_source == "oracle" && res.bound && res.bound->upper) {
      res.margin = *res.bound->upper * *report.opt + report.slack - res.ledger.total();
      res.pass = *res.margin >= 0;
    }
    report.results.push_back(std::move(res));
  }
  std::sort(report.results.begin(), report.results.end(),
            [](const PolicyResult& a, const PolicyResult& b) { return a.name < b.name; });
  return report;
}

std::string report_json(const RatioReport& report) {
  json j;
  j["params"] = {{"k", report.params.k},
                 {"lambda", rational_json(report.params.lambda)},
                 {"zap_cost", report.params.zap_cost ? rational_json(*report.params.zap_cost) : json(nullptr)},
                 {"model", std::string(to_string(report.params.model))},
                 {"rent_by_size", report.params.rent_by_size}};
  j["steps"] = report.steps;
  j["opt"] = report.opt ? rational_json(*report.opt) : json(nullptr);
  j["opt_source"] = report.opt_source;
  j["opt_lp"] = report.opt_lp ? rational_json(*report.opt_lp) : json(nullptr);
  j["additive_slack"] = rational_json(report.slack);
  j["warnings"] = report.warnings;
  json results = json::object();
  for (const auto& r : report.results) {
    json p;
    p["randomized"] = r.randomized;
    p["trials"] = r.trials;
    p["ledger"] = ledger_json(r.ledger);
    p["ratio"] = r.ratio ? rational_json(*r.ratio) : json(nullptr);
    p["ratio_approx"] = r.ratio ? json(to_double(*r.ratio)) : json(nullptr);
    if (r.bound_query && r.bound) {
      json b;
      b["problem"] = std::string(to_string(r.bound_query->problem));
      b["setting"] = std::string(to_string(r.bound_query->setting));
      b["lower"] = r.bound->lower ? rational_json(*r.bound->lower) : json(nullptr);
      b["upper"] = r.bound->upper ? rational_json(*r.bound->upper) : json(nullptr);
      b["lower_formula"] = r.bound->lower_formula;
      b["upper_formula"] = r.bound->upper_formula;
      b["notes"] = r.bound->notes;
      p["bound"] = b;
    } else {
      p["bound"] = nullptr;
    }
    p["margin"] = r.margin ? rational_json(*r.margin) : json(nullptr);
    p["pass"] = r.pass ? json(*r.pass) : json(nullptr);
    p["potential_checks"] = r.potential_checks;
    p["potential_min_slack"] = r.potential_min_slack ? rational_json(*r.potential_min_slack) : json(nullptr);
    if (!r.work_log.empty()) {
      json log = json::array();
      for (const auto& l : r.work_log) log.push_back(json::parse(l));
      p["work_log"] = log;
    }
    results[r.name] = p;
  }
  j["results"] = results;
  return j.dump(2) + "\n";
}

std::string report_csv(const RatioReport& report) {
  std::ostringstream out;
  out << "policy,randomized,trials,retrieval,rental,zapping,total,opt,opt_source,ratio,bound_upper,pass\n";
  for (const auto& r : report.results) {
    out << r.name << ',' << (r.randomized ? "true" : "false") << ',' << r.trials << ','
        << format_rational(r.ledger.retrieval) << ',' << format_rational(r.ledger.rental) << ','
        << format_rational(r.ledger.zapping) << ',' << format_rational(r.ledger.total()) << ','
        << (report.opt ? format_rational(*report.opt) : "") << ',' << report.opt_source << ','
        << (r.ratio ? format_rational(*r.ratio) : "") << ','
        << (r.bound && r.bound->upper ? format_rational(*r.bound->upper) : "") << ','
        << (r.pass ? (*r.pass ? "true" : "false") : "") << '\n';
  }
  return out.str();
}

}  // namespace cachelab
