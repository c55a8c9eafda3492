#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cachelab/adversaries.hpp"
#include "cachelab/bounds.hpp"
#include "cachelab/experiment.hpp"
#include "cachelab/generator.hpp"
#include "cachelab/oracle.hpp"
#include "cachelab/registry.hpp"
#include "cachelab/trace_io.hpp"
#include "json.hpp"

namespace {

using nlohmann::json;
using namespace cachelab;

constexpr int kUsage = 1;
constexpr int kViolation = 2;

struct ParamArgs {
  std::int64_t k = 1;
  std::string lambda = "0";
  std::string zap_cost;
  std::string model = "general";
  bool rent_by_size = false;

  void add_to(CLI::App& cmd, bool with_model = true) {
    cmd.add_option("--k", k, "cache size")->required();
    cmd.add_option("--lambda", lambda, "rent per file per step, p/q or decimal");
    cmd.add_option("--zap-cost", zap_cost, "zap cost N (enables zapping)");
    if (with_model) {
      cmd.add_option("--model", model, "paging|weighted-paging|bit|fault|general");
      cmd.add_flag("--rent-by-size", rent_by_size, "charge lambda*size per step");
    }
  }

  ProblemParams build() const {
    ProblemParams p;
    p.k = k;
    p.lambda = parse_rational(lambda);
    if (!zap_cost.empty()) p.zap_cost = parse_rational(zap_cost);
    p.model = parse_cost_model(model);
    p.rent_by_size = rent_by_size;
    p.validate();
    return p;
  }
};

std::uint64_t default_seed() {
  if (const char* env = std::getenv("CACHELAB_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw std::invalid_argument("CACHELAB_SEED must be an unsigned integer");
    }
  }
  return 0;
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

std::string rat(const Rational& r) { return format_rational(r); }

json ledger_json(const CostLedger& l) {
  return {{"retrieval", rat(l.retrieval)}, {"rental", rat(l.rental)}, {"zapping", rat(l.zapping)},
          {"total", rat(l.total())}};
}

int cmd_opt(const std::string& trace_path, const ParamArgs& args) {
  Trace trace = load_trace(trace_path);
  ProblemParams params = args.build();
  OracleSolution sol = opt(trace, params);
  json schedule = json::array();
  for (std::size_t i = 0; i < sol.schedule.size(); ++i) {
    const auto& d = sol.schedule[i];
    if (d.empty()) continue;
    json ev = json::array();
    json zp = json::array();
    for (auto f : d.evictions) ev.push_back(trace.catalog[f].id);
    for (auto f : d.zaps) zp.push_back(trace.catalog[f].id);
    schedule.push_back({{"step", i}, {"evictions", ev}, {"zaps", zp}});
  }
  json x = json::array();
  json y = json::array();
  json z = json::array();
  for (auto t : sol.lp.x) x.push_back(t);
  for (const auto& [t, s] : sol.lp.y) y.push_back({t, s});
  for (auto f : sol.lp.z) z.push_back(trace.catalog[f].id);
  json out = {{"cost", rat(sol.cost)},
              {"ledger", ledger_json(sol.ledger)},
              {"schedule", schedule},
              {"lp_assignment", {{"x", x}, {"y", y}, {"z", z}}},
              {"lp_objective", rat(sol.lp_objective)}};
  std::cout << out.dump(2) << "\n";
  return 0;
}

json adversary_json(const AdversaryReport& r) {
  json stats = json::object();
  for (const auto& [name, v] : r.stats) stats[name] = rat(v);
  return {{"steps", r.trace.steps()},
          {"target", ledger_json(r.target)},
          {"measured_cost", rat(r.measured_cost)},
          {"opt", rat(r.opt)},
          {"opt_source", r.opt_source},
          {"ratio", r.ratio ? json(rat(*r.ratio)) : json(nullptr)},
          {"ratio_approx", r.ratio ? json(to_double(*r.ratio)) : json(nullptr)},
          {"bound", r.bound ? json(rat(*r.bound)) : json(nullptr)},
          {"bound_approx", r.bound ? json(to_double(*r.bound)) : json(nullptr)},
          {"stats", stats},
          {"diagnostics", r.diagnostics}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cachelab: online file caching with rental costs and zapping"};
  app.require_subcommand(1);

  std::uint64_t seed = 0;
  try {
    seed = default_seed();
  } catch (const std::exception& e) {
    std::cerr << "cachelab: " << e.what() << "\n";
    return kUsage;
  }

  // run
  auto* run_cmd = app.add_subcommand("run", "run policies on a trace and report ratios");
  std::string run_trace;
  std::vector<std::string> run_policies;
  ParamArgs run_params;
  std::size_t trials = 1;
  std::string format = "json";
  std::string output;
  bool work_log = false;
  bool no_oracle = false;
  run_cmd->add_option("--trace", run_trace, "trace file")->required();
  run_cmd->add_option("--policy", run_policies, "policy name (repeatable)")->required();
  run_params.add_to(*run_cmd);
  run_cmd->add_option("--trials", trials, "trials for randomized policies");
  run_cmd->add_option("--seed", seed, "seed (default $CACHELAB_SEED or 0)");
  run_cmd->add_option("--format", format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
  run_cmd->add_option("--output", output, "report path (default stdout)");
  run_cmd->add_flag("--work-log", work_log, "include CILP work logs in the JSON report");
  run_cmd->add_flag("--no-oracle", no_oracle, "skip the offline optimum");

  // opt
  auto* opt_cmd = app.add_subcommand("opt", "exact offline optimum of a small trace");
  std::string opt_trace;
  ParamArgs opt_params;
  opt_cmd->add_option("--trace", opt_trace, "trace file")->required();
  opt_params.add_to(*opt_cmd);

  // adversary
  auto* adv_cmd = app.add_subcommand("adversary", "generate a lower-bound trace against a target");
  std::string variant;
  std::string target = "lru";
  ParamArgs adv_params;
  std::size_t steps = 1000;
  std::size_t rounds = 100;
  std::string trace_out;
  adv_cmd->add_option("--variant", variant, "rental-det|rental-rand|zapping")
      ->required()
      ->check(CLI::IsMember({"rental-det", "rental-rand", "zapping"}));
  adv_cmd->add_option("--target", target, "target policy (adaptive variants)");
  adv_params.add_to(*adv_cmd, false);
  adv_cmd->add_option("--steps", steps, "steps (rental variants) or step budget (zapping)");
  adv_cmd->add_option("--rounds", rounds, "rounds (zapping)");
  adv_cmd->add_option("--seed", seed, "seed (default $CACHELAB_SEED or 0)");
  adv_cmd->add_option("--trace-out", trace_out, "write the generated trace here");

  // bounds
  auto* bounds_cmd = app.add_subcommand("bounds", "competitive-ratio bounds for a problem");
  std::string problem;
  std::string setting = "deterministic";
  ParamArgs bounds_params;
  bounds_cmd->add_option("--problem", problem, "problem row")->required();
  bounds_cmd->add_option("--setting", setting, "deterministic|randomized");
  bounds_params.add_to(*bounds_cmd, false);

  // gen
  auto* gen_cmd = app.add_subcommand("gen", "random trace generator");
  GeneratorSpec gen;
  std::string tick_density = "0";
  std::string gen_out;
  gen_cmd->add_option("--files", gen.files, "number of files");
  gen_cmd->add_option("--steps", gen.steps, "number of steps");
  gen_cmd->add_option("--min-size", gen.min_size);
  gen_cmd->add_option("--max-size", gen.max_size);
  gen_cmd->add_option("--min-cost", gen.min_cost);
  gen_cmd->add_option("--max-cost", gen.max_cost);
  gen_cmd->add_option("--tick-density", tick_density, "probability of a tick step");
  gen_cmd->add_option("--seed", seed, "seed (default $CACHELAB_SEED or 0)");
  gen_cmd->add_option("--output", gen_out, "trace path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }

  try {
    if (*run_cmd) {
      ExperimentSpec spec;
      spec.trace = load_trace(run_trace);
      spec.policies = run_policies;
      spec.params = run_params.build();
      spec.trials = trials;
      spec.seed = seed;
      spec.use_oracle = !no_oracle;
      spec.keep_work_logs = work_log;
      RatioReport report = run_experiment(spec);
      write_output(output, format == "csv" ? report_csv(report) : report_json(report));
      return 0;
    }
    if (*opt_cmd) return cmd_opt(opt_trace, opt_params);
    if (*adv_cmd) {
      ProblemParams p = adv_params.build();
      AdversaryReport r;
      auto factory = [&](const Catalog& c, const ProblemParams& params) {
        return make_policy(target, c, params, seed);
      };
      if (variant == "rental-det") {
        r = rental_det_adversary(factory, p.k, p.lambda, steps);
      } else if (variant == "rental-rand") {
        r = rental_rand_adversary(p.k, p.lambda, steps, seed);
      } else {
        if (!p.zap_cost) throw std::invalid_argument("--zap-cost is required for the zapping adversary");
        r = zapping_adversary(factory, p.k, *p.zap_cost, rounds, steps);
      }
      if (!trace_out.empty()) save_trace(trace_out, r.trace);
      std::cout << adversary_json(r).dump(2) << "\n";
      return 0;
    }
    if (*bounds_cmd) {
      BoundQuery q;
      q.problem = parse_problem(problem);
      q.setting = parse_setting(setting);
      q.k = bounds_params.k;
      q.lambda = parse_rational(bounds_params.lambda);
      if (!bounds_params.zap_cost.empty()) q.zap_cost = parse_rational(bounds_params.zap_cost);
      Bound b = bounds(q);
      json out = {{"problem", std::string(to_string(q.problem))},
                  {"setting", std::string(to_string(q.setting))},
                  {"band", std::string(to_string(rental_band(q.k, q.lambda)))},
                  {"lower", b.lower ? json(rat(*b.lower)) : json(nullptr)},
                  {"upper", b.upper ? json(rat(*b.upper)) : json(nullptr)},
                  {"lower_approx", b.lower ? json(to_double(*b.lower)) : json(nullptr)},
                  {"upper_approx", b.upper ? json(to_double(*b.upper)) : json(nullptr)},
                  {"lower_formula", b.lower_formula},
                  {"upper_formula", b.upper_formula},
                  {"notes", b.notes}};
      std::cout << out.dump(2) << "\n";
      return 0;
    }
    if (*gen_cmd) {
      gen.tick_density = parse_rational(tick_density);
      gen.seed = seed;
      write_output(gen_out, emit_trace(generate_trace(gen)));
      return 0;
    }
  } catch (const InvariantViolation& e) {
    std::cerr << "cachelab: invariant violation: " << e.what() << "\n";
    return kViolation;
  } catch (const CapacityError& e) {
    std::cerr << "cachelab: invariant violation: " << e.what() << "\n";
    return kViolation;
  } catch (const std::exception& e) {
    std::cerr << "cachelab: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
