#include "cachelab/adversaries.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "cachelab/rng.hpp"

namespace cachelab {

namespace {

void add_unit_files(Catalog& catalog, std::int64_t count) {
  for (std::int64_t i = 0; i < count; ++i) catalog.add({"p" + std::to_string(i), 1, 1});
}

void set_ratio(AdversaryReport& r) {
  if (r.opt > 0) r.ratio = r.measured_cost / r.opt;
}

}  // namespace

AdversaryReport rental_det_adversary(const PolicyFactory& target, std::int64_t k, const Rational& lambda,
                                     std::size_t steps, const OracleLimits& limits) {
  ProblemParams params;
  params.k = k;
  params.lambda = lambda;
  params.model = CostModel::Paging;
  params.validate();

  AdversaryReport r;
  add_unit_files(r.trace.catalog, k + 1);
  auto policy = target(r.trace.catalog, params);
  Simulation sim(r.trace.catalog, params, *policy);
  for (std::size_t i = 0; i < steps; ++i) {
    FileIndex pick = 0;
    while (sim.cache().resident(pick)) ++pick;
    Event e = Event::request(pick);
    r.trace.events.push_back(e);
    sim.step(e);
  }
  r.target = sim.ledger();
  r.measured_cost = r.target.total();

  Rational kk(k);
  r.bound = (kk + kk * lambda) / (1 + kk * kk * lambda);
  if (steps <= limits.max_steps && static_cast<std::size_t>(k + 1) <= limits.max_files && k <= limits.max_k) {
    r.opt = opt(r.trace, params, limits).cost;
    r.opt_source = "oracle";
  } else {
    r.opt = belady_ledger(r.trace.catalog, r.trace.events, params).total();
    r.opt_source = "belady";
  }
  set_ratio(r);
  return r;
}

AdversaryReport rental_rand_adversary(std::int64_t k, const Rational& lambda, std::size_t steps,
                                      std::uint64_t seed) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (lambda < 0) throw std::invalid_argument("lambda must be >= 0");
  AdversaryReport r;
  add_unit_files(r.trace.catalog, k + 1);
  Rng rng(seed);
  const auto files = static_cast<std::uint64_t>(k + 1);
  std::optional<FileIndex> prev;
  for (std::size_t i = 0; i < steps; ++i) {
    FileIndex f;
    if (!prev) {
      f = static_cast<FileIndex>(rng.below(files));
    } else {
      f = static_cast<FileIndex>(rng.below(files - 1));
      if (f >= *prev) ++f;
    }
    r.trace.events.push_back(Event::request(f));
    prev = f;
  }

  std::size_t phases = 0;
  std::size_t phase_steps = 0;
  std::set<FileIndex> distinct;
  std::size_t current = 0;
  for (const auto& e : r.trace.events) {
    if (!distinct.contains(e.file) && distinct.size() == static_cast<std::size_t>(k)) {
      ++phases;
      phase_steps += current;
      distinct.clear();
      current = 0;
    }
    distinct.insert(e.file);
    ++current;
  }
  Rational h = harmonic(k);
  r.stats["phases"] = Rational(static_cast<std::int64_t>(phases));
  r.stats["H_k"] = h;
  r.stats["k_H_k"] = h * k;
  if (phases > 0) {
    r.stats["mean_phase_length"] =
        Rational(static_cast<std::int64_t>(phase_steps), static_cast<std::int64_t>(phases));
  }
  Rational kk(k);
  r.bound = (h + kk * kk * h * lambda) / (1 + kk * kk * h * lambda);
  r.diagnostics.push_back("expected phase length is sum k/(k-i+1) = k*H_k; the proof text writes H_k");
  return r;
}

AdversaryReport zapping_adversary(const PolicyFactory& target, std::int64_t k, const Rational& zap_cost,
                                  std::size_t rounds, std::size_t max_steps) {
  ProblemParams params;
  params.k = k;
  params.lambda = 0;
  params.zap_cost = zap_cost;
  params.model = CostModel::Paging;
  params.validate();

  AdversaryReport r;
  Catalog& catalog = r.trace.catalog;
  add_unit_files(catalog, k + 1);
  std::set<FileIndex> live;
  for (FileIndex f = 0; f < static_cast<FileIndex>(k + 1); ++f) live.insert(f);
  auto policy = target(catalog, params);
  Simulation sim(catalog, params, *policy);

  struct Round {
    StepIndex begin = 0;
    StepIndex end = 0;  // exclusive
    std::set<FileIndex> first_files;
    std::int64_t zaps = 0;
    std::vector<std::int64_t> phase_lengths;
  };
  std::vector<Round> done;
  Round cur;
  std::int64_t phase_len = 0;
  std::size_t fresh = 0;

  while (done.size() < rounds && sim.now() < max_steps) {
    FileIndex pick = *std::find_if(live.begin(), live.end(), [&](FileIndex f) { return !sim.cache().resident(f); });
    StepIndex t = sim.now();
    if (t - cur.begin < static_cast<StepIndex>(k + 1)) cur.first_files.insert(pick);
    Event e = Event::request(pick);
    r.trace.events.push_back(e);
    const auto& rec = sim.step(e);
    ++phase_len;
    if (!rec.decision.zaps.empty()) {
      cur.phase_lengths.push_back(phase_len);
      for (std::size_t extra = 1; extra < rec.decision.zaps.size(); ++extra) cur.phase_lengths.push_back(0);
      phase_len = 0;
      cur.zaps += static_cast<std::int64_t>(rec.decision.zaps.size());
      for (auto z : rec.decision.zaps) {
        if (live.erase(z) != 0) live.insert(catalog.add({"n" + std::to_string(fresh++), 1, 1}));
      }
    }
    bool round_over = t + 1 - cur.begin >= static_cast<StepIndex>(k + 1) &&
                      std::all_of(cur.first_files.begin(), cur.first_files.end(),
                                  [&](FileIndex f) { return sim.cache().zapped(f); });
    if (round_over) {
      cur.end = t + 1;
      done.push_back(cur);
      cur = Round{};
      cur.begin = t + 1;
      phase_len = 0;
    }
  }
  r.target = sim.ledger();
  if (done.size() < rounds) {
    r.diagnostics.push_back("step budget of " + std::to_string(max_steps) + " exhausted after " +
                            std::to_string(done.size()) + " complete rounds; the target rarely zaps");
  }

  const auto& history = sim.history();
  Rational kk(k);
  Rational formula_total = 0;
  Rational simulated_total = 0;
  ProblemParams plain = params;
  plain.zap_cost.reset();
  for (const auto& round : done) {
    for (StepIndex i = round.begin; i < round.end; ++i) r.measured_cost += history[i].delta.total();
    Rational t(round.zaps);
    Rational sum_h = 0;
    for (auto h : round.phase_lengths) sum_h += h;
    Rational no_zap = kk + t - 1 + sum_h / kk;
    Rational one_zap = kk + t + zap_cost - 1;
    formula_total += std::min(no_zap, one_zap);

    std::span<const Event> span(r.trace.events.data() + round.begin, round.end - round.begin);
    Rational best = belady_ledger(catalog, span, plain).total();
    for (auto f : round.first_files) {
      std::vector<Event> filtered(span.begin(), span.end());
      for (auto& e : filtered) {
        if (e.is_request() && e.file == f) e = Event::tick();
      }
      best = std::min(best, Rational(zap_cost + belady_ledger(catalog, filtered, plain).total()));
    }
    simulated_total += best;
  }
  r.opt = formula_total;
  r.opt_source = "zap-formula";
  set_ratio(r);
  r.stats["rounds"] = Rational(static_cast<std::int64_t>(done.size()));
  r.stats["opt_simulated"] = simulated_total;
  if (simulated_total > 0) r.stats["ratio_simulated"] = r.measured_cost / simulated_total;
  Rational best_certificate = std::min(formula_total, simulated_total);
  if (best_certificate > 0) r.stats["ratio_best_certificate"] = r.measured_cost / best_certificate;
  Rational n = zap_cost;
  r.bound = (2 * n * kk + n - (kk + 1)) / (n + 2 * kk);
  return r;
}

}  // namespace cachelab
