#include <benchmark/benchmark.h>

#include "cachelab/covering.hpp"
#include "cachelab/generator.hpp"
#include "cachelab/oracle.hpp"
#include "cachelab/registry.hpp"

using namespace cachelab;

namespace {

Trace trace_of(std::size_t files, std::size_t steps, std::uint64_t seed) {
  GeneratorSpec g;
  g.files = files;
  g.steps = steps;
  g.tick_density = Rational(1, 6);
  g.seed = seed;
  return generate_trace(g);
}

void BM_CoveringConstraint(benchmark::State& state) {
  const auto terms = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    CoveringEngine e;
    CoveringConstraint c;
    for (std::size_t i = 0; i < terms; ++i) c.term(e.add_variable(Rational(static_cast<std::int64_t>(i + 1), 7)));
    benchmark::DoNotOptimize(e.process_constraint(c));
  }
}
BENCHMARK(BM_CoveringConstraint)->Arg(3)->Arg(9)->Arg(33);

void BM_Oracle(benchmark::State& state) {
  auto t = trace_of(6, static_cast<std::size_t>(state.range(0)), 5);
  ProblemParams p;
  p.k = 3;
  p.lambda = Rational(1, 4);
  p.zap_cost = Rational(3);
  for (auto _ : state) benchmark::DoNotOptimize(opt(t, p).cost);
}
BENCHMARK(BM_Oracle)->Arg(8)->Arg(14)->Arg(30);

void BM_Policy(benchmark::State& state, const char* name, bool zapping) {
  auto t = trace_of(32, 2000, 9);
  ProblemParams p;
  p.k = 8;
  p.lambda = Rational(1, 32);
  if (zapping) p.zap_cost = Rational(5);
  for (auto _ : state) {
    auto pol = make_policy(name, t.catalog, p, 1);
    benchmark::DoNotOptimize(run(t, p, *pol).ledger.total());
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * t.steps()));
}
BENCHMARK_CAPTURE(BM_Policy, lru, "lru", false);
BENCHMARK_CAPTURE(BM_Policy, landlord, "landlord", false);
BENCHMARK_CAPTURE(BM_Policy, rental_paging_cilp, "rental-paging-cilp", false);
BENCHMARK_CAPTURE(BM_Policy, rental_zapping_paging_cilp, "rental-zapping-paging-cilp", true);
BENCHMARK_CAPTURE(BM_Policy, meta_lru, "meta:lru+alg-inf:det", false);

}  // namespace
BENCHMARK_MAIN();
