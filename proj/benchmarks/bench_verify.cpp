#include <benchmark/benchmark.h>

#include "proxpt/builtins.hpp"
#include "proxpt/contraction.hpp"
#include "proxpt/solver.hpp"

using namespace proxpt;

static void BM_VerifyFirstKind(benchmark::State& state) {
  const FiniteInstance inst = chain(static_cast<std::size_t>(state.range(0)));
  const VerifyOptions opts{kDefaultTol, AdmissibilityFilter::positive_distance, static_cast<unsigned>(state.range(1))};
  for (auto _ : state) {
    VerificationReport r = verify_first_kind(inst, ThetaSpec::exp(), PhiSpec::pow(0.5), ContractionParams(1, 0, 0, 0), opts);
    benchmark::DoNotOptimize(r.violations.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0));
}
BENCHMARK(BM_VerifyFirstKind)->Args({250, 1})->Args({1000, 1})->Args({1000, 4})->Unit(benchmark::kMillisecond);

static void BM_Uniqueness(benchmark::State& state) {
  const FiniteInstance inst = chain(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    UniquenessReport r = uniqueness_check(inst, {}, 1);
    benchmark::DoNotOptimize(r.limits.data());
  }
}
BENCHMARK(BM_Uniqueness)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);

static void BM_ProximalStep(benchmark::State& state) {
  const FiniteInstance inst = quartic(20);
  for (auto _ : state) benchmark::DoNotOptimize(proximal_step(inst, "a1"));
}
BENCHMARK(BM_ProximalStep);

BENCHMARK_MAIN();
