#include "arterm/catalog.hpp"
#include "arterm/synthesis.hpp"
#include "arterm/verify.hpp"

#include <benchmark/benchmark.h>

using namespace arterm;

static void BM_EvaluateFibonacciTerm(benchmark::State& state) {
  const Term t = fixture("A000045").reference_term;
  const Assignment env{{"n", BigInt(static_cast<unsigned long>(state.range(0)))}};
  for (auto _ : state) benchmark::DoNotOptimize(evaluate(t, env));
}
BENCHMARK(BM_EvaluateFibonacciTerm)->Arg(10)->Arg(40)->Arg(160);

static void BM_EvaluatePellBase143(benchmark::State& state) {
  const Term t = fixture("A001081").reference_term;
  const Assignment env{{"n", BigInt(static_cast<unsigned long>(state.range(0)))}};
  for (auto _ : state) benchmark::DoNotOptimize(evaluate(t, env));
}
BENCHMARK(BM_EvaluatePellBase143)->Arg(40);

static void BM_Synthesize(benchmark::State& state) {
  const Fixture& f = fixtures()[static_cast<std::size_t>(state.range(0))];
  state.SetLabel(f.id);
  for (auto _ : state) benchmark::DoNotOptimize(synthesize(f.recurrence));
}
BENCHMARK(BM_Synthesize)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

static void BM_SeriesCoefficients(benchmark::State& state) {
  const RationalFunction f = generating_function(fibonacci_convolution(4));
  for (auto _ : state) benchmark::DoNotOptimize(series_coefficients(f, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_SeriesCoefficients)->Arg(64)->Arg(512);

static void BM_PellFundamental(benchmark::State& state) {
  const BigInt k(static_cast<unsigned long>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(pell_fundamental(k));
}
BENCHMARK(BM_PellFundamental)->Arg(7)->Arg(61)->Arg(991);

static void BM_VerifyCatalog(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_catalog(40));
}
BENCHMARK(BM_VerifyCatalog)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
