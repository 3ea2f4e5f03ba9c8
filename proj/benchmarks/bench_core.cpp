#include <benchmark/benchmark.h>

#include "ellprime/densities.hpp"
#include "ellprime/division_polynomials.hpp"
#include "ellprime/koblitz_scan.hpp"
#include "ellprime/numtheory.hpp"
#include "ellprime/order_counting.hpp"
#include "ellprime/prime_measures.hpp"

namespace {

using namespace ellprime;

void BM_Sieve(benchmark::State& state) {
  const u64 limit = state.range(0);
  for (auto _ : state) {
    PrimeSieve s(limit);
    benchmark::DoNotOptimize(s.primes().size());
  }
  state.SetItemsProcessed(state.iterations() * limit);
}
BENCHMARK(BM_Sieve)->Arg(100'000)->Arg(1'000'000)->Arg(10'000'000);

void BM_OrderNaive(benchmark::State& state) {
  const ReducedCurve curve = reduce({0, 2, ""}, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(order_naive(curve));
}
BENCHMARK(BM_OrderNaive)->Arg(10'007)->Arg(100'003)->Arg(1'000'003);

void BM_OrderBsgs(benchmark::State& state) {
  const ReducedCurve curve = reduce({0, 2, ""}, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(order_bsgs(curve));
}
BENCHMARK(BM_OrderBsgs)->Arg(10'007)->Arg(100'003)->Arg(1'000'003);

void BM_Scan(benchmark::State& state) {
  const CurveSpec spec{0, 2, ""};
  for (auto _ : state) {
    ScanCache cache(spec);
    scan(spec, state.range(0), cache);
    benchmark::DoNotOptimize(cache.records().size());
  }
}
BENCHMARK(BM_Scan)->Arg(1000)->Arg(10'000)->Unit(benchmark::kMillisecond);

void BM_PsiEvaluator(benchmark::State& state) {
  const ReducedCurve curve = reduce({0, 2, ""}, 1'000'003);
  const ReducedPoint point = lift_x(curve, 1).front();
  for (auto _ : state) {
    PsiEvaluator psi(curve, point);
    benchmark::DoNotOptimize(psi.eval(state.range(0)));
  }
}
BENCHMARK(BM_PsiEvaluator)->Arg(100)->Arg(1000)->Arg(10'000);

void BM_KoblitzConstant(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(koblitz_constant(state.range(0)).value);
  state.SetLabel("cutoff " + std::to_string(state.range(0)));
}
BENCHMARK(BM_KoblitzConstant)
    ->Arg(100'000)
    ->Arg(1'000'000)
    ->Unit(benchmark::kMillisecond);

void BM_LambdaSurvey(benchmark::State& state) {
  const LambdaSummer summer(120'000);
  for (auto _ : state) {
    const SurveyResult r = short_interval_survey(10'000, 100'000, summer);
    benchmark::DoNotOptimize(r.exceptions);
  }
}
BENCHMARK(BM_LambdaSurvey)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
