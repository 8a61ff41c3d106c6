#include "bergman/intmat.hpp"
#include "bergman/kernel.hpp"
#include "bergman/oracle.hpp"

#include <benchmark/benchmark.h>

using namespace bergman;

namespace {

IntMatrix2 hartogs_matrix(std::int64_t k1, std::int64_t k2) { return {k1, -k2, 0, 1}; }

void BM_GeneralKernel(benchmark::State& state) {
  const IntMatrix2 b = hartogs_matrix(state.range(0), 1);
  for (auto _ : state) benchmark::DoNotOptimize(general_kernel(b));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_GeneralKernel)->RangeMultiplier(2)->Range(2, 64)->Complexity();

void BM_GeneralKernelLarge(benchmark::State& state) {
  const IntMatrix2 b(4, -1, -1, 3);
  for (auto _ : state) benchmark::DoNotOptimize(general_kernel(b));
}
BENCHMARK(BM_GeneralKernelLarge);

void BM_Hermite(benchmark::State& state) {
  const IntMatrix2 a(37, 12, 5, 41);
  for (auto _ : state) benchmark::DoNotOptimize(hermite(a));
}
BENCHMARK(BM_Hermite);

void BM_EvalKernel(benchmark::State& state) {
  const DomainSpec spec(IntMatrix2(4, -1, -1, 3));
  const KernelFormula f = general_kernel(spec.b());
  const PointPair pp = sample_points(spec, 1, 0).front();
  for (auto _ : state) benchmark::DoNotOptimize(eval_kernel(f, pp.z, pp.w));
}
BENCHMARK(BM_EvalKernel);

void BM_SeriesOracle(benchmark::State& state) {
  const DomainSpec spec(IntMatrix2(4, -1, -1, 3));
  const PointPair pp = sample_points(spec, 1, 0).front();
  for (auto _ : state) benchmark::DoNotOptimize(series_kernel(spec, pp.z, pp.w, 1e-8));
}
BENCHMARK(BM_SeriesOracle)->Unit(benchmark::kMillisecond);

void BM_TransportedKernel(benchmark::State& state) {
  const DomainSpec spec(IntMatrix2(4, -1, -1, 3));
  const PointPair pp = sample_points(spec, 1, 0).front();
  for (auto _ : state) benchmark::DoNotOptimize(transported_kernel(spec, pp.z, pp.w));
}
BENCHMARK(BM_TransportedKernel);

}  // namespace

BENCHMARK_MAIN();
