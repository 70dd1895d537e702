// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "rebit/analytics.hpp"
#include "rebit/entanglement.hpp"
#include "rebit/estimation.hpp"
#include "rebit/sampling.hpp"

using namespace rebit;

namespace {

RandomStream fresh_stream() { return derive_stream(SeedSpec{2024, 4096}, 0); }

void BM_EigSym(benchmark::State& state) {
  RandomStream stream = fresh_stream();
  const RebitDensityMatrix rho = sample_rebit_state(EnsembleKind::RealMixed, stream);
  for (auto _ : state) {
    benchmark::DoNotOptimize(eig_sym(rho.matrix()));
  }
}
BENCHMARK(BM_EigSym);

void BM_EigHermitian(benchmark::State& state) {
  RandomStream stream = fresh_stream();
  const QubitDensityMatrix rho = sample_qubit_state(EnsembleKind::ComplexMixed, stream);
  for (auto _ : state) {
    benchmark::DoNotOptimize(eig_sym(rho.matrix()));
  }
}
BENCHMARK(BM_EigHermitian);

void BM_SampleOrthogonalHaar(benchmark::State& state) {
  RandomStream stream = fresh_stream();
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_orthogonal_haar(stream));
  }
}
BENCHMARK(BM_SampleOrthogonalHaar);

void BM_SampleRealMixed(benchmark::State& state) {
  RandomStream stream = fresh_stream();
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_rebit_state(EnsembleKind::RealMixed, stream));
  }
}
BENCHMARK(BM_SampleRealMixed);

void BM_EvaluateRealMixed(benchmark::State& state) {
  RandomStream stream = fresh_stream();
  const RebitDensityMatrix rho = sample_rebit_state(EnsembleKind::RealMixed, stream);
  for (auto _ : state) {
    benchmark::DoNotOptimize(evaluate(rho));
  }
}
BENCHMARK(BM_EvaluateRealMixed);

void BM_EvaluateComplexMixed(benchmark::State& state) {
  RandomStream stream = fresh_stream();
  const QubitDensityMatrix rho = sample_qubit_state(EnsembleKind::ComplexMixed, stream);
  for (auto _ : state) {
    benchmark::DoNotOptimize(evaluate(rho));
  }
}
BENCHMARK(BM_EvaluateComplexMixed);

void BM_WoottersReal(benchmark::State& state) {
  RandomStream stream = fresh_stream();
  const RebitDensityMatrix rho = sample_rebit_state(EnsembleKind::RealMixed, stream);
  for (auto _ : state) {
    benchmark::DoNotOptimize(concurrence_wootters(rho));
  }
}
BENCHMARK(BM_WoottersReal);

void BM_HistogramAccumulate(benchmark::State& state) {
  RandomStream stream = fresh_stream();
  Histogram hist(0.0, 1.0, 100);
  for (auto _ : state) {
    hist.accumulate(stream.next_unit());
  }
  benchmark::DoNotOptimize(hist.total());
}
BENCHMARK(BM_HistogramAccumulate);

void BM_PureDensityCurve(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(pure_entanglement_density_curve(static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(BM_PureDensityCurve)->Arg(1000)->Arg(10000);

}  // namespace

BENCHMARK_MAIN();
