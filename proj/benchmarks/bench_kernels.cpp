#include "entrostab/matrices.hpp"
#include "entrostab/sampling.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace entrostab;

const GasModel gas;
const ClosureConstants consts;

PrimitiveState bench_state() {
  StateSampler sampler(12345);
  return sampler.state_nonzero();
}

void BM_A0Matrix(benchmark::State& state) {
  const PrimitiveState y = bench_state();
  for (auto _ : state) {
    benchmark::DoNotOptimize(a0_matrix(y, gas));
  }
}
BENCHMARK(BM_A0Matrix);

void BM_AiMatrix(benchmark::State& state) {
  const PrimitiveState y = bench_state();
  for (auto _ : state) {
    benchmark::DoNotOptimize(ai_matrix(y, gas, 0));
  }
}
BENCHMARK(BM_AiMatrix);

void BM_KBlockMatrix(benchmark::State& state) {
  const PrimitiveState y = bench_state();
  const ViscosityAggregates visc = ViscosityAggregates::make(gas, 1e-3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(k_block_matrix(y, visc));
  }
}
BENCHMARK(BM_KBlockMatrix);

void BM_ClosureSources(benchmark::State& state) {
  StateSampler sampler(99);
  const PrimitiveState y = sampler.state_nonzero();
  const PrimGrads g = sampler.gradients();
  const ViscosityAggregates visc = ViscosityAggregates::make(gas, 1e-3);
  for (auto _ : state) {
    SourceTerms s = sources(y, g, visc, gas, consts, Damping{0.8, 1.1, 0.9});
    benchmark::DoNotOptimize(entropy_clip(s, y, g, visc, consts));
  }
}
BENCHMARK(BM_ClosureSources);

void BM_EntropyVariables(benchmark::State& state) {
  const PrimitiveState y = bench_state();
  for (auto _ : state) {
    benchmark::DoNotOptimize(prim_to_entropy(y, gas));
  }
}
BENCHMARK(BM_EntropyVariables);

}  // namespace

BENCHMARK_MAIN();
