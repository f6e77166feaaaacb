#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "multidom/formulas.hpp"
#include "multidom/oracle.hpp"
#include "multidom/sweep.hpp"
#include "multidom/witness.hpp"

namespace {

// Mixed odd/even sizes so none of the cheap early branches fire.
multidom::PartitionSpec make_spec(std::int64_t k) {
  multidom::PartitionSpec spec;
  spec.sizes.reserve(k);
  for (std::int64_t i = 0; i < k; ++i) spec.sizes.push_back(i % 2 == 0 ? 3 : 4);
  return spec;
}

void BM_SignedFormula(benchmark::State& state) {
  const multidom::PartitionSpec spec = make_spec(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(multidom::signed_domination_number(spec));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SignedFormula)->RangeMultiplier(4)->Range(2, 2048)->Complexity(benchmark::oN);

void BM_SignedWitness(benchmark::State& state) {
  const multidom::PartitionSpec spec = make_spec(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(multidom::signed_witness(spec));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SignedWitness)->RangeMultiplier(4)->Range(2, 2048)->Complexity(benchmark::oN);

void BM_ReducedOracleSigned(benchmark::State& state) {
  // Bipartite K_{n/2, n-n/2}: the largest per-part search ranges.
  const std::int64_t n = state.range(0);
  const multidom::PartitionSpec spec{{n / 2, n - n / 2}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(multidom::oracle_signed(spec));
  }
}
BENCHMARK(BM_ReducedOracleSigned)->DenseRange(8, 32, 8);

void BM_ReducedOracleMinus(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  const multidom::PartitionSpec spec{{n / 2, n - n / 2}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(multidom::oracle_minus(spec));
  }
}
BENCHMARK(BM_ReducedOracleMinus)->DenseRange(8, 32, 8);

void BM_NaiveOracleSigned(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  const multidom::ExplicitGraph g = multidom::build_graph({{n / 2, n - n / 2}});
  for (auto _ : state) {
    benchmark::DoNotOptimize(multidom::naive_oracle(g, multidom::Variant::Signed));
  }
}
BENCHMARK(BM_NaiveOracleSigned)->DenseRange(8, 14, 2);

void BM_Sweep(benchmark::State& state) {
  multidom::SweepOptions options;
  options.max_n = state.range(0);
  options.max_k = 5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(multidom::run_sweep(options));
  }
}
BENCHMARK(BM_Sweep)->Arg(8)->Arg(10)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
