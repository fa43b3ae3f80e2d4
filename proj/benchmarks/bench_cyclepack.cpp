#include <benchmark/benchmark.h>

#include "cyclepack/augment.hpp"
#include "cyclepack/enumerate.hpp"
#include "cyclepack/harness.hpp"
#include "cyclepack/packing.hpp"
#include "cyclepack/reduce.hpp"

using namespace cyclepack;

namespace {

Graph targeted(std::size_t n, std::uint64_t seed) {
  return sample_degree_targeted(n, SamplerTarget{2, 4, 0}, seed);
}

void BM_FindTwoCycles(benchmark::State& state) {
  const Graph g = targeted(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(find_disjoint_cycles(g, 2));
}
BENCHMARK(BM_FindTwoCycles)->Arg(16)->Arg(38)->Arg(60);

void BM_MaxCyclePacking(benchmark::State& state) {
  const Graph g = sample_gnp(static_cast<std::size_t>(state.range(0)), 0.3, 7);
  for (auto _ : state) benchmark::DoNotOptimize(max_cycle_packing(g));
}
BENCHMARK(BM_MaxCyclePacking)->Arg(10)->Arg(14)->Arg(18);

void BM_GrowGoodPacking(benchmark::State& state) {
  const Graph g = sample_degree_targeted(static_cast<std::size_t>(state.range(0)),
                                         SamplerTarget{3, 9, 0}, 3);
  for (auto _ : state) benchmark::DoNotOptimize(grow_good_packing(g, 3));
}
BENCHMARK(BM_GrowGoodPacking)->Arg(30)->Arg(60);

void BM_ReduceFully(benchmark::State& state) {
  const Graph g = targeted(static_cast<std::size_t>(state.range(0)), 5);
  for (auto _ : state) {
    ReductionState st = make_state(g, 2, 2);
    benchmark::DoNotOptimize(reduce_fully(st));
  }
}
BENCHMARK(BM_ReduceFully)->Arg(38)->Arg(60);

void BM_VerifyExhaustive(benchmark::State& state) {
  EnumerationSpec s;
  s.mode = EnumerationMode::kExhaustive;
  s.n_max = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_theorem(Hypothesis::kGap3k, 2, s));
}
BENCHMARK(BM_VerifyExhaustive)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
