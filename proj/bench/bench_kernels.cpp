#include <benchmark/benchmark.h>

#include "gseq/bridges.hpp"
#include "gseq/kernels.hpp"
#include "gseq/reference.hpp"
#include "gseq/walks_mc.hpp"

namespace {

void BM_BridgeTable(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(gseq::graphical_bridge_counts(state.range(0)));
}
void BM_BridgeTableSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(gseq::reference::graphical_bridge_counts(state.range(0)));
}

void BM_SigmaMod(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(gseq::kernels::count_bridges_sigma_mod(state.range(0)));
}
void BM_SigmaModSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(gseq::reference::count_bridges_sigma_mod(state.range(0)));
}

void BM_PathArea(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(gseq::kernels::count_paths_mod_area(state.range(0)));
}
void BM_PathAreaSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(gseq::reference::count_paths_mod_area(state.range(0)));
}

void BM_DegreeSequences(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(gseq::kernels::count_graphical_sequences(state.range(0), true));
}
void BM_DegreeSequencesSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(gseq::reference::count_graphical_sequences(state.range(0)));
}

void BM_RhoMc(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(gseq::estimate_rho(2000, 100000, 1, 4));
}
void BM_RhoMcSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(gseq::reference::estimate_rho(2000, 100000, 1, 4));
}

}  // namespace

BENCHMARK(BM_BridgeTable)->Arg(30)->Arg(60)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BridgeTableSerial)->Arg(30)->Arg(60)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SigmaMod)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SigmaModSerial)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PathArea)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PathAreaSerial)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DegreeSequences)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DegreeSequencesSerial)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RhoMc)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RhoMcSerial)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
