#include <benchmark/benchmark.h>

#include "nagata/checkers.hpp"
#include "nagata/covers.hpp"
#include "nagata/generators.hpp"
#include "nagata/nagata_space.hpp"
#include "nagata/nesting.hpp"

using namespace nagata;

namespace {

NagataSpace line_nagata(std::size_t length) {
  auto s = line_space(length);
  NestingOptions o;
  o.saturate = true;
  return build_nagata_space(s, build_nested_sequence(s, interval_provider(s, 2), o));
}

void BM_BuildPipeline(benchmark::State& state) {
  auto s = line_space(static_cast<std::size_t>(state.range(0)));
  NestingOptions o;
  o.saturate = true;
  for (auto _ : state) {
    auto seq = build_nested_sequence(s, interval_provider(s, 2), o);
    benchmark::DoNotOptimize(build_nagata_space(s, seq));
  }
}
BENCHMARK(BM_BuildPipeline)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_GreedyPipeline(benchmark::State& state) {
  auto s = grid2d_space(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(0)));
  NestingOptions o;
  o.saturate = true;
  for (auto _ : state) benchmark::DoNotOptimize(build_nested_sequence(s, greedy_provider(s, 2), o));
}
BENCHMARK(BM_GreedyPipeline)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_CheckN2(benchmark::State& state) {
  auto ns = line_nagata(static_cast<std::size_t>(state.range(0)));
  const auto workers = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(check_n2(ns.matrix(), 1, {Exhaustive{}, workers}));
}
BENCHMARK(BM_CheckN2)->Args({32, 1})->Args({64, 1})->Args({64, 4})->Unit(benchmark::kMillisecond);

void BM_QuasiUltrametric(benchmark::State& state) {
  auto ns = line_nagata(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check_quasi_ultrametric(ns.matrix()));
}
BENCHMARK(BM_QuasiUltrametric)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
