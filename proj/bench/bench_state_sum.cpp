// Serial reference against the OpenMP kernel on random tangles of growing size.

#include <benchmark/benchmark.h>

#include <random>

#include "fvj/cover_oracle.hpp"
#include "fvj/state_sum.hpp"
#include "sweep_word.hpp"

namespace {

fvj::CutTangle tangle_with(int crossings, bool torus) {
  std::mt19937_64 rng(static_cast<std::uint64_t>(crossings) * 7919U + torus);
  fvj::testing::WordShape s;
  s.surface = torus ? fvj::SurfaceSpec::torus(3, 5) : fvj::SurfaceSpec::cylinder(4);
  s.m1 = 3;
  s.m2 = torus ? 2 : 0;
  s.crossings = crossings;
  return fvj::testing::realize(fvj::testing::random_word(s, rng));
}

void BM_Serial(benchmark::State& state) {
  const auto t = tangle_with(static_cast<int>(state.range(0)), state.range(1) != 0);
  for (auto _ : state) benchmark::DoNotOptimize(fvj::flat_bracket_serial(t));
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << state.range(0)));
}

void BM_Parallel(benchmark::State& state) {
  const auto t = tangle_with(static_cast<int>(state.range(0)), state.range(1) != 0);
  fvj::StateSumOptions o;
  o.jobs = static_cast<int>(state.range(2));
  for (auto _ : state) benchmark::DoNotOptimize(fvj::flat_bracket(t, o));
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << state.range(0)));
}

void BM_Oracle(benchmark::State& state) {
  const auto t = tangle_with(static_cast<int>(state.range(0)), true);
  for (auto _ : state) benchmark::DoNotOptimize(fvj::oracle_check(t));
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << state.range(0)));
}

}  // namespace

BENCHMARK(BM_Serial)->ArgsProduct({{8, 12, 16, 18}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Parallel)->ArgsProduct({{8, 12, 16, 18}, {0, 1}, {1, 2, 4}})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Oracle)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
