#include <benchmark/benchmark.h>

#include "recipart/builtin_tables.hpp"
#include "recipart/search.hpp"
#include "recipart/spectrum.hpp"

using namespace recipart;

static void BM_FindOne(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(find_one(n, Rational(1), {}));
}
BENCHMARK(BM_FindOne)->Arg(78)->Arg(333)->Arg(1000)->Arg(5000);

static void BM_FindOneSevenFree(benchmark::State& state) {
  ConstraintSpec s;
  s.m_free = {7};
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(find_one(n, Rational(1), s));
}
BENCHMARK(BM_FindOneSevenFree)->Arg(96)->Arg(112);

static void BM_Enumerate(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate(n, Rational(1), {}));
}
BENCHMARK(BM_Enumerate)->Arg(91)->Arg(96)->Arg(151)->Unit(benchmark::kMillisecond);

static void BM_BuildBWindow(benchmark::State& state) {
  const auto lo = static_cast<std::uint64_t>(state.range(0));
  const auto hi = static_cast<std::uint64_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(build_B_window(lo, hi));
}
BENCHMARK(BM_BuildBWindow)->Args({40, 50})->Args({65, 78})->Unit(benchmark::kMillisecond);

static void BM_CheckProperties(benchmark::State& state) {
  static const char* const kNames[] = {"graham-q", "odd15", "sp(5)"};
  const TableCollection t = builtin_tables(kNames[state.range(0)]);
  state.SetLabel(kNames[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(check_properties(t));
}
BENCHMARK(BM_CheckProperties)->DenseRange(0, 2);
BENCHMARK_MAIN();
