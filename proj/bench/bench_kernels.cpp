// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>
#include <omp.h>

#include "addsys/cuboid.hpp"
#include "addsys/reference.hpp"
#include "addsys/sumsystem.hpp"

using namespace addsys;

namespace {

// Example-4 shaped inputs scaled by the benchmark range.
const Jof& jof_for(std::int64_t size) {
  static const Jof small{{{1, 4}, {2, 5}, {3, 3}, {1, 6}, {2, 4}, {3, 5}}, {24, 20, 15}};
  static const Jof large{{{1, 7}, {2, 4}, {5, 2}, {3, 2}, {4, 2}, {2, 5}, {4, 9}, {3, 3}, {1, 4}, {5, 3}, {3, 5}, {5, 2}},
                         {28, 20, 30, 18, 12}};
  return size == 0 ? small : large;
}

void BM_MinkowskiParallel(benchmark::State& state) {
  const auto ss = build_sum_system(jof_for(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(minkowski_sum(ss.parts()));
  state.counters["threads"] = omp_get_max_threads();
}

void BM_MinkowskiSerial(benchmark::State& state) {
  const auto ss = build_sum_system(jof_for(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(reference::minkowski_sum(ss.parts()));
}

void BM_CoversParallel(benchmark::State& state) {
  const auto ss = build_sum_system(jof_for(state.range(0)));
  const auto terms = as_terms(ss.parts());
  const auto values = sumset_values(terms);
  const Progression target(0, 1, static_cast<Int>(values.size()));
  for (auto _ : state) benchmark::DoNotOptimize(covers_progression(values, target));
}

void BM_CoversSerial(benchmark::State& state) {
  const auto ss = build_sum_system(jof_for(state.range(0)));
  const auto values = sumset_values(as_terms(ss.parts()));
  const Progression target(0, 1, static_cast<Int>(values.size()));
  for (auto _ : state) benchmark::DoNotOptimize(reference::covers_progression(values, target));
}

void BM_BuildingOpParallel(benchmark::State& state) {
  const auto c = build_cuboid(jof_for(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(building_op(1, 2, c));
}

void BM_BuildingOpSerial(benchmark::State& state) {
  const auto c = build_cuboid(jof_for(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(reference::building_op(1, 2, c));
}

void BM_PropertyVParallel(benchmark::State& state) {
  const auto c = build_cuboid(jof_for(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_property_V(c));
}

void BM_PropertyVSerial(benchmark::State& state) {
  const auto c = build_cuboid(jof_for(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(reference::verify_property_V(c));
}

void BM_PolynomialParallel(benchmark::State& state) {
  const auto ss = build_sum_system(jof_for(0));
  for (auto _ : state) benchmark::DoNotOptimize(characteristic_product(ss));
}

void BM_PolynomialSerial(benchmark::State& state) {
  const auto ss = build_sum_system(jof_for(0));
  for (auto _ : state) benchmark::DoNotOptimize(reference::characteristic_product(ss));
}

}  // namespace

BENCHMARK(BM_MinkowskiParallel)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MinkowskiSerial)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CoversParallel)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CoversSerial)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BuildingOpParallel)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BuildingOpSerial)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PropertyVParallel)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PropertyVSerial)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PolynomialParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PolynomialSerial)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
