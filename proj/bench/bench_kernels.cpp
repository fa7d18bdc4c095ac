// Serial reference kernels against their OpenMP versions.
//
//   ./bench_kernels --benchmark_filter=Weight

#include <benchmark/benchmark.h>

#include "dscode/code.hpp"
#include "dscode/field.hpp"
#include "dscode/kernels.hpp"

namespace {

using namespace dscode;

// Fields indexed by benchmark argument: 3^8, 5^5, 7^5, 3^9.
const Field& field_for(int64_t which) {
  static const Field fields[] = {Field(3, 8), Field(5, 5), Field(7, 5), Field(3, 9)};
  return fields[which];
}

void BM_WeightSerial(benchmark::State& state) {
  const Field& f = field_for(state.range(0));
  const DefiningSet ds(f);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::weight_histogram_serial(f, ds.elements()));
  state.counters["q"] = f.q();
}

void BM_WeightParallel(benchmark::State& state) {
  const Field& f = field_for(state.range(0));
  const DefiningSet ds(f);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::weight_histogram_parallel(f, ds.elements()));
  state.counters["q"] = f.q();
}

void BM_JointSerial(benchmark::State& state) {
  const Field& f = field_for(state.range(0));
  const auto t = defining_trace_table(f);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::joint_trace_histograms_serial(f, t));
  state.counters["q"] = f.q();
}

void BM_JointParallel(benchmark::State& state) {
  const Field& f = field_for(state.range(0));
  const auto t = defining_trace_table(f);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::joint_trace_histograms_parallel(f, t));
  state.counters["q"] = f.q();
}

}  // namespace

BENCHMARK(BM_WeightSerial)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WeightParallel)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_JointSerial)->DenseRange(0, 1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_JointParallel)->DenseRange(0, 1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
