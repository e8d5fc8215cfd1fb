#include <benchmark/benchmark.h>

#include "viewcx/collapse.hpp"
#include "viewcx/complex.hpp"
#include "viewcx/exec_oracle.hpp"

using namespace viewcx;

static void BM_BuildView(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::int64_t simplices = 0;
  for (auto _ : state) {
    Complex c = build_view_complex(n);
    simplices = static_cast<std::int64_t>(c.size());
    benchmark::DoNotOptimize(c);
  }
  state.counters["simplices"] = static_cast<double>(simplices);
}
BENCHMARK(BM_BuildView)->DenseRange(1, 4);

static void BM_BuildChromatic(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    Complex c = build_chromatic(n);
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_BuildChromatic)->DenseRange(1, 4);

static void BM_IntervalPartition(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Complex c = build_view_complex(n);
  for (auto _ : state) {
    auto part = interval_partition(c);
    benchmark::DoNotOptimize(part);
  }
}
BENCHMARK(BM_IntervalPartition)->DenseRange(1, 4);

static void BM_PlainSequence(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Complex c = build_view_complex(n);
  for (auto _ : state) {
    auto seq = plain_sequence(c, CollapseTarget::to_void);
    benchmark::DoNotOptimize(seq);
  }
}
BENCHMARK(BM_PlainSequence)->DenseRange(1, 3);

static void BM_EquivariantSequence(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Complex c = build_view_complex(n);
  for (auto _ : state) {
    auto seq = equivariant_sequence(c, CollapseTarget::to_void);
    benchmark::DoNotOptimize(seq);
  }
}
BENCHMARK(BM_EquivariantSequence)->DenseRange(1, 3);

static void BM_VerifyEquivariant(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Complex c = build_view_complex(n);
  const CollapseSequence seq = equivariant_sequence(c, CollapseTarget::to_void);
  for (auto _ : state) {
    auto report = verify_sequence(c, seq);
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_VerifyEquivariant)->DenseRange(1, 3);

static void BM_EnumerateProfiles(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto profiles = enumerate_profiles(n, ExecModel::snapshot);
    benchmark::DoNotOptimize(profiles);
  }
}
BENCHMARK(BM_EnumerateProfiles)->DenseRange(1, 4);

BENCHMARK_MAIN();
