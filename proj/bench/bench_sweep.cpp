// Serial reference vs OpenMP path for the batch kernels. The memo tables
// are reset before every iteration so both paths are timed cold.

#include <benchmark/benchmark.h>

#include "g2atomic/precanonical.hpp"
#include "g2atomic/sweep.hpp"

namespace {

void atomic_table_bench(benchmark::State& state, g2::AtomicRoute route, g2::Execution exec) {
  const auto box = g2::dominant_box(state.range(0), state.range(0));
  for (auto _ : state) {
    state.PauseTiming();
    g2::reset_memo_caches();
    state.ResumeTiming();
    benchmark::DoNotOptimize(g2::atomic_table(box, route, exec));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(box.size()));
}

void sweep_bench(benchmark::State& state, g2::Execution exec) {
  for (auto _ : state) {
    state.PauseTiming();
    g2::reset_memo_caches();
    state.ResumeTiming();
    const g2::SweepReport report = g2::run_invariant_sweep(state.range(0), state.range(0), exec);
    if (!report.passed()) state.SkipWithError("invariant failure");
    benchmark::DoNotOptimize(report);
  }
}

}  // namespace

BENCHMARK_CAPTURE(atomic_table_bench, precanonical_serial, g2::AtomicRoute::Precanonical, g2::Execution::Serial)
    ->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(atomic_table_bench, precanonical_parallel, g2::AtomicRoute::Precanonical, g2::Execution::Parallel)
    ->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(atomic_table_bench, adjusted_serial, g2::AtomicRoute::Adjusted, g2::Execution::Serial)
    ->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(atomic_table_bench, adjusted_parallel, g2::AtomicRoute::Adjusted, g2::Execution::Parallel)
    ->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(sweep_bench, serial, g2::Execution::Serial)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(sweep_bench, parallel, g2::Execution::Parallel)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
