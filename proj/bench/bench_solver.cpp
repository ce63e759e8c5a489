// Serial reference kernel against the parallel kernel on 3-cop GP games.
// The reference kernel works on the unreduced state space, so the gap also
// measures what the rotation quotient buys.

#include <benchmark/benchmark.h>

#include "copnum/gp_family.hpp"
#include "copnum/solver.hpp"

namespace {

using namespace copnum;

void run(benchmark::State& state, Kernel kernel, bool symmetry) {
  const Graph g = build_gp(GpParams::make(static_cast<int>(state.range(0)), static_cast<int>(state.range(1))));
  SolverConfig cfg;
  cfg.kernel = kernel;
  cfg.use_symmetry = symmetry;
  std::uint64_t states = 0;
  for (auto _ : state) {
    const SolveResult r = cops_win(g, 3, cfg);
    benchmark::DoNotOptimize(r.cops_win_overall());
    states = r.full_state_count();
  }
  state.counters["states"] = static_cast<double>(states);
  state.counters["states_per_s"] =
      benchmark::Counter(static_cast<double>(states), benchmark::Counter::kIsIterationInvariantRate);
}

void BM_Reference(benchmark::State& s) { run(s, Kernel::reference, false); }
void BM_ParallelFull(benchmark::State& s) { run(s, Kernel::parallel, false); }
void BM_ParallelRotation(benchmark::State& s) { run(s, Kernel::parallel, true); }

void gp_args(benchmark::internal::Benchmark* b) {
  b->Args({10, 3})->Args({13, 5})->Args({16, 3})->Args({20, 8})->Unit(benchmark::kMillisecond);
}

}  // namespace

BENCHMARK(BM_Reference)->Apply(gp_args);
BENCHMARK(BM_ParallelFull)->Apply(gp_args);
BENCHMARK(BM_ParallelRotation)->Apply(gp_args);

BENCHMARK_MAIN();
