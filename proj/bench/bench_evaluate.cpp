// Serial vs parallel evaluation on positions with wide root matrices.
#include <benchmark/benchmark.h>

#include "simulgame/engine.hpp"
#include "simulgame/gexpr.hpp"

namespace {

using namespace simulgame;

const char* const kPositions[] = {"cl:K7", "cl[OOOOOOOOXOOOOOOOO]", "cl[OXO] + sq'{1}{2}(4) + hb[R]"};

void run(benchmark::State& state, Execution execution) {
  const Position p = gexpr::compile(kPositions[state.range(0)]);
  for (auto _ : state) {
    EvalOptions o;
    o.convention = Convention::Scoring;
    o.execution = execution;
    Evaluator ev(o);
    benchmark::DoNotOptimize(ev.value(p));
  }
  state.SetLabel(kPositions[state.range(0)]);
}

void BM_Serial(benchmark::State& state) { run(state, Execution::Serial); }
void BM_Parallel(benchmark::State& state) { run(state, Execution::Parallel); }

}  // namespace

BENCHMARK(BM_Serial)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Parallel)->DenseRange(0, 2)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
