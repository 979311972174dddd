// Dense reference vs streaming engine. Arguments: N, and worker count for
// the streaming variants. Results are checked once up front so a fast but
// wrong kernel cannot report a number.

#include <benchmark/benchmark.h>

#include <cstdlib>
#include <iostream>

#include "pdc/engine.hpp"

namespace {

void BM_Dense(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pdc::run_dense({.max_n = n}));
  state.SetLabel("N=" + std::to_string(n));
}

void BM_Streaming(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  const int workers = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        pdc::run_streaming({.max_n = n, .mode = pdc::EngineMode::streaming, .workers = workers}));
  }
  state.SetLabel("N=" + std::to_string(n) + " workers=" + std::to_string(workers));
}

BENCHMARK(BM_Dense)->Arg(100)->Arg(200)->Arg(400)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Streaming)
    ->ArgsProduct({{100, 200, 400}, {1, 2, 4, 8}})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

}  // namespace

int main(int argc, char** argv) {
  const auto dense = pdc::run_dense({.max_n = 150});
  for (int w : {1, 4}) {
    if (pdc::run_streaming({.max_n = 150, .mode = pdc::EngineMode::streaming, .workers = w}) != dense) {
      std::cerr << "streaming result differs from dense with " << w << " workers\n";
      return EXIT_FAILURE;
    }
  }
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return EXIT_FAILURE;
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return EXIT_SUCCESS;
}
