#include "symdyn/checks.hpp"
#include "symdyn/classify.hpp"
#include "symdyn/spaces.hpp"

#include <benchmark/benchmark.h>

#include <random>

namespace {

using namespace symdyn;

void literal(benchmark::State& state, Route route) {
  const auto cf = context_free_shift();
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(classify_bounded(cf, n, 3, Mode::extender, route).count);
}

void literal_serial(benchmark::State& state) { literal(state, Route::literal_serial); }
void literal_parallel(benchmark::State& state) { literal(state, Route::literal_parallel); }

void engine(benchmark::State& state) {
  const auto cf = context_free_shift();
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    ContextEngine e(cf);
    benchmark::DoNotOptimize(e.classify(n, 3, Mode::extender).count);
  }
}

void sofic_kernel(benchmark::State& state, Kernel kernel) {
  std::mt19937_64 rng(1);
  SoficClassifier exact(random_presentation(rng, 8, 2, 0.25));
  const auto n = static_cast<std::size_t>(state.range(0));
  exact.relations(n);
  for (auto _ : state) benchmark::DoNotOptimize(exact.count(n, Mode::extender, kernel));
}

void sofic_serial(benchmark::State& state) { sofic_kernel(state, Kernel::serial); }
void sofic_parallel(benchmark::State& state) { sofic_kernel(state, Kernel::parallel); }

}  // namespace

BENCHMARK(literal_serial)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(literal_parallel)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(engine)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(sofic_serial)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(sofic_parallel)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
