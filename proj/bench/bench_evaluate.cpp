#include <benchmark/benchmark.h>

#include "ddw/dataset.hpp"
#include "ddw/io.hpp"
#include "ddw/parallel.hpp"

namespace {

const ddw::SynthResult& data() {
    static const ddw::SynthResult s = ddw::synth_dataset(ddw::SynthParams{});
    return s;
}

void BM_EvaluateSerial(benchmark::State& state) {
    const ddw::TemplateEvaluator evaluator(data().dataset);
    const auto population = ddw::init_population(data().dataset, static_cast<std::size_t>(state.range(0)), 1);
    for (auto _ : state) {
        auto pop = population;
        ddw::evaluate_serial(pop, evaluator);
        benchmark::DoNotOptimize(pop.front().fitness());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_EvaluateParallel(benchmark::State& state) {
    const ddw::TemplateEvaluator evaluator(data().dataset);
    const auto population = ddw::init_population(data().dataset, static_cast<std::size_t>(state.range(0)), 1);
    const int threads = static_cast<int>(state.range(1));
    for (auto _ : state) {
        auto pop = population;
        ddw::evaluate_parallel(pop, evaluator, threads);
        benchmark::DoNotOptimize(pop.front().fitness());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_EvaluateSerial)->Arg(50)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EvaluateParallel)->Args({50, 2})->Args({50, 4})->Args({50, 8})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
