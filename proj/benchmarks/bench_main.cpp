#include "seats/engine.hpp"
#include "seats/fast_engine.hpp"
#include "seats/instance.hpp"
#include "seats/montecarlo.hpp"
#include "seats/probability.hpp"
#include "seats/violation.hpp"

#include <benchmark/benchmark.h>

using namespace seats;

static void BM_ApportionExact(benchmark::State& state) {
    auto inst = PopulationInstance::from_doubles({1.0, 137.25, 9431.5},
                                                 static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(apportion(Method::HuntingtonHill, inst));
}
BENCHMARK(BM_ApportionExact)->Arg(10)->Arg(50)->Arg(200);

static void BM_ClassifyFast(benchmark::State& state) {
    double pops[3] = {1.0, 137.25, 9431.5};
    for (auto _ : state)
        benchmark::DoNotOptimize(
            fast::classify_caused(Method::HuntingtonHill, pops, 3,
                                  static_cast<int>(state.range(0))));
}
BENCHMARK(BM_ClassifyFast)->Arg(10)->Arg(50);

static void BM_ClassifyExact(benchmark::State& state) {
    auto inst = PopulationInstance::from_doubles({1.0, 137.25, 9431.5},
                                                 static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(classify_violation(Method::HuntingtonHill, inst));
}
BENCHMARK(BM_ClassifyExact)->Arg(10)->Arg(50);

static void BM_ExactProbability(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(
            exact_probability(Method::Dean, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_ExactProbability)->Arg(100)->Arg(1000);

static void BM_IntegralProbability(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(integral_probability(
            Method::HuntingtonHill, static_cast<int>(state.range(0)),
            DensitySpec::exp_iid()));
}
BENCHMARK(BM_IntegralProbability)->Arg(5)->Arg(15);

static void BM_EstimateChunk(benchmark::State& state) {
    EstimateOptions opts{.threads = 1};
    for (auto _ : state)
        benchmark::DoNotOptimize(estimate_violation_prob(
            Method::HuntingtonHill, 10, SamplerSpec::wedge(1e6, 7), 8192, opts));
}
BENCHMARK(BM_EstimateChunk);

BENCHMARK_MAIN();
