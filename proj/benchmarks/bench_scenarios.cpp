#include <dcvopt/scenarios.hpp>

#include <benchmark/benchmark.h>

#include <string>

using namespace dcvopt;

static void BM_Scenario(benchmark::State& state, std::string name)
{
    ScenarioOverrides overrides;
    overrides.grid = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        auto result = run_scenario(name, overrides);
        benchmark::DoNotOptimize(result.name);
    }
}
BENCHMARK_CAPTURE(BM_Scenario, example_3_1, std::string("example-3-1"))
    ->Arg(21)->Arg(101)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Scenario, example_4_1, std::string("example-4-1"))
    ->Arg(21)->Arg(101)->Unit(benchmark::kMillisecond);
