// Serial reference vs OpenMP kernels on uniform grids.
#include <benchmark/benchmark.h>

#include "abelforge/abel.hpp"
#include "abelforge/kernels.hpp"

using namespace abelforge;

namespace {

// A Fisher-type g: one sqrt, one division and a polynomial per point.
const Expr& workload() {
    static const Expr e = parse("u*(1-u)/sqrt(0.6667-2*u^2+4*u^3/3)");
    return e;
}

template <auto Evaluate>
void evaluateGrid(benchmark::State& state) {
    const auto grid = uniformGrid({-0.4, 0.9}, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(Evaluate(workload(), grid));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <auto MaxAbs>
void reduceGrid(benchmark::State& state) {
    const auto grid = uniformGrid({-0.4, 0.9}, static_cast<std::size_t>(state.range(0)));
    const auto values = kernels::serial::evaluate(workload(), grid);
    for (auto _ : state) benchmark::DoNotOptimize(MaxAbs(values.values, values.ok));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(evaluateGrid<kernels::serial::evaluate>)->Name("evaluate/serial")->RangeMultiplier(10)->Range(1000, 1000000);
BENCHMARK(evaluateGrid<kernels::parallel::evaluate>)->Name("evaluate/parallel")->RangeMultiplier(10)->Range(1000, 1000000);
BENCHMARK(reduceGrid<kernels::serial::maxAbs>)->Name("maxAbs/serial")->RangeMultiplier(10)->Range(1000, 1000000);
BENCHMARK(reduceGrid<kernels::parallel::maxAbs>)->Name("maxAbs/parallel")->RangeMultiplier(10)->Range(1000, 1000000);

BENCHMARK_MAIN();
