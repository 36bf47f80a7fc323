#include <benchmark/benchmark.h>

#include "chaplygin/chaplygin.hpp"

using namespace chaplygin;

namespace {

const RiemannData kDelta{State2D(2.0, 0.3, 1.7), State2D(1.0, -1.0, -0.4)};
const RiemannData kWindow{State2D(2.0, 0.5, 0.6), State2D(1.0, -0.25, -0.6)};

void BM_Classify(benchmark::State& state)
{
    for (auto _ : state) {
        benchmark::DoNotOptimize(classify(kWindow));
    }
}
BENCHMARK(BM_Classify);

void BM_SolveDelta(benchmark::State& state)
{
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_delta(kDelta));
    }
}
BENCHMARK(BM_SolveDelta);

void BM_ConstructDelta(benchmark::State& state)
{
    for (auto _ : state) {
        benchmark::DoNotOptimize(construct(kDelta));
    }
}
BENCHMARK(BM_ConstructDelta);

void BM_ConstructWindow(benchmark::State& state)
{
    for (auto _ : state) {
        benchmark::DoNotOptimize(construct(kWindow));
    }
}
BENCHMARK(BM_ConstructWindow);

void BM_Oracle(benchmark::State& state)
{
    const double rho1 = default_rho1(kWindow);
    for (auto _ : state) {
        benchmark::DoNotOptimize(oracle_interface_system(kWindow, rho1, 42));
    }
}
BENCHMARK(BM_Oracle);

} // namespace
