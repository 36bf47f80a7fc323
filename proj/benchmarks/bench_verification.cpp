#include <benchmark/benchmark.h>

#include <vector>

#include "chaplygin/chaplygin.hpp"

using namespace chaplygin;

namespace {

const RiemannData kWindow{State2D(2.0, 0.5, 0.6), State2D(1.0, -0.25, -0.6)};

void BM_VerifyFan(benchmark::State& state)
{
    const FanSubsolution sub = construct(kWindow);
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_fan(kWindow, sub));
    }
}
BENCHMARK(BM_VerifyFan);

void BM_WeakResidual(benchmark::State& state)
{
    const PiecewiseFanField field = field_from_subsolution(construct(kWindow), FieldFrame::Lab);
    for (auto _ : state) {
        benchmark::DoNotOptimize(weak_residual(field, static_cast<std::size_t>(state.range(0))));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_WeakResidual)->RangeMultiplier(4)->Range(8, 512)->Complexity(benchmark::oN);

void BM_CompareAdmissibility(benchmark::State& state)
{
    const FanSubsolution sub = construct(kWindow);
    const std::vector<RateWindow> windows{{1.0, 1.0}, {1.0, 10.0}, {1.0, 100.0}};
    for (auto _ : state) {
        benchmark::DoNotOptimize(compare_admissibility(kWindow, sub, windows));
    }
}
BENCHMARK(BM_CompareAdmissibility);

} // namespace
