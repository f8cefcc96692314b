#include <benchmark/benchmark.h>

#include "mop/inverse_problem.hpp"
#include "mop/measures_catalog.hpp"
#include "mop/nearest_neighbor.hpp"
#include "mop/polynomial_oracle.hpp"
#include "mop/stepline.hpp"

namespace {

void BM_ShiftFamilyE1(benchmark::State& state)
{
    const int depth = static_cast<int>(state.range(0));
    const mop::StepLineCoeffs level0 = mop::bessel_stepline(0, 0, 2 * depth + 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(mop::build_e1_family(level0, depth));
    }
}
BENCHMARK(BM_ShiftFamilyE1)->Arg(5)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_ForwardPipeline(benchmark::State& state)
{
    const int depth = static_cast<int>(state.range(0));
    const mop::StepLineCoeffs level0 = mop::bessel_stepline(0, 0, 2 * depth + 1);
    const mop::FreeParameter seed = mop::FreeParameter::exact_mu2(1, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(mop::forward_pipeline(level0, seed, depth));
    }
}
BENCHMARK(BM_ForwardPipeline)->Arg(6)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_InverseR2(benchmark::State& state)
{
    const int len = static_cast<int>(state.range(0));
    const auto [mu1, mu2] = mop::random_pair(1, len + 2);
    const mop::MarginalRecurrence r1 = mop::stieltjes_recurrence(mu1, len + 1, 1);
    const mop::MarginalRecurrence r2 = mop::stieltjes_recurrence(mu2, len + 1, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(mop::nn_from_marginals_r2(r1, r2, len));
    }
}
BENCHMARK(BM_InverseR2)->Arg(6)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_InverseGeneralR(benchmark::State& state)
{
    const int r = static_cast<int>(state.range(0));
    const int len = static_cast<int>(state.range(1));
    const std::vector<mop::DiscreteMeasure> sys = mop::random_system(1, r, len + 2);
    std::vector<mop::MarginalRecurrence> recs;
    for (int i = 0; i < r; ++i) {
        recs.push_back(mop::stieltjes_recurrence(sys[static_cast<std::size_t>(i)], len + 1, i + 1));
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(mop::nn_from_marginals_general_r(recs, len));
    }
}
BENCHMARK(BM_InverseGeneralR)->Args({2, 6})->Args({3, 4})->Args({4, 3})->Unit(benchmark::kMillisecond);

void BM_OracleGrid(benchmark::State& state)
{
    const int len = static_cast<int>(state.range(0));
    const auto [mu1, mu2] = mop::random_pair(1, 2 * len + 2);
    const mop::MomentTable moments = mop::moment_table({mu1, mu2}, 3 * len + 4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(mop::nn_oracle_grid(moments, len));
    }
}
BENCHMARK(BM_OracleGrid)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
