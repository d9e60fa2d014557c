// bench_core.cpp — Microbenchmarks for operator construction and verification

#include <benchmark/benchmark.h>

#include "gaudin/laurent.hpp"
#include "gaudin/models.hpp"
#include "gaudin/spectra.hpp"

using namespace gaudin;

namespace {

void BM_MakeOperators(benchmark::State& state) {
    const SpaceSpec space(static_cast<int>(state.range(0)), {0.5});
    for (auto _ : state) {
        auto ops = make_operators(space);
        benchmark::DoNotOptimize(ops.a.matrix().data());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MakeOperators)->RangeMultiplier(2)->Range(8, 128)->Complexity();

void BM_GeneratingFunction(benchmark::State& state) {
    const SpaceSpec space(static_cast<int>(state.range(0)), {0.5});
    const LaxFamily tc = tc_representation(space, TCParams(1.0, 0.35, 0.7));
    const Complex lambda(1.3, 0.4);
    for (auto _ : state) {
        const QOp tau = generating_function(tc, lambda);
        benchmark::DoNotOptimize(tau.matrix().data());
    }
}
BENCHMARK(BM_GeneratingFunction)->RangeMultiplier(2)->Range(8, 64);

void BM_FundamentalIdentity(benchmark::State& state) {
    const SpaceSpec space(static_cast<int>(state.range(0)), {0.5});
    const LaxFamily tc = tc_representation(space, TCParams(1.0, 0.35, 0.7));
    for (auto _ : state) {
        const auto report =
            check_fundamental_identity(tc, Complex(1.3, 0.4), Complex(-0.8, 0.9), 1e-10);
        benchmark::DoNotOptimize(report.residual);
    }
}
BENCHMARK(BM_FundamentalIdentity)->RangeMultiplier(2)->Range(8, 64);

void BM_LaurentFit(benchmark::State& state) {
    const SpaceSpec space(static_cast<int>(state.range(0)), {0.5});
    const LaxFamily gen = gen_representation(
        space, GenRepParams(0.9, 1.1, 0.3, 0.2, 0.25, 1.0));
    for (auto _ : state) {
        const LaurentDecomp fit = laurent_fit(gen, 1e-8);
        benchmark::DoNotOptimize(fit.fit_residual);
    }
}
BENCHMARK(BM_LaurentFit)->RangeMultiplier(2)->Range(8, 64);

void BM_Eigenvalues(benchmark::State& state) {
    const SpaceSpec space(static_cast<int>(state.range(0)), {0.5});
    const ChargeSet charges = closed_form_charges(
        space, GenRepParams(1.0, 1.0, 0.1, 0.1, 0.25, 1.0));
    const QOp h = physical_hamiltonian(charges.H0, charges.H1, 0.7);
    for (auto _ : state) {
        const SpectrumResult result = eigenvalues(h);
        benchmark::DoNotOptimize(result.max_imag);
    }
}
BENCHMARK(BM_Eigenvalues)->RangeMultiplier(2)->Range(16, 128);

} // namespace

int main(int argc, char** argv) {
    benchmark::Initialize(&argc, argv);
    benchmark::RunSpecifiedBenchmarks();
    return 0;
}
