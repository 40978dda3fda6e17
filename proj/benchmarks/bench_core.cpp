#include <benchmark/benchmark.h>

#include <hpo/kernel.hpp>
#include <hpo/sampling.hpp>
#include <hpo/spectral.hpp>

namespace {

using hpo::AffineSymbol;
using hpo::Complex;

void BM_GramInner(benchmark::State& state) {
    hpo::PointSampler sampler(1);
    const auto f = sampler.combo(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)));
    const auto g = sampler.combo(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(hpo::inner(f, g));
    }
}
BENCHMARK(BM_GramInner)->Arg(4)->Arg(16)->Arg(64);

void BM_SymmetryResidual(benchmark::State& state) {
    hpo::PointSampler sampler(2);
    const auto points = sampler.points(static_cast<int>(state.range(0)));
    const AffineSymbol phi(1.0, Complex{2.0, 3.0});
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            hpo::symmetry_residual(phi, hpo::ConjugationSpec::j(), points));
    }
}
BENCHMARK(BM_SymmetryResidual)->Arg(12)->Arg(50);

void BM_WitnessSearch(benchmark::State& state) {
    const AffineSymbol phi(0.5, 1.0);
    std::uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(hpo::cohypo_witness_search(phi, 8, seed++));
    }
}
BENCHMARK(BM_WitnessSearch);

void BM_CompositionMatrix(benchmark::State& state) {
    const AffineSymbol phi(2.0, 1.0);
    const int order = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(hpo::composition_matrix(phi, order, 8192));
    }
}
BENCHMARK(BM_CompositionMatrix)->Arg(32)->Arg(64)->Arg(128);

void BM_CohypoMatrixResidual(benchmark::State& state) {
    const AffineSymbol phi(2.0, 1.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(hpo::cohypo_matrix_residual(phi, 24));
    }
}
BENCHMARK(BM_CohypoMatrixResidual);

void BM_BoundaryQuadrature(benchmark::State& state) {
    const auto k1 = [](Complex w) { return 1.0 / (1.0 + w); };
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            hpo::boundary_norm_quadrature(k1, 0.001, static_cast<int>(state.range(0))));
    }
}
BENCHMARK(BM_BoundaryQuadrature)->Arg(512)->Arg(2048);

} // namespace

BENCHMARK_MAIN();
