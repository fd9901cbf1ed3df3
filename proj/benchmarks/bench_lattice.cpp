#include <benchmark/benchmark.h>

#include "qlaem/gamma.hpp"
#include "qlaem/lattice.hpp"

namespace {

qlaem::Lattice2D make_wave(int n) {
    const auto spec = qlaem::make_mode_wave(1, 0, n, n, 1.0);
    return qlaem::plane_wave_state(spec, 0.0, n, n, 1.0);
}

void BM_step(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    qlaem::Lattice2D g = make_wave(n);
    const qlaem::StepParams p(0.05, 1.0);
    for (auto _ : state) {
        g = qlaem::step(g, p);
        benchmark::DoNotOptimize(g.component(0).data());
    }
    state.SetItemsProcessed(state.iterations() * n * n);
}
BENCHMARK(BM_step)->RangeMultiplier(2)->Range(32, 256);

void BM_step_threaded(benchmark::State& state) {
    const int n = 256;
    qlaem::Lattice2D g = make_wave(n);
    const qlaem::StepParams p(0.05, 1.0);
    const int threads = static_cast<int>(state.range(0));
    for (auto _ : state) {
        g = qlaem::step(g, p, threads);
        benchmark::DoNotOptimize(g.component(0).data());
    }
    state.SetItemsProcessed(state.iterations() * n * n);
}
BENCHMARK(BM_step_threaded)->Arg(1)->Arg(2)->Arg(4)->Arg(8);

void BM_stream(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    qlaem::Lattice2D g = make_wave(n);
    for (auto _ : state) {
        g = qlaem::stream(g, qlaem::QubitPair::q01, qlaem::Axis::x, +1);
        benchmark::DoNotOptimize(g.component(0).data());
    }
    state.SetItemsProcessed(state.iterations() * n * n);
}
BENCHMARK(BM_stream)->RangeMultiplier(2)->Range(32, 256);

void BM_continuum_rhs(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const qlaem::Lattice2D g = make_wave(n);
    for (auto _ : state) {
        qlaem::Lattice2D r = qlaem::continuum_rhs(g);
        benchmark::DoNotOptimize(r.component(0).data());
    }
    state.SetItemsProcessed(state.iterations() * n * n);
}
BENCHMARK(BM_continuum_rhs)->RangeMultiplier(2)->Range(32, 256);

}  // namespace

int main(int argc, char** argv) {
    benchmark::Initialize(&argc, argv);
    if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
    benchmark::RunSpecifiedBenchmarks();
    benchmark::Shutdown();
    return 0;
}
