#include <benchmark/benchmark.h>

#include <random>

#include "membrane/corpus.hpp"
#include "membrane/evolution.hpp"
#include "membrane/extensions.hpp"
#include "membrane/kernel.hpp"
#include "membrane/projections.hpp"

namespace {

using namespace membrane;

const Grid& bench_grid() {
    static const Grid g(30.0, 6001);
    return g;
}

void BM_ExpConvolve(benchmark::State& state) {
    const LineFunction f = corpus_line("gauss", bench_grid());
    for (auto _ : state) benchmark::DoNotOptimize(exp_convolve(1.0, f));
}
BENCHMARK(BM_ExpConvolve);

void BM_ExtendSnapping(benchmark::State& state) {
    const SharpFunction f = corpus_sharp("step", bench_grid());
    const MembraneParams params(1.0, 2.0);
    for (auto _ : state) benchmark::DoNotOptimize(extend_snapping(params, f));
}
BENCHMARK(BM_ExtendSnapping);

void BM_ProjectC(benchmark::State& state) {
    std::mt19937_64 rng(7);
    const FunctionPair p = random_pair(bench_grid(), rng);
    const MembraneParams params(1.0, 2.0);
    for (auto _ : state) benchmark::DoNotOptimize(project_C(params, p));
}
BENCHMARK(BM_ProjectC);

void BM_CosineSnapping(benchmark::State& state) {
    const SharpFunction f = corpus_sharp("step", bench_grid());
    const Evolution ev = Evolution::snapping(MembraneParams(1.0, 2.0));
    for (auto _ : state) benchmark::DoNotOptimize(cosine_evolve(ev, 1.0, f));
}
BENCHMARK(BM_CosineSnapping);

void BM_SemigroupFree(benchmark::State& state) {
    const SharpFunction f = corpus_sharp("gauss", bench_grid());
    for (auto _ : state)
        benchmark::DoNotOptimize(semigroup_evolve(Evolution::free(), 0.5, f));
}
BENCHMARK(BM_SemigroupFree);

}  // namespace

BENCHMARK_MAIN();
