#include <benchmark/benchmark.h>

#include "oddhole/coloring.hpp"
#include "oddhole/generators.hpp"
#include "oddhole/holes.hpp"
#include "oddhole/lemmas.hpp"
#include "oddhole/subdivision.hpp"

using namespace oddhole;

namespace {

void BM_InducedCyclesGP(benchmark::State& state) {
    const Graph g = generalized_petersen(static_cast<int>(state.range(0)), 2);
    for (auto _ : state) benchmark::DoNotOptimize(induced_cycles(g));
}
BENCHMARK(BM_InducedCyclesGP)->Arg(5)->Arg(7)->Arg(9)->Arg(11);

void BM_Membership(benchmark::State& state) {
    const int p = static_cast<int>(state.range(0));
    const Graph g = k4_subdivision(p, p, 1).graph;
    for (auto _ : state) benchmark::DoNotOptimize(g_ell_membership(g));
}
BENCHMARK(BM_Membership)->DenseRange(2, 6, 2);

void BM_FindOddK4(benchmark::State& state) {
    const int p = static_cast<int>(state.range(0));
    const Graph g = k4_subdivision(p, p, 1).graph;
    for (auto _ : state) benchmark::DoNotOptimize(find_odd_k4_subdivision(g));
}
BENCHMARK(BM_FindOddK4)->DenseRange(2, 6, 2);

void BM_FindOddK4Absent(benchmark::State& state) {
    const int a = static_cast<int>(state.range(0));
    const Graph g = theta(a, a + 1, a + 1);
    for (auto _ : state) benchmark::DoNotOptimize(find_odd_k4_subdivision(g));
}
BENCHMARK(BM_FindOddK4Absent)->Arg(4)->Arg(8);

void BM_ChromaticNumber(benchmark::State& state) {
    const Graph g = mycielski(cycle(5));
    for (auto _ : state) benchmark::DoNotOptimize(chromatic_number(g));
}
BENCHMARK(BM_ChromaticNumber);

void BM_CriticalityGrotzsch(benchmark::State& state) {
    const Graph g = mycielski(cycle(5));
    for (auto _ : state) benchmark::DoNotOptimize(is_k_vertex_critical(g, 4));
}
BENCHMARK(BM_CriticalityGrotzsch);

void BM_BuiltinSuite(benchmark::State& state) {
    const auto corpus = builtin_corpus();
    SuiteConfig config;
    config.jobs = static_cast<int>(state.range(0));
    config.timings = false;
    for (auto _ : state) benchmark::DoNotOptimize(run_suite(corpus, config));
}
BENCHMARK(BM_BuiltinSuite)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
