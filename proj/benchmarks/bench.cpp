#include <benchmark/benchmark.h>

#include "distcrit/aut.hpp"
#include "distcrit/criticality.hpp"
#include "distcrit/distinguishing.hpp"
#include "distcrit/enumerate.hpp"

using namespace distcrit;

namespace {

Graph petersen() {
    return build_graph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                            {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5},
                            {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}});
}

void BM_CanonicalForm(benchmark::State& state) {
    const Graph g = petersen();
    for (auto _ : state) benchmark::DoNotOptimize(canonical_certificate(g));
}
BENCHMARK(BM_CanonicalForm);

void BM_AutomorphismGroup(benchmark::State& state) {
    const Graph g = petersen();
    for (auto _ : state) benchmark::DoNotOptimize(automorphism_group(g).order);
}
BENCHMARK(BM_AutomorphismGroup);

void BM_DistinguishingNumber(benchmark::State& state) {
    const Graph g = cycle_graph(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(distinguishing_number(g).value);
}
BENCHMARK(BM_DistinguishingNumber)->Arg(6)->Arg(12)->Arg(24);

void BM_DisjointCopiesFormula(benchmark::State& state) {
    const Graph h = complete_graph(4);
    for (auto _ : state)
        benchmark::DoNotOptimize(disjoint_copies_distinguishing_number(h, 4));
}
BENCHMARK(BM_DisjointCopiesFormula);

void BM_Enumerate(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        std::size_t count = 0;
        enumerate_graphs(n, {}, [&](const Graph&) { ++count; });
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_Enumerate)->Arg(5)->Arg(6)->Arg(7);

void BM_IsCritical(benchmark::State& state) {
    const Graph g = disjoint_copies_graph(2, complete_graph(4));
    for (auto _ : state) {
        DCache cache;
        benchmark::DoNotOptimize(is_critical(g, &cache).is_critical);
    }
}
BENCHMARK(BM_IsCritical);

}  // namespace

BENCHMARK_MAIN();
