#include <benchmark/benchmark.h>

#include "tricert/triangulation.hpp"

static void BM_BuildFreeSimplex(benchmark::State& state) {
    for (auto _ : state) {
        tricert::Triangulation tri = tricert::Triangulation::build(tricert::GluingTable(1));
        benchmark::DoNotOptimize(tri);
    }
}
BENCHMARK(BM_BuildFreeSimplex);

BENCHMARK_MAIN();
