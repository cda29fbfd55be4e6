#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "dimgrid/bounds.hpp"
#include "dimgrid/datagen.hpp"
#include "dimgrid/estimators.hpp"
#include "dimgrid/gridding.hpp"
#include "dimgrid/neighborhood.hpp"

using namespace dimgrid;

namespace {

PointCloud uniform_cloud(std::size_t n, std::size_t dim) {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> c(n * dim);
    for (auto& v : c) v = u(rng);
    return PointCloud(std::move(c), dim);
}

// Args: points, dimension.
void neighbor_engine(benchmark::State& state, CountingEngine engine) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto dim = static_cast<std::size_t>(state.range(1));
    const PointCloud cloud = uniform_cloud(n, dim);
    const GriddedCloud grid = snap_to_grid(cloud, find_spacing(cloud, 45.0, 55.0).spacing);
    for (auto _ : state) benchmark::DoNotOptimize(count_neighbors(grid, engine));
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * grid.size()));
}

void BM_HashEngine(benchmark::State& state) { neighbor_engine(state, CountingEngine::Hash); }
void BM_PairwiseEngine(benchmark::State& state) { neighbor_engine(state, CountingEngine::Pairwise); }

void BM_FindSpacing(benchmark::State& state) {
    const PointCloud cloud = uniform_cloud(static_cast<std::size_t>(state.range(0)), 3);
    for (auto _ : state) benchmark::DoNotOptimize(find_spacing(cloud, 45.0, 55.0));
}

void BM_LmuTable(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(lmu_table(static_cast<int>(state.range(0))));
}

void BM_DcfSphere(benchmark::State& state) {
    const PointCloud cloud = datagen::hypersphere(2, static_cast<std::size_t>(state.range(0)), 0.01, 3);
    for (auto _ : state) benchmark::DoNotOptimize(dcf_estimate(cloud));
}

}  // namespace

BENCHMARK(BM_HashEngine)->Args({1000, 2})->Args({10000, 3})->Args({10000, 8})->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_PairwiseEngine)->Args({1000, 2})->Args({10000, 3})->Args({10000, 8})->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_FindSpacing)->Arg(1000)->Arg(20000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LmuTable)->Arg(4)->Arg(12)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_DcfSphere)->Arg(2000)->Arg(20000)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
