// Kernel benchmarks: the OpenMP column kernels against their serial
// references, plus the three exact algorithms side by side.
//
// Build with -DCMAKE_BUILD_TYPE=Release and run:
//   ./build/bench/bench_kernels --benchmark_min_time=0.2

#include <benchmark/benchmark.h>

#include "frechet/curve_classes.hpp"
#include "frechet/freespace.hpp"
#include "frechet/generators.hpp"
#include "frechet/oracle.hpp"
#include "frechet/output_sensitive.hpp"

namespace {

using namespace frechet;

std::pair<Curve, Curve> backbone_pair(std::size_t n) {
    return {generate_backbone(n, 0.5, 2.0, 17, 2), generate_backbone(n, 0.5, 2.0, 18, 2)};
}

double interesting_delta(const Curve& a, const Curve& b) {
    // Around the distance of the middle vertices; keeps a mixed diagram.
    return dist(a[a.size() / 2], b[b.size() / 2], Norm::L2);
}

void BM_BuildWhiteCells_Serial(benchmark::State& state) {
    const auto [a, b] = backbone_pair(static_cast<std::size_t>(state.range(0)));
    const double delta = interesting_delta(a, b);
    for (auto _ : state)
        benchmark::DoNotOptimize(serial::build_white_cells(a, b, delta, Norm::L2));
}
BENCHMARK(BM_BuildWhiteCells_Serial)->Arg(256)->Arg(1024)->Arg(4096);

void BM_BuildWhiteCells_Parallel(benchmark::State& state) {
    const auto [a, b] = backbone_pair(static_cast<std::size_t>(state.range(0)));
    const double delta = interesting_delta(a, b);
    for (auto _ : state) benchmark::DoNotOptimize(build_white_cells(a, b, delta, Norm::L2));
}
BENCHMARK(BM_BuildWhiteCells_Parallel)->Arg(256)->Arg(1024)->Arg(4096);

void BM_SwitchingCells_Serial(benchmark::State& state) {
    const auto [a, b] = backbone_pair(static_cast<std::size_t>(state.range(0)));
    const double delta = interesting_delta(a, b);
    for (auto _ : state)
        benchmark::DoNotOptimize(serial::compute_switching_cells(a, b, delta, Norm::L2));
}
BENCHMARK(BM_SwitchingCells_Serial)->Arg(256)->Arg(1024)->Arg(4096);

void BM_SwitchingCells_Parallel(benchmark::State& state) {
    const auto [a, b] = backbone_pair(static_cast<std::size_t>(state.range(0)));
    const double delta = interesting_delta(a, b);
    for (auto _ : state)
        benchmark::DoNotOptimize(compute_switching_cells(a, b, delta, Norm::L2));
}
BENCHMARK(BM_SwitchingCells_Parallel)->Arg(256)->Arg(1024)->Arg(4096);

void BM_FuzzyDecide_Serial(benchmark::State& state) {
    const auto [a, b] = backbone_pair(static_cast<std::size_t>(state.range(0)));
    const double delta = std::max(1.0, interesting_delta(a, b));
    for (auto _ : state)
        benchmark::DoNotOptimize(serial::fuzzy_decide_simplified(a, b, delta, 0.25, 0.5, Norm::L2));
}
BENCHMARK(BM_FuzzyDecide_Serial)->Arg(1024)->Arg(4096)->Arg(16384);

void BM_FuzzyDecide_Parallel(benchmark::State& state) {
    const auto [a, b] = backbone_pair(static_cast<std::size_t>(state.range(0)));
    const double delta = std::max(1.0, interesting_delta(a, b));
    for (auto _ : state)
        benchmark::DoNotOptimize(fuzzy_decide_simplified(a, b, delta, 0.25, 0.5, Norm::L2));
}
BENCHMARK(BM_FuzzyDecide_Parallel)->Arg(1024)->Arg(4096)->Arg(16384);

void BM_ExactDp(benchmark::State& state) {
    const auto [a, b] = backbone_pair(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(dfd_dp(a, b, Norm::L2).value);
}
BENCHMARK(BM_ExactDp)->Arg(256)->Arg(1024);

void BM_ExactBinarySearch(benchmark::State& state) {
    const auto [a, b] = backbone_pair(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(dfd_binary_search(a, b, Norm::L2));
}
BENCHMARK(BM_ExactBinarySearch)->Arg(256)->Arg(1024);

void BM_ExactOutputSensitive(benchmark::State& state) {
    const auto [a, b] = backbone_pair(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(dfd_output_sensitive(a, b, Norm::L2).value);
}
BENCHMARK(BM_ExactOutputSensitive)->Arg(256)->Arg(1024);

}  // namespace

BENCHMARK_MAIN();
