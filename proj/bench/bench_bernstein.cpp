#include "berncert/hankel.hpp"

#include <benchmark/benchmark.h>

using namespace berncert;

namespace {

const MultiPoly& objective() {
    static const MultiPoly p = build_bound_polys(false).Rtilde;
    return p;
}

void bench_to_bernstein(benchmark::State& state, ExecMode mode) {
    const MultiPoly& p = objective();
    const Box cube = Box::unit_cube(3);
    // Elevated degrees make the tensor large enough for the split to matter.
    const std::vector<int> degrees{10, 8, 6};
    for (auto _ : state) {
        BernsteinTensor t = to_bernstein_with(p, degrees, cube, mode);
        benchmark::DoNotOptimize(t.beta.data());
    }
}

void bench_subdivide(benchmark::State& state, ExecMode mode) {
    const MultiPoly& p = objective();
    const Box cube = Box::unit_cube(3);
    const std::vector<int> splits{8, 8, 4};
    for (auto _ : state) {
        auto cells = subdivide_with(p, cube, splits, mode);
        benchmark::DoNotOptimize(cells.data());
    }
}

}  // namespace

BENCHMARK_CAPTURE(bench_to_bernstein, serial, ExecMode::Serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bench_to_bernstein, parallel, ExecMode::Parallel)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bench_subdivide, serial, ExecMode::Serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bench_subdivide, parallel, ExecMode::Parallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
