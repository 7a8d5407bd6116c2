#include "thurston/critvals.hpp"
#include "thurston/kernels.hpp"
#include "thurston/table.hpp"

#include <benchmark/benchmark.h>

using namespace thurston;

namespace {

// Critical points of a degree-(r+1) map with simple critical points, spread over [0, 1].
RealVector spread_points(int r, const PrecisionContext& ctx) {
    RealVector pts;
    for (int i = 0; i < r; ++i) pts.push_back(ctx.ratio(2 * i + 1, 2 * r));
    return pts;
}

Polynomial cubic(const PrecisionContext& ctx) {
    return Polynomial(RealVector{ctx.zero(), ctx.make(6L), ctx.make(-15L), ctx.make(10L)});
}

void partials(benchmark::State& state, bool parallel) {
    const PrecisionContext ctx(static_cast<int>(state.range(1)));
    const int r = static_cast<int>(state.range(0));
    const RealVector pts = spread_points(r, ctx);
    const std::vector<int> k(static_cast<std::size_t>(r), 1);
    for (auto _ : state) {
        auto out = parallel ? kernels::critical_point_partials_parallel(pts, k, ctx)
                            : kernels::critical_point_partials_serial(pts, k, ctx);
        benchmark::DoNotOptimize(out);
    }
}

void lap_solve(benchmark::State& state, bool parallel) {
    const PrecisionContext ctx(static_cast<int>(state.range(1)));
    const Polynomial p = cubic(ctx);
    const Real c1 = (ctx.make(5L) - sqrt(ctx.make(5L))) / 10;
    const Real c2 = (ctx.make(5L) + sqrt(ctx.make(5L))) / 10;
    std::vector<kernels::LapSolveTask> tasks;
    const long count = state.range(0);
    for (long i = 0; i < count; ++i) {
        const Real t = ctx.ratio(i, count);
        tasks.push_back({p(c2) + (p(c1) - p(c2)) * t, c1, c2, -1});
    }
    for (auto _ : state) {
        auto out = parallel ? kernels::lap_solve_parallel(p, tasks, ctx) : kernels::lap_solve_serial(p, tasks, ctx);
        benchmark::DoNotOptimize(out);
    }
}

void sampling(benchmark::State& state, bool parallel) {
    const PrecisionContext ctx(100);
    const Polynomial p = cubic(ctx);
    RealVector xs;
    const long count = state.range(0);
    for (long i = 0; i < count; ++i) xs.push_back(ctx.ratio(i, count - 1));
    for (auto _ : state) {
        auto out = parallel ? kernels::sample_parallel(p, xs) : kernels::sample_serial(p, xs);
        benchmark::DoNotOptimize(out);
    }
}

void reference_table(benchmark::State& state, bool parallel) {
    const auto& rows = table::reference_rows();
    const table::TableOptions opts;
    for (auto _ : state) {
        auto out = parallel ? table::run_table_parallel(rows, opts) : table::run_table_serial(rows, opts);
        benchmark::DoNotOptimize(out);
    }
}

void partial_args(benchmark::internal::Benchmark* b) {
    for (int r : {4, 8, 16}) b->Args({r, 40})->Args({r, 200});
}

void solve_args(benchmark::internal::Benchmark* b) {
    for (int n : {8, 64}) b->Args({n, 40})->Args({n, 200});
}

}  // namespace

BENCHMARK_CAPTURE(partials, serial, false)->Apply(partial_args);
BENCHMARK_CAPTURE(partials, parallel, true)->Apply(partial_args)->UseRealTime();
BENCHMARK_CAPTURE(lap_solve, serial, false)->Apply(solve_args);
BENCHMARK_CAPTURE(lap_solve, parallel, true)->Apply(solve_args)->UseRealTime();
BENCHMARK_CAPTURE(sampling, serial, false)->Arg(1000)->Arg(100000);
BENCHMARK_CAPTURE(sampling, parallel, true)->Arg(1000)->Arg(100000)->UseRealTime();
BENCHMARK_CAPTURE(reference_table, serial, false)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(reference_table, parallel, true)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
