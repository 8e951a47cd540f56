// Serial reference kernels against their OpenMP versions.

#include <fodef/constructors.hh>
#include <fodef/corpus.hh>
#include <fodef/extension.hh>
#include <fodef/patterns.hh>
#include <fodef/pebble.hh>

#include <benchmark/benchmark.h>

using namespace fodef;

namespace
{
    auto execution(const benchmark::State & state) -> Execution
    {
        return state.range(0) == 0 ? Execution::Serial : Execution::Parallel;
    }

    auto label(benchmark::State & state) -> void
    {
        state.SetLabel(state.range(0) == 0 ? "serial" : "parallel");
    }

    auto bm_scan(benchmark::State & state) -> void
    {
        auto p4 = path(4);
        for (auto _ : state) {
            auto r = scan_labeled(0, 6, [&](const Graph & g) { return is_cograph(g) != contains_induced(g, p4).has_value(); }, execution(state));
            benchmark::DoNotOptimize(r.failures);
        }
        label(state);
    }

    auto bm_check_ea(benchmark::State & state) -> void
    {
        auto g = gnp(96, 0.5, 3);
        for (auto _ : state)
            benchmark::DoNotOptimize(check_ea(g, 4, execution(state)).holds);
        label(state);
    }

    auto bm_dk(benchmark::State & state) -> void
    {
        auto g = rook(4), h = hypercube(4);
        DkOptions options;
        options.execution = execution(state);
        for (auto _ : state)
            benchmark::DoNotOptimize(dk_solve(g, h, 3, options).positions_explored);
        label(state);
    }

    auto bm_ea_rate(benchmark::State & state) -> void
    {
        for (auto _ : state)
            benchmark::DoNotOptimize(empirical_ea_rate(48, 3, 40, 12345, execution(state)));
        label(state);
    }
}

BENCHMARK(bm_scan)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_check_ea)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_dk)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_ea_rate)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
