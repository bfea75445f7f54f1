// Parallel kernels against their serial references.

#include <regramsey/colorings.hpp>
#include <regramsey/search.hpp>

#include <benchmark/benchmark.h>

using namespace regramsey;

namespace {
    auto threads(const benchmark::State & state) -> SearchBudget
    {
        SearchBudget b;
        b.parallelism = static_cast<unsigned>(state.range(1));
        return b;
    }

    auto random_table(Nat size) -> ColoringPtr { return TableColoring::random({0, size}, 3, 17); }

    void min_hom_engine(benchmark::State & state)
    {
        auto c = random_table(static_cast<Nat>(state.range(0)));
        for (auto _ : state)
            benchmark::DoNotOptimize(largest_min_homogeneous(*c, c->domain(), threads(state)).size);
    }

    void min_hom_reference(benchmark::State & state)
    {
        auto c = random_table(static_cast<Nat>(state.range(0)));
        for (auto _ : state)
            benchmark::DoNotOptimize(largest_min_homogeneous_reference(*c, c->domain()).size);
    }

    void hom_engine(benchmark::State & state)
    {
        auto c = base_s_coloring(2, static_cast<Nat>(state.range(0)));
        for (auto _ : state)
            benchmark::DoNotOptimize(largest_homogeneous(*c, c->domain(), threads(state)).size);
    }

    void hom_reference(benchmark::State & state)
    {
        auto c = base_s_coloring(2, static_cast<Nat>(state.range(0)));
        for (auto _ : state)
            benchmark::DoNotOptimize(largest_homogeneous_reference(*c, c->domain()).size);
    }

    void base10_engine(benchmark::State & state)
    {
        auto c = base10_coloring();
        Interval d{43, static_cast<Nat>(state.range(0))};
        for (auto _ : state)
            benchmark::DoNotOptimize(largest_min_homogeneous(*c, d, threads(state)).size);
    }

    void base10_reference(benchmark::State & state)
    {
        auto c = base10_coloring();
        Interval d{43, static_cast<Nat>(state.range(0))};
        for (auto _ : state)
            benchmark::DoNotOptimize(largest_min_homogeneous_reference(*c, d).size);
    }

    void regressive_parallel(benchmark::State & state)
    {
        auto c = base10_coloring();
        auto g = BoundFn::constant(1000);
        for (auto _ : state)
            benchmark::DoNotOptimize(verify_regressive(*c, g).pairs_checked);
    }

    void regressive_serial(benchmark::State & state)
    {
        auto c = base10_coloring();
        auto g = BoundFn::constant(1000);
        for (auto _ : state)
            benchmark::DoNotOptimize(verify_regressive_serial(*c, g).pairs_checked);
    }
}

BENCHMARK(min_hom_engine)->ArgsProduct({{60, 120}, {1, 0}})->Unit(benchmark::kMillisecond);
BENCHMARK(min_hom_reference)->Arg(60)->Arg(120)->Unit(benchmark::kMillisecond);
BENCHMARK(hom_engine)->ArgsProduct({{500, 2000}, {1, 0}})->Unit(benchmark::kMillisecond);
BENCHMARK(hom_reference)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(base10_engine)->ArgsProduct({{400, 1200}, {1, 0}})->Unit(benchmark::kMillisecond);
BENCHMARK(base10_reference)->Arg(400)->Arg(1200)->Unit(benchmark::kMillisecond);
BENCHMARK(regressive_parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(regressive_serial)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
