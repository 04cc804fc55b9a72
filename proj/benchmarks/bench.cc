#include <warmthkit/chromatic.hh>
#include <warmthkit/generators.hh>
#include <warmthkit/hom_complex.hh>
#include <warmthkit/homology.hh>
#include <warmthkit/warmth.hh>

#include <benchmark/benchmark.h>

using namespace warmthkit;

static void exact_warmth_random(benchmark::State & state)
{
    auto g = erdos_renyi(static_cast<int>(state.range(0)), 0.5, 7);
    for (auto _ : state)
        benchmark::DoNotOptimize(warmth(g));
}
BENCHMARK(exact_warmth_random)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

static void exact_warmth_grotzsch(benchmark::State & state)
{
    auto g = mycielski(cycle(5));
    WarmthOptions o;
    o.fold = false;
    for (auto _ : state)
        benchmark::DoNotOptimize(warmth(g, o));
}
BENCHMARK(exact_warmth_grotzsch)->Unit(benchmark::kMillisecond);

static void hom_complex_build(benchmark::State & state)
{
    auto g = complete(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(build_hom_k2(g));
}
BENCHMARK(hom_complex_build)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

static void hom_complex_homology(benchmark::State & state)
{
    auto g = complete(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(hom_homology(g));
}
BENCHMARK(hom_complex_homology)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

static void chromatic_kneser(benchmark::State & state)
{
    auto g = kneser(static_cast<int>(state.range(0)), 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(chromatic_number(g));
}
BENCHMARK(chromatic_kneser)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
