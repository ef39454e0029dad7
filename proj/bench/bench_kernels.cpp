#include "hermarc/kernels.hpp"

#include <benchmark/benchmark.h>

using namespace hermarc;

namespace {

struct Fixture {
    gf::Field field;
    geometry::Plane plane;
    geometry::Arc arc;

    Fixture(std::uint32_t p, std::uint32_t n, std::uint32_t l)
        : field(gf::make_tower(p, n, l)), plane(field), arc(geometry::build_arc(plane))
    {
    }
};

Fixture& pg64()
{
    static Fixture fx(2, 1, 6);
    return fx;
}

void census_serial(benchmark::State& state)
{
    auto& fx = pg64();
    for (auto _ : state)
        benchmark::DoNotOptimize(kernels::serial::line_counts(fx.plane, fx.arc.points));
}

void census_parallel(benchmark::State& state)
{
    auto& fx = pg64();
    for (auto _ : state)
        benchmark::DoNotOptimize(kernels::parallel::line_counts(fx.plane, fx.arc.points, state.range(0)));
}

void completeness_serial(benchmark::State& state)
{
    auto& fx = pg64();
    const auto counts = kernels::serial::line_counts(fx.plane, fx.arc.points);
    for (auto _ : state)
        benchmark::DoNotOptimize(kernels::serial::completeness(fx.plane, fx.arc.member, counts, fx.arc.claimed_d));
}

void completeness_parallel(benchmark::State& state)
{
    auto& fx = pg64();
    const auto counts = kernels::serial::line_counts(fx.plane, fx.arc.points);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            kernels::parallel::completeness(fx.plane, fx.arc.member, counts, fx.arc.claimed_d, state.range(0)));
}

void sweep_serial(benchmark::State& state)
{
    const gf::Field f(gf::make_tower(3, 1, 3));
    const auto triples = kernels::sample_triples(f, 2000, 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(kernels::serial::sweep(f, 2, triples));
}

void sweep_parallel(benchmark::State& state)
{
    const gf::Field f(gf::make_tower(3, 1, 3));
    const auto triples = kernels::sample_triples(f, 2000, 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(kernels::parallel::sweep(f, 2, triples, state.range(0)));
}

} // namespace

BENCHMARK(census_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(census_parallel)->RangeMultiplier(2)->Range(1, 8)->UseRealTime()->Unit(benchmark::kMillisecond);
BENCHMARK(completeness_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(completeness_parallel)->RangeMultiplier(2)->Range(1, 8)->UseRealTime()->Unit(benchmark::kMillisecond);
BENCHMARK(sweep_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(sweep_parallel)->RangeMultiplier(2)->Range(1, 8)->UseRealTime()->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
