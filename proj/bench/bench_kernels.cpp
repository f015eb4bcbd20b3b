// OpenMP kernels against their serial reference implementations.

#include "indec/blowup.hpp"
#include "indec/oracle.hpp"

#include <benchmark/benchmark.h>

using namespace indec;

namespace {

Pattern pattern_arg(const benchmark::State& state)
{
    switch (state.range(0)) {
    case 0:
        return Pattern({2, 2, 2});
    case 1:
        return Pattern({2, 3, 3});
    default:
        return Pattern({3, 3, 3});
    }
}

void BM_BlowupParallel(benchmark::State& state)
{
    const auto ctx = make_context(pattern_arg(state));
    for (auto _ : state)
        benchmark::DoNotOptimize(blowup_decompose(ctx));
}

void BM_BlowupSerial(benchmark::State& state)
{
    const auto ctx = make_context(pattern_arg(state));
    for (auto _ : state)
        benchmark::DoNotOptimize(reference::blowup_decompose(ctx));
}

void BM_VerifyParallel(benchmark::State& state)
{
    const auto ctx = make_context(pattern_arg(state));
    const auto d = blowup_decompose(ctx);
    const auto g = d.host.to_graph();
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_decomposition(g, d.pattern, d.copies, true));
}

void BM_VerifySerial(benchmark::State& state)
{
    const auto ctx = make_context(pattern_arg(state));
    const auto d = blowup_decompose(ctx);
    const auto g = d.host.to_graph();
    for (auto _ : state)
        benchmark::DoNotOptimize(reference::verify_decomposition(g, d.pattern, d.copies, true));
}

void BM_CexParallel(benchmark::State& state)
{
    const Pattern pattern({2, 3});
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(cex_exact(n, pattern));
}

void BM_CexSerial(benchmark::State& state)
{
    const Pattern pattern({2, 3});
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(reference::cex_exact(n, pattern));
}

} // namespace

BENCHMARK(BM_BlowupParallel)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BlowupSerial)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyParallel)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifySerial)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CexParallel)->DenseRange(6, 8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CexSerial)->DenseRange(6, 8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
