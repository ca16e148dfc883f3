#include <benchmark/benchmark.h>

#include "isogsum/charsums.hpp"
#include "isogsum/classnumber.hpp"
#include "isogsum/cm.hpp"
#include "isogsum/curves.hpp"

using namespace isogsum;

namespace {

std::int64_t prime_near(std::int64_t n)
{
    while (!is_prime(static_cast<std::uint64_t>(n)))
        ++n;
    return n;
}

void BM_EnumeratePoints(benchmark::State & state)
{
    prime const p(prime_near(state.range(0)));
    cubic_curve const E(field_element(2, p), field_element(-2, p), field_element(-4, p));
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_points(E));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EnumeratePoints)->RangeMultiplier(4)->Range(1 << 8, 1 << 16)->Complexity();

void BM_STau(benchmark::State & state)
{
    prime const p(prime_near(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(s_tau(3, -1, p));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_STau)->RangeMultiplier(4)->Range(1 << 8, 1 << 16)->Complexity();

void BM_ClassNumber(benchmark::State & state)
{
    prime const p(prime_near(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(class_number(p));
}
BENCHMARK(BM_ClassNumber)->RangeMultiplier(16)->Range(1 << 8, 1 << 20);

void BM_CmWeightedSum(benchmark::State & state)
{
    std::int64_t n = state.range(0);
    while (!is_prime(static_cast<std::uint64_t>(n)) || !cm_split(cm_case::minus7, prime(n)))
        ++n;
    prime const p(n);
    for (auto _ : state)
        benchmark::DoNotOptimize(cm_weighted_sum(cm_case::minus7, p));
}
BENCHMARK(BM_CmWeightedSum)->RangeMultiplier(4)->Range(1 << 8, 1 << 14);

} // namespace

BENCHMARK_MAIN();
