// Serial reference kernels against their OpenMP counterparts.
//
//   bench_kernels --benchmark_filter=Mod

#include <benchmark/benchmark.h>

#include <random>

#include "qgrowth/growth.hpp"
#include "qgrowth/kernels.hpp"

using namespace qgrowth;
namespace k = qgrowth::kernels;

namespace {

std::vector<k::residue> residues(std::size_t len, k::residue m, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<k::residue> value(0, m - 1);
    std::vector<k::residue> out(len);
    for (auto& x : out)
        x = value(rng);
    return out;
}

std::vector<Integer> integers(std::size_t len, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::vector<Integer> out(len);
    for (auto& x : out) {
        x = Integer(static_cast<unsigned long>(rng()));
        x *= Integer(static_cast<unsigned long>(rng()));
    }
    return out;
}

void BM_ConvolveModSerial(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto a = residues(n, 49, 1), b = residues(n, 49, 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(k::serial::convolve_mod(a, b, 49, n));
    state.SetComplexityN(state.range(0));
}

void BM_ConvolveModParallel(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto a = residues(n, 49, 1), b = residues(n, 49, 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(k::convolve_mod(a, b, 49, n));
    state.SetComplexityN(state.range(0));
}

void BM_SquareModParallel(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto a = residues(n, 49, 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(k::square_mod(a, 49, n));
}

void BM_ConvolveIntegerSerial(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto a = integers(n, 4), b = integers(n, 5);
    for (auto _ : state)
        benchmark::DoNotOptimize(k::serial::convolve(a, b, n));
}

void BM_ConvolveIntegerParallel(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto a = integers(n, 4), b = integers(n, 5);
    for (auto _ : state)
        benchmark::DoNotOptimize(k::convolve(a, b, n));
}

void BM_WreathSeriesMod5(benchmark::State& state)
{
    const auto ring = CoefficientRing::residues(Integer(5));
    for (auto _ : state)
        benchmark::DoNotOptimize(wreath_alt_series(1, state.range(0), ring));
}

} // namespace

BENCHMARK(BM_ConvolveModSerial)->RangeMultiplier(4)->Range(256, 16384)->Complexity(benchmark::oNSquared);
BENCHMARK(BM_ConvolveModParallel)->RangeMultiplier(4)->Range(256, 16384)->Complexity(benchmark::oNSquared);
BENCHMARK(BM_SquareModParallel)->RangeMultiplier(4)->Range(256, 16384);
BENCHMARK(BM_ConvolveIntegerSerial)->RangeMultiplier(4)->Range(64, 1024);
BENCHMARK(BM_ConvolveIntegerParallel)->RangeMultiplier(4)->Range(64, 1024);
BENCHMARK(BM_WreathSeriesMod5)->Arg(5000)->Arg(50000);

BENCHMARK_MAIN();
