#include <benchmark/benchmark.h>

#include <random>

#include "tdg/oracle.hpp"
#include "tdg/realization.hpp"
#include "tdg/threshold.hpp"

using namespace tdg;

namespace {

Digraph random_digraph(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    Digraph::Builder b(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && (rng() & 1)) b.set_arc(i, j);
    return std::move(b).build();
}

Digraph random_beta_digraph(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::size_t> beta(n);
    for (auto& v : beta) v = rng() % n;
    return construct_from_beta(BetaSequence(beta));
}

}  // namespace

static void BM_CheckFulkersonChen(benchmark::State& state) {
    const std::size_t n = state.range(0);
    const auto s = positive_lex_sort(degree_sequence_of(random_digraph(n, 1))).first;
    for (auto _ : state) benchmark::DoNotOptimize(check_fulkerson_chen(s));
}
BENCHMARK(BM_CheckFulkersonChen)->Arg(50)->Arg(200)->Arg(1000);

static void BM_Realize(benchmark::State& state) {
    const std::size_t n = state.range(0);
    const auto s = positive_lex_sort(degree_sequence_of(random_digraph(n, 2))).first;
    for (auto _ : state) benchmark::DoNotOptimize(realize(s));
}
BENCHMARK(BM_Realize)->Arg(50)->Arg(200)->Arg(500);

static void BM_IsThreshold(benchmark::State& state) {
    const std::size_t n = state.range(0);
    const Digraph g = random_beta_digraph(n, 3);
    for (auto _ : state) benchmark::DoNotOptimize(is_threshold(g));
}
BENCHMARK(BM_IsThreshold)->Arg(50)->Arg(200)->Arg(1000);

static void BM_FindForbiddenConfiguration(benchmark::State& state) {
    const std::size_t n = state.range(0);
    // threshold input forces the full O(n^4) sweep
    const Digraph g = random_beta_digraph(n, 4);
    for (auto _ : state) benchmark::DoNotOptimize(find_forbidden_configuration(g));
}
BENCHMARK(BM_FindForbiddenConfiguration)->Arg(10)->Arg(30)->Arg(60);

static void BM_CensusThreshold(benchmark::State& state) {
    const std::size_t n = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(oracle::census_threshold(n));
}
BENCHMARK(BM_CensusThreshold)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_VerifyEquivalence(benchmark::State& state) {
    const std::size_t n = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(oracle::verify_equivalence(n));
}
BENCHMARK(BM_VerifyEquivalence)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
