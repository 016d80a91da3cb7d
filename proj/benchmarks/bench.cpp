#include <benchmark/benchmark.h>

#include "ecl/coloring.hpp"
#include "ecl/gen.hpp"
#include "ecl/maximal.hpp"
#include "ecl/tuza.hpp"

using namespace ecl;

static void BM_DecideColorable(benchmark::State& state) {
    Multigraph g = random_multigraph(1, static_cast<int>(state.range(0)), 2, 0.5);
    int k = g.d_mu_max() - 1;
    for (auto _ : state) benchmark::DoNotOptimize(is_k_colorable(g, std::max(1, k)));
}
BENCHMARK(BM_DecideColorable)->Arg(6)->Arg(8)->Arg(10);

static void BM_MaximalSubgraph(benchmark::State& state) {
    Multigraph g = random_multigraph(2, static_cast<int>(state.range(0)), 2, 0.5);
    for (auto _ : state) benchmark::DoNotOptimize(maximal_colorable_subgraph(g, 3));
}
BENCHMARK(BM_MaximalSubgraph)->Arg(6)->Arg(8);

static void BM_PhiK(benchmark::State& state) {
    Multigraph g = random_multigraph(3, static_cast<int>(state.range(0)), 1, 0.5);
    for (auto _ : state) benchmark::DoNotOptimize(phi_k(g, 2));
}
BENCHMARK(BM_PhiK)->Arg(10)->Arg(14)->Arg(18);

static void BM_AlphaPrime(benchmark::State& state) {
    Multigraph g = random_multigraph(4, static_cast<int>(state.range(0)), 1, 0.4);
    for (auto _ : state) benchmark::DoNotOptimize(alpha_prime_k(g, 2));
}
BENCHMARK(BM_AlphaPrime)->Arg(7)->Arg(9);

static void BM_TauNuJoin(benchmark::State& state) {
    Multigraph c5(5, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 4, 1}, {0, 4, 1}});
    TuzaInstance inst = make_tuza_instance(static_cast<int>(state.range(0)), c5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(tau_nu_join(inst));
        benchmark::DoNotOptimize(tau_exact(inst.g));
    }
}
BENCHMARK(BM_TauNuJoin)->Arg(1)->Arg(2);

BENCHMARK_MAIN();
