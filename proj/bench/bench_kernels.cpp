// Serial reference vs OpenMP kernel on the same inputs.

#include <benchmark/benchmark.h>

#include "cfree/budget.hpp"
#include "cfree/hypergen.hpp"
#include "cfree/kernels/coloring_scan.hpp"
#include "cfree/kernels/cycle_search.hpp"
#include "cfree/kernels/max_cut.hpp"

using namespace cfree;
namespace k = cfree::kernels;

namespace {

const Graph& cycle_input() {
    static const Graph g = high_girth_bipartite(60, 10, 2, 5).graph();
    return g;
}

template <bool Parallel>
void BM_has_cycle(benchmark::State& state) {
    const Graph& g = cycle_input();
    const int len = static_cast<int>(state.range(0));
    for (auto _ : state) {
        BudgetMeter meter(SearchBudget{});
        bool r = Parallel ? k::parallel::has_cycle(g, len, meter) : k::serial::has_cycle(g, len, meter);
        benchmark::DoNotOptimize(r);
    }
}

template <bool Parallel>
void BM_enumerate_cycles(benchmark::State& state) {
    const Graph& g = cycle_input();
    for (auto _ : state) {
        BudgetMeter meter(SearchBudget{});
        auto r = Parallel ? k::parallel::enumerate_cycles(g, 10, meter, 10'000'000)
                          : k::serial::enumerate_cycles(g, 10, meter, 10'000'000);
        benchmark::DoNotOptimize(r.size());
    }
}

k::ScanProblem scan_input(int n) {
    GenConfig c;
    c.a = 3;
    c.n = n;
    c.m = 60;
    c.seed = 11;
    auto h = random_hypergraph(c);
    return k::make_problem(n, 2, 3, k::KeyKind::multiset, h.hyperedges());
}

template <bool Parallel>
void BM_coloring_best(benchmark::State& state) {
    auto p = scan_input(static_cast<int>(state.range(0)));
    std::vector<char> member(p.key_space, 1);
    member[3] = member[12] = 0;  // monochromatic keys for a = 3, b = 2
    for (auto _ : state) {
        auto r = Parallel ? k::parallel::best(p, member) : k::serial::best(p, member);
        benchmark::DoNotOptimize(r.q);
    }
}

template <bool Parallel>
void BM_worst_deviation(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    auto p = scan_input(n);
    std::vector<std::uint32_t> slots{3, 6, 9, 12};
    k::DeviationTable t(p, slots, [&](const std::vector<int>& census, std::size_t s) {
        return 60.0 * census[0] * census[1] / (double(n) * n) * double(s + 1) / 4.0;
    });
    for (auto _ : state) {
        auto r = Parallel ? k::parallel::worst_deviation(p, t) : k::serial::worst_deviation(p, t);
        benchmark::DoNotOptimize(r.deviation);
    }
}

template <bool Parallel>
void BM_max_cut(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    SplitMix64 rng(3);
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.unit() < 0.4) {
                adj[u] |= 1ULL << v;
                adj[v] |= 1ULL << u;
            }
    for (auto _ : state) {
        BudgetMeter meter(SearchBudget{1ULL << 40, 0.0});
        auto r = Parallel ? k::parallel::max_cut(adj, meter) : k::serial::max_cut(adj, meter);
        benchmark::DoNotOptimize(r.size);
    }
}

} // namespace

BENCHMARK(BM_has_cycle<false>)->Name("has_cycle/serial")->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_has_cycle<true>)->Name("has_cycle/parallel")->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_enumerate_cycles<false>)->Name("enumerate_cycles/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_enumerate_cycles<true>)->Name("enumerate_cycles/parallel")->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_coloring_best<false>)->Name("coloring_best/serial")->Arg(14)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_coloring_best<true>)->Name("coloring_best/parallel")->Arg(14)->Arg(16)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_worst_deviation<false>)->Name("worst_deviation/serial")->Arg(14)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_worst_deviation<true>)->Name("worst_deviation/parallel")->Arg(14)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_max_cut<false>)->Name("max_cut/serial")->Arg(20)->Arg(24)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_max_cut<true>)->Name("max_cut/parallel")->Arg(20)->Arg(24)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
