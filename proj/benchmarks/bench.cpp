#include <lattice_forge/congruence.hpp>
#include <lattice_forge/construct.hpp>
#include <lattice_forge/dependency.hpp>
#include <lattice_forge/enumerate.hpp>

#include <benchmark/benchmark.h>

using namespace lattice_forge;

namespace {

// Optimal realizations of chains: every element but the top doubles, so
// the lattice grows steadily with n.
auto chain_realization(std::size_t n) -> FiniteLattice { return construct_optimal(chain(n)).lattice; }

auto bm_join_dependency(benchmark::State& state)
{
    auto l = chain_realization(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(join_dependency(l));
    state.counters["elements"] = static_cast<double>(l.size());
}

auto bm_congruence_lattice(benchmark::State& state)
{
    auto l = chain_realization(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(congruence_lattice(l));
    state.counters["elements"] = static_cast<double>(l.size());
}

auto bm_con_ji_fast(benchmark::State& state)
{
    auto l = chain_realization(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(con_ji_poset_fast(l));
    state.counters["elements"] = static_cast<double>(l.size());
}

auto bm_enumerate_posets(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_posets(static_cast<std::size_t>(state.range(0))));
}

auto bm_enumerate_lattices(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_lattices(static_cast<std::size_t>(state.range(0))));
}

auto bm_closed_sets_lattice(benchmark::State& state)
{
    auto q = antichain(static_cast<std::size_t>(state.range(0))).as_quasi_order();
    for (auto _ : state)
        benchmark::DoNotOptimize(closed_sets_lattice(q));
}

}

BENCHMARK(bm_join_dependency)->DenseRange(2, 5);
BENCHMARK(bm_congruence_lattice)->DenseRange(2, 4);
BENCHMARK(bm_con_ji_fast)->DenseRange(2, 5);
BENCHMARK(bm_enumerate_posets)->DenseRange(3, 6);
BENCHMARK(bm_enumerate_lattices)->DenseRange(4, 7);
BENCHMARK(bm_closed_sets_lattice)->DenseRange(4, 10, 2);
BENCHMARK_MAIN();
