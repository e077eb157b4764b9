#include "plurmat/generators.hpp"
#include "plurmat/protocol.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace plurmat;

void BM_ChainQueries(benchmark::State& state) {
    const int m = 8;
    const int ell = static_cast<int>(state.range(0));
    const Profile profile = generate(GeneratorSpec::impartial_culture(m), 0);
    std::uint64_t seed = 1;
    for (auto _ : state) {
        const SimulationReport rep = run_chain(profile, ell, 2000, seed++);
        benchmark::DoNotOptimize(rep.realized_budget);
    }
    state.SetItemsProcessed(state.iterations() * 2000);
}
BENCHMARK(BM_ChainQueries)->DenseRange(2, 5);

void BM_RankingQueries(benchmark::State& state) {
    const int m = 8;
    const int k = static_cast<int>(state.range(0));
    const Profile profile = generate(GeneratorSpec::impartial_culture(m), 0);
    std::uint64_t seed = 1;
    for (auto _ : state) {
        const SimulationReport rep = run_ranking(profile, k, 2, 500, seed++);
        benchmark::DoNotOptimize(rep.realized_budget);
    }
    state.SetItemsProcessed(state.iterations() * 500);
}
BENCHMARK(BM_RankingQueries)->DenseRange(4, 8, 2);

void BM_MallowsSampling(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    const auto spec = GeneratorSpec::mallows_model(m, Ranking::identity(m), 0.85, 7);
    for (auto _ : state) {
        const Profile p = generate(spec, 1000);
        benchmark::DoNotOptimize(p.sampled_data().total_weight);
    }
    state.SetItemsProcessed(state.iterations() * 1000);
}
BENCHMARK(BM_MallowsSampling)->Arg(16)->Arg(64)->Arg(256);

} // namespace
