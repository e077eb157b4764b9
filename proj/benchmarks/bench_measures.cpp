#include "plurmat/generators.hpp"
#include "plurmat/hierarchy.hpp"
#include "plurmat/measures.hpp"
#include "plurmat/moments.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace plurmat;

void BM_DivisivenessAllAlternatives(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    std::vector<double> w(static_cast<std::size_t>(m), 1.0 / m);
    const Profile profile = Profile::rank_marginal(m, 0, w);
    const PluralityMatrix matrix = plurality_matrix(profile, {2, 3});
    for (auto _ : state) {
        double total = 0.0;
        for (int a = 0; a < m; ++a) total += divisiveness(matrix, a);
        benchmark::DoNotOptimize(total);
    }
}
BENCHMARK(BM_DivisivenessAllAlternatives)->Arg(10)->Arg(15)->Arg(20);

void BM_MostConflictualPair(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    const Profile profile = generate(GeneratorSpec::mallows_model(m, Ranking::identity(m), 0.7, 1), 4000);
    const PluralityMatrix matrix = plurality_matrix(profile, {2, 3});
    for (auto _ : state) {
        const auto sel = most_conflictual_pair(matrix, ConflictRule::MaxSwap);
        benchmark::DoNotOptimize(sel.score);
    }
}
BENCHMARK(BM_MostConflictualPair)->Arg(8)->Arg(12);

void BM_MomentVector(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    const Profile profile = generate(GeneratorSpec::mallows_mixture(m, 2, 0.3, 1), 10000);
    for (auto _ : state) {
        for (int a = 0; a < m; ++a) {
            const MomentVector mv = moment_vector(aggregate_vector(profile, a, 4), 4);
            benchmark::DoNotOptimize(mv.borda);
        }
    }
}
BENCHMARK(BM_MomentVector)->Arg(20)->Arg(64);

void BM_WitnessSolve(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    for (auto _ : state) {
        const WitnessPair wp = build_witness(d);
        benchmark::DoNotOptimize(wp.t);
    }
}
BENCHMARK(BM_WitnessSolve)->DenseRange(2, 12, 2);

} // namespace
