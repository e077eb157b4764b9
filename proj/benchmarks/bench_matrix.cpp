#include "plurmat/generators.hpp"
#include "plurmat/plurality.hpp"

#include <benchmark/benchmark.h>

#include <set>

namespace {

using namespace plurmat;

void BM_ExactMatrixAllDegrees(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    const Profile profile = generate(GeneratorSpec::impartial_culture(m), 0);
    std::set<int> degrees;
    for (int k = 2; k <= m; ++k) degrees.insert(k);
    for (auto _ : state) {
        const PluralityMatrix matrix = plurality_matrix(profile, degrees);
        benchmark::DoNotOptimize(matrix.entry_count());
    }
}
BENCHMARK(BM_ExactMatrixAllDegrees)->DenseRange(4, 7);

void BM_RankMarginalSlice23(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    std::vector<double> w(static_cast<std::size_t>(m), 0.0);
    w.front() = w.back() = 0.5;
    const Profile profile = Profile::rank_marginal(m, 0, w);
    for (auto _ : state) {
        const PluralityMatrix matrix = plurality_matrix(profile, {2, 3});
        benchmark::DoNotOptimize(matrix.entry_count());
    }
}
BENCHMARK(BM_RankMarginalSlice23)->Arg(15)->Arg(25)->Arg(40);

void BM_AggregateVectorSampled(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    const Profile profile = generate(GeneratorSpec::plackett_luce_linear(m, 1), 10000);
    for (auto _ : state) {
        const AggregatePlurality agg = aggregate_vector(profile, 0, 4);
        benchmark::DoNotOptimize(agg.P.data());
    }
}
BENCHMARK(BM_AggregateVectorSampled)->Arg(16)->Arg(64)->Arg(256);

} // namespace
