#include "plurmat/protocol.hpp"

#include "plurmat/combin.hpp"
#include "plurmat/errors.hpp"

#include <algorithm>
#include <cmath>

namespace plurmat {

namespace {

class VoterSource {
public:
    VoterSource(const Profile& profile, Rng& rng, const std::optional<std::uint64_t>& population)
        : profile_(profile), rng_(rng) {
        if (population) {
            pool_ = sample_voters(profile, *population, rng.derive(0x706F6F6CULL).seed());
            return;
        }
        // Hoist the cumulative table for listed supports; queries draw
        // thousands of voters.
        if (profile.kind() != Profile::Kind::RankMarginal) {
            atoms_ = profile.support();
            cum_.reserve(atoms_.size());
            double acc = 0.0;
            for (const auto& [r, p] : atoms_) {
                acc += p;
                cum_.push_back(acc);
            }
        }
    }

    Ranking next() {
        if (pool_) {
            if (next_index_ >= pool_->size())
                throw ResourceError("protocol: finite population of " + std::to_string(pool_->size()) +
                                    " voters exhausted");
            return (*pool_)[next_index_++];
        }
        if (!atoms_.empty()) return atoms_[rng_.categorical(cum_)].first;
        return sample_one(profile_, rng_);
    }

private:
    const Profile& profile_;
    Rng& rng_;
    std::optional<std::vector<Ranking>> pool_;
    std::size_t next_index_ = 0;
    std::vector<std::pair<Ranking, double>> atoms_;
    std::vector<double> cum_;
};

double matrix_error(const PluralityMatrix& estimates, const PluralityMatrix& truth, int degree) {
    double worst = 0.0;
    for (const auto& [subset, row] : truth.slice(degree)) {
        for (std::size_t i = 0; i < subset.size(); ++i) {
            double est = 0.0; // unobserved rows score their full truth gap
            if (estimates.has_degree(degree)) {
                const auto& rows = estimates.slice(degree);
                auto it = rows.find(subset);
                if (it != rows.end() && it->second.total > 0) est = it->second.p[i];
            }
            worst = std::max(worst, std::abs(est - row.p[i]));
        }
    }
    return worst;
}

void finish_report(SimulationReport& rep, const SimulationOptions& opts, int ell) {
    if (opts.truth != nullptr) {
        rep.max_entry_error = matrix_error(rep.estimates, *opts.truth, ell);
        rep.covered = opts.epsilon > 0.0 && rep.max_entry_error <= opts.epsilon;
    }
}

} // namespace

SimulationReport run_chain(const Profile& profile, int ell, std::uint64_t N, std::uint64_t seed,
                           const SimulationOptions& opts) {
    const int m = profile.m();
    if (ell < 2 || ell > m) throw DomainError("run_chain: degree out of [2, m]");

    Rng rng(seed);
    VoterSource voters(profile, rng, opts.population);

    SimulationReport rep;
    rep.plan.kind = ProtocolKind::Chain;
    rep.plan.query_size = ell;
    rep.plan.target_degree = ell;
    rep.plan.entry_count = static_cast<std::uint64_t>(ell) * binom(m, ell);
    rep.plan.query_count = N;
    rep.plan.max_cognitive_load = ell - 1;
    rep.plan.total_budget = N * static_cast<std::uint64_t>(ell - 1);
    rep.plan.per_entry_samples = binom(m, ell) == 0 ? 0 : N / binom(m, ell);
    rep.estimates = PluralityMatrix(m, PluralityMatrix::Provenance::Empirical);
    rep.transitive_estimates = PluralityMatrix(m, PluralityMatrix::Provenance::Empirical);

    std::vector<int> subset(static_cast<std::size_t>(ell));
    for (int i = 0; i < ell; ++i) subset[static_cast<std::size_t>(i)] = i;

    std::vector<int> tau;
    for (std::uint64_t q = 0; q < N; ++q) {
        if (opts.schedule == Schedule::UniformRandom) {
            // Uniform size-ell subset via a partial shuffle of 0..m-1.
            std::vector<int> pool(static_cast<std::size_t>(m));
            for (int i = 0; i < m; ++i) pool[static_cast<std::size_t>(i)] = i;
            for (int i = 0; i < ell; ++i) {
                const int j = rng.uniform_int(i, m - 1);
                std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
            }
            subset.assign(pool.begin(), pool.begin() + ell);
            std::sort(subset.begin(), subset.end());
        }

        tau = subset;
        rng.shuffle(tau);
        const Ranking voter = voters.next();

        // Winner-stays walk; every prefix winner is an unbiased sample
        // for its prefix set.
        int running = tau[0];
        std::vector<int> prefix{tau[0]};
        for (int j = 1; j < ell; ++j) {
            const int challenger = tau[static_cast<std::size_t>(j)];
            const bool keeps = voter.prefers(running, challenger);
            if (opts.record_transitive) {
                // Direct comparison outcome, recorded for the bias
                // demonstration only.
                std::vector<int> pair{std::min(running, challenger), std::max(running, challenger)};
                rep.transitive_estimates.record_winner(pair, keeps ? running : challenger);
            }
            running = keeps ? running : challenger;
            prefix.push_back(challenger);
            std::vector<int> sorted_prefix(prefix);
            std::sort(sorted_prefix.begin(), sorted_prefix.end());
            rep.estimates.record_winner(sorted_prefix, running);
        }
        rep.realized_budget += static_cast<std::uint64_t>(ell - 1);

        if (opts.schedule == Schedule::RoundRobin) next_subset(subset, m);
    }
    rep.realized_max_load = ell - 1;
    finish_report(rep, opts, ell);
    return rep;
}

SimulationReport run_ranking(const Profile& profile, int k, int ell, std::uint64_t N,
                             std::uint64_t seed, const SimulationOptions& opts) {
    const int m = profile.m();
    if (k < 2 || k > m) throw DomainError("run_ranking: query size out of [2, m]");
    if (ell < 2 || ell > k) throw DomainError("run_ranking: target degree out of [2, k]");

    Rng rng(seed);
    VoterSource voters(profile, rng, opts.population);
    const int cost = ceil_log2_factorial(k);

    SimulationReport rep;
    rep.plan.kind = ProtocolKind::Ranking;
    rep.plan.query_size = k;
    rep.plan.target_degree = ell;
    rep.plan.entry_count = static_cast<std::uint64_t>(ell) * binom(m, ell);
    rep.plan.query_count = N;
    rep.plan.max_cognitive_load = cost;
    rep.plan.total_budget = N * static_cast<std::uint64_t>(cost);
    rep.estimates = PluralityMatrix(m, PluralityMatrix::Provenance::Empirical);
    rep.transitive_estimates = PluralityMatrix(m, PluralityMatrix::Provenance::Empirical);

    std::vector<int> subset(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) subset[static_cast<std::size_t>(i)] = i;

    for (std::uint64_t q = 0; q < N; ++q) {
        if (opts.schedule == Schedule::UniformRandom) {
            std::vector<int> pool(static_cast<std::size_t>(m));
            for (int i = 0; i < m; ++i) pool[static_cast<std::size_t>(i)] = i;
            for (int i = 0; i < k; ++i) {
                const int j = rng.uniform_int(i, m - 1);
                std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
            }
            subset.assign(pool.begin(), pool.begin() + k);
            std::sort(subset.begin(), subset.end());
        }

        const Ranking voter = voters.next();
        const Ranking restriction = restrict_to(voter, subset);

        // The restriction resolves the top of every contained subset.
        // Entries updated from the same query are correlated with each
        // other, but each fixed entry still sees i.i.d. samples across
        // queries, which is all the per-entry confidence bound uses.
        // Raw counts are stored so callers can reason about reuse.
        std::vector<int> inner(static_cast<std::size_t>(ell));
        for (int i = 0; i < ell; ++i) inner[static_cast<std::size_t>(i)] = i;
        do {
            std::vector<int> target(static_cast<std::size_t>(ell));
            for (int i = 0; i < ell; ++i)
                target[static_cast<std::size_t>(i)] = subset[static_cast<std::size_t>(inner[static_cast<std::size_t>(i)])];
            rep.estimates.record_winner(target, top_of(restriction, target));
        } while (next_subset(inner, k));

        rep.realized_budget += static_cast<std::uint64_t>(cost);
        if (opts.schedule == Schedule::RoundRobin) next_subset(subset, m);
    }
    rep.realized_max_load = cost;
    finish_report(rep, opts, ell);
    return rep;
}

ChainBiasReport chain_bias_demo() {
    // Two equal-mass voters over {a, b, c} = {0, 1, 2}: one ranks
    // a > c > b, the other b > c > a, so Pr[c over a] = 1/2. Chains on
    // {a, b, c} run under all six orderings.
    const Ranking sigma_a(std::vector<int>{0, 2, 1});
    const Ranking sigma_b(std::vector<int>{1, 2, 0});
    const std::vector<Ranking> voters{sigma_a, sigma_b};

    std::vector<int> order{0, 1, 2};
    std::vector<std::vector<int>> orderings;
    do {
        orderings.push_back(order);
    } while (std::next_permutation(order.begin(), order.end()));

    int resolved = 0;
    int inferred_c_over_a = 0;
    int prefix_cases = 0;
    int prefix_c_wins = 0;
    int true_c_over_a = 0;

    for (const auto& voter : voters) {
        if (voter.prefers(2, 0)) ++true_c_over_a;
        for (const auto& tau : orderings) {
            int running = tau[0];
            bool compared_ac = false;
            for (std::size_t j = 1; j < tau.size(); ++j) {
                const int challenger = tau[j];
                const bool is_ac = (running == 0 && challenger == 2) || (running == 2 && challenger == 0);
                compared_ac = compared_ac || is_ac;
                running = voter.prefers(running, challenger) ? running : challenger;
            }
            // The pair {a, c} is resolved by a direct comparison or by
            // transitivity through the final winner.
            const bool resolved_here = compared_ac || running == 0 || running == 2;
            if (resolved_here) {
                ++resolved;
                if (voter.prefers(2, 0)) ++inferred_c_over_a;
            }
            // First-prefix winner is an unbiased sample whenever the
            // protocol happened to open with {a, c}.
            if ((tau[0] == 0 && tau[1] == 2) || (tau[0] == 2 && tau[1] == 0)) {
                ++prefix_cases;
                if (top_of(voter, std::vector<int>{0, 2}) == 2) ++prefix_c_wins;
            }
        }
    }

    const int total_cases = static_cast<int>(voters.size() * orderings.size());
    ChainBiasReport rep;
    rep.true_pairwise = static_cast<double>(true_c_over_a) / static_cast<double>(voters.size());
    rep.inferred_estimate = static_cast<double>(inferred_c_over_a) / static_cast<double>(resolved);
    rep.prefix_estimate = static_cast<double>(prefix_c_wins) / static_cast<double>(prefix_cases);
    rep.resolution_rate = static_cast<double>(resolved) / static_cast<double>(total_cases);
    return rep;
}

} // namespace plurmat
