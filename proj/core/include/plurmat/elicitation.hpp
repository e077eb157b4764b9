#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace plurmat {

// Target additive accuracy per matrix entry and failure probability.
struct AccuracySpec {
    double epsilon = 0.1;
    double delta = 0.1;
    void validate() const;
};

struct SampleBudget {
    std::uint64_t entry_count = 0;    // Q = degree * C(m, degree)
    std::uint64_t per_entry = 0;      // T = ceil(ln(2Q/delta) / (2 eps^2))
};

// Simultaneous-confidence sample count for every degree-ell entry.
SampleBudget sample_budget(int m, int ell, const AccuracySpec& spec);

// Without-replacement sharpening for a population of n voters:
// ceil(T (n+1) / (n+T)).
std::uint64_t serfling_refine(std::uint64_t T, std::uint64_t n);

enum class ProtocolKind { Chain, Ranking };
std::string protocol_kind_name(ProtocolKind k);

struct ElicitationPlan {
    ProtocolKind kind = ProtocolKind::Chain;
    int query_size = 2;                 // k
    int target_degree = 2;              // ell
    std::uint64_t entry_count = 0;      // Q
    std::uint64_t per_entry_samples = 0; // T
    std::uint64_t query_count = 0;      // N
    int max_cognitive_load = 1;         // lambda, pairwise comparisons per voter
    std::uint64_t total_budget = 0;     // B = N * cost per query
};

// Degree-ell chain: k = ell, N = C(m,ell) T, lambda = ell-1.
ElicitationPlan plan_chain(int m, int ell, const AccuracySpec& spec);

// Largest ranking size whose sorting cost ceil(log2 k!) fits the load
// budget; throws FeasibilityError when even k = ell does not.
int max_ranking_size(int lambda_budget, int ell, int m);

// Degree-ell ranking under a cognitive-load budget: k = k(lambda),
// N = ceil(C(m,ell) T / C(k,ell)), lambda = ceil(log2 k!).
ElicitationPlan plan_ranking(int m, int ell, int lambda_budget, const AccuracySpec& spec);

struct FrontierPoint {
    int lambda = 0;
    double budget = 0.0; // exact curve value C(m,ell) T cost / C(k,ell)
    ElicitationPlan plan;
    bool dominated = false;
};

// Chain point plus the ranking curve k = ell..m, with Pareto dominance
// flagged over (lambda, budget).
std::vector<FrontierPoint> pareto_frontier(int m, int ell, const AccuracySpec& spec);

// Minimum-load protocol feasible for the given population: the ell-chain
// when n >= C(m,ell) T, otherwise the smallest-k ranking with
// C(k,ell) >= C(m,ell) T / n.
ElicitationPlan choose_protocol(std::uint64_t population, int m, int ell, const AccuracySpec& spec);

struct LambdaCheck {
    bool ok = true;
    std::string detail;
};

// Rejects any plan claiming degree ell with fewer than ell-1 comparisons
// per voter.
LambdaCheck validate_lambda(const ElicitationPlan& plan);

} // namespace plurmat
