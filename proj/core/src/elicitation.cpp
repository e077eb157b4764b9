#include "plurmat/elicitation.hpp"

#include "plurmat/combin.hpp"
#include "plurmat/errors.hpp"

#include <cmath>

namespace plurmat {

void AccuracySpec::validate() const {
    if (!(epsilon > 0.0) || !(epsilon < 1.0)) throw DomainError("AccuracySpec: epsilon must lie in (0,1)");
    if (!(delta > 0.0) || !(delta < 1.0)) throw DomainError("AccuracySpec: delta must lie in (0,1)");
}

namespace {

void check_degree(int m, int ell) {
    if (m < 2) throw DomainError("elicitation: need m >= 2");
    if (ell < 2 || ell > m) throw DomainError("elicitation: degree must lie in [2, m]");
}

std::uint64_t ceil_div(std::uint64_t num, std::uint64_t den) { return (num + den - 1) / den; }

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    const unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
    if (p > UINT64_MAX) throw ResourceError("elicitation: plan size exceeds 64 bits");
    return static_cast<std::uint64_t>(p);
}

} // namespace

SampleBudget sample_budget(int m, int ell, const AccuracySpec& spec) {
    spec.validate();
    check_degree(m, ell);
    SampleBudget b;
    b.entry_count = checked_mul(static_cast<std::uint64_t>(ell), binom(m, ell));
    const double raw =
        std::log(2.0 * static_cast<double>(b.entry_count) / spec.delta) / (2.0 * spec.epsilon * spec.epsilon);
    b.per_entry = static_cast<std::uint64_t>(std::ceil(raw));
    return b;
}

std::uint64_t serfling_refine(std::uint64_t T, std::uint64_t n) {
    if (n < 1) throw DomainError("serfling_refine: need n >= 1");
    if (T == 0) return 0;
    const unsigned __int128 num = static_cast<unsigned __int128>(T) * (n + 1);
    const unsigned __int128 den = static_cast<unsigned __int128>(n) + T;
    return static_cast<std::uint64_t>((num + den - 1) / den);
}

std::string protocol_kind_name(ProtocolKind k) {
    return k == ProtocolKind::Chain ? "chain" : "ranking";
}

ElicitationPlan plan_chain(int m, int ell, const AccuracySpec& spec) {
    const SampleBudget b = sample_budget(m, ell, spec);
    ElicitationPlan p;
    p.kind = ProtocolKind::Chain;
    p.query_size = ell;
    p.target_degree = ell;
    p.entry_count = b.entry_count;
    p.per_entry_samples = b.per_entry;
    p.query_count = checked_mul(binom(m, ell), b.per_entry);
    p.max_cognitive_load = ell - 1;
    p.total_budget = checked_mul(p.query_count, static_cast<std::uint64_t>(ell - 1));
    return p;
}

int max_ranking_size(int lambda_budget, int ell, int m) {
    check_degree(m, ell);
    if (lambda_budget < ceil_log2_factorial(ell))
        throw FeasibilityError("plan_ranking: load budget " + std::to_string(lambda_budget) +
                               " below the sorting cost of a size-" + std::to_string(ell) + " query");
    int k = ell;
    while (k + 1 <= m && ceil_log2_factorial(k + 1) <= lambda_budget) ++k;
    return k;
}

ElicitationPlan plan_ranking(int m, int ell, int lambda_budget, const AccuracySpec& spec) {
    const SampleBudget b = sample_budget(m, ell, spec);
    const int k = max_ranking_size(lambda_budget, ell, m);
    ElicitationPlan p;
    p.kind = ProtocolKind::Ranking;
    p.query_size = k;
    p.target_degree = ell;
    p.entry_count = b.entry_count;
    p.per_entry_samples = b.per_entry;
    p.query_count = ceil_div(checked_mul(binom(m, ell), b.per_entry), binom(k, ell));
    p.max_cognitive_load = ceil_log2_factorial(k);
    p.total_budget = checked_mul(p.query_count, static_cast<std::uint64_t>(p.max_cognitive_load));
    return p;
}

std::vector<FrontierPoint> pareto_frontier(int m, int ell, const AccuracySpec& spec) {
    const SampleBudget b = sample_budget(m, ell, spec);
    const double coverage = static_cast<double>(binom(m, ell)) * static_cast<double>(b.per_entry);

    std::vector<FrontierPoint> points;

    FrontierPoint chain;
    chain.plan = plan_chain(m, ell, spec);
    chain.lambda = chain.plan.max_cognitive_load;
    chain.budget = coverage * (ell - 1);
    points.push_back(chain);

    for (int k = ell; k <= m; ++k) {
        FrontierPoint pt;
        pt.plan = plan_ranking(m, ell, ceil_log2_factorial(k), spec);
        pt.lambda = pt.plan.max_cognitive_load;
        pt.budget = coverage * pt.lambda / static_cast<double>(binom(k, ell));
        points.push_back(pt);
    }

    for (std::size_t i = 0; i < points.size(); ++i) {
        auto& p = points[i];
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (i == j) continue;
            const auto& q = points[j];
            const bool weakly = q.lambda <= p.lambda && q.budget <= p.budget + 1e-9;
            const bool strictly = q.lambda < p.lambda || q.budget < p.budget - 1e-9;
            // Coincident points (the pairwise chain equals the k = 2
            // ranking) are subsumed by their earliest representative.
            const bool duplicate = j < i && q.lambda == p.lambda &&
                                   std::abs(q.budget - p.budget) <= 1e-9;
            if ((weakly && strictly) || duplicate) {
                p.dominated = true;
                break;
            }
        }
    }
    return points;
}

ElicitationPlan choose_protocol(std::uint64_t population, int m, int ell, const AccuracySpec& spec) {
    const SampleBudget b = sample_budget(m, ell, spec);
    const std::uint64_t chain_need = checked_mul(binom(m, ell), b.per_entry);
    if (population >= chain_need) return plan_chain(m, ell, spec);

    // Smallest k whose per-query coverage C(k,ell) brings the query count
    // within the population: C(k,ell) * n >= C(m,ell) * T.
    for (int k = ell; k <= m; ++k) {
        const unsigned __int128 lhs = static_cast<unsigned __int128>(binom(k, ell)) * population;
        const unsigned __int128 rhs = static_cast<unsigned __int128>(chain_need);
        if (lhs >= rhs) return plan_ranking(m, ell, ceil_log2_factorial(k), spec);
    }
    throw FeasibilityError("choose_protocol: population " + std::to_string(population) +
                           " cannot support even full-ranking queries (need " +
                           std::to_string(ceil_div(chain_need, binom(m, ell))) + ")");
}

LambdaCheck validate_lambda(const ElicitationPlan& plan) {
    LambdaCheck c;
    if (plan.max_cognitive_load < plan.target_degree - 1) {
        c.ok = false;
        c.detail = "plan claims degree " + std::to_string(plan.target_degree) + " with load " +
                   std::to_string(plan.max_cognitive_load) + " < " +
                   std::to_string(plan.target_degree - 1) +
                   "; resolving a size-" + std::to_string(plan.target_degree) +
                   " subset needs at least that many comparisons";
    }
    return c;
}

} // namespace plurmat
