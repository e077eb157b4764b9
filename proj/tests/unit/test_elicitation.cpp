#include "plurmat/combin.hpp"
#include "plurmat/elicitation.hpp"
#include "plurmat/errors.hpp"
#include "plurmat/rng.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>

using namespace plurmat;

TEST_CASE("entry counts and per-entry sample sizes") {
    const auto b = sample_budget(10, 2, {0.05, 0.05});
    CHECK(b.entry_count == 90);
    CHECK(b.per_entry == 1638);

    const auto b2 = sample_budget(3, 3, {0.1, 0.1});
    CHECK(b2.entry_count == 3);
    CHECK(b2.per_entry == 205);

    SUBCASE("monotone in accuracy and confidence") {
        const auto base = sample_budget(8, 3, {0.1, 0.1});
        CHECK(sample_budget(8, 3, {0.2, 0.1}).per_entry <= base.per_entry);
        CHECK(sample_budget(8, 3, {0.1, 0.2}).per_entry <= base.per_entry);
    }
}

TEST_CASE("without-replacement refinement") {
    CHECK(serfling_refine(100, 900) == 91);
    SUBCASE("approaches the with-replacement bound for huge populations") {
        CHECK(serfling_refine(100, 100000000ULL) == 100);
    }
    SUBCASE("never exceeds the original bound") {
        Rng rng(1);
        for (int i = 0; i < 200; ++i) {
            const std::uint64_t T = 1 + rng.next_u64() % 10000;
            const std::uint64_t n = 1 + rng.next_u64() % 1000000;
            CHECK(serfling_refine(T, n) <= T);
        }
    }
    SUBCASE("reduction bounded once the population covers the chain requirement") {
        const int m = 10;
        const int ell = 2;
        const auto b = sample_budget(m, ell, {0.05, 0.05});
        const std::uint64_t n = binom(m, ell) * b.per_entry;
        const double reduction =
            1.0 - static_cast<double>(serfling_refine(b.per_entry, n)) / static_cast<double>(b.per_entry);
        CHECK(reduction <= 1.0 / (static_cast<double>(binom(m, ell)) + 1.0) + 1e-9);
    }
}

TEST_CASE("chain plans") {
    const auto plan = plan_chain(10, 2, {0.05, 0.05});
    CHECK(plan.query_count == 45 * 1638);
    CHECK(plan.max_cognitive_load == 1);
    CHECK(plan.total_budget == 73710);
    SUBCASE("load and per-query cost are structural") {
        for (int ell = 2; ell <= 5; ++ell) {
            const auto p = plan_chain(8, ell, {0.1, 0.1});
            CHECK(p.max_cognitive_load == ell - 1);
            CHECK(p.total_budget == p.query_count * static_cast<std::uint64_t>(ell - 1));
        }
    }
}

TEST_CASE("ranking plans") {
    SUBCASE("sorting-cost ceiling picks the query size") {
        CHECK(max_ranking_size(7, 2, 10) == 5);  // ceil(log2 120) = 7, ceil(log2 720) = 10
        CHECK(max_ranking_size(1, 2, 10) == 2);
        CHECK(max_ranking_size(100, 2, 10) == 10);
        CHECK_THROWS_AS(max_ranking_size(2, 3, 10), FeasibilityError); // ceil(log2 6) = 3 > 2
    }
    SUBCASE("query size ell covers one subset per query") {
        const auto p = plan_ranking(10, 3, ceil_log2_factorial(3), {0.1, 0.1});
        CHECK(p.query_size == 3);
        CHECK(p.query_count == binom(10, 3) * p.per_entry_samples);
    }
    SUBCASE("degree-2 budget is flat from k=2 to k=3") {
        const auto pts = pareto_frontier(10, 2, {0.05, 0.05});
        // points: [0] chain, then rankings k = 2..10
        CHECK(pts[1].plan.query_size == 2);
        CHECK(pts[2].plan.query_size == 3);
        CHECK(pts[1].budget == doctest::Approx(pts[2].budget).epsilon(1e-12));
        for (std::size_t i = 2; i + 1 < pts.size(); ++i) CHECK(pts[i + 1].budget < pts[i].budget - 1e-9);
    }
}

TEST_CASE("tradeoff frontier") {
    SUBCASE("no ranking matches the chain's load at degree 3") {
        const auto pts = pareto_frontier(10, 3, {0.05, 0.05});
        CHECK(pts[0].plan.kind == ProtocolKind::Chain);
        CHECK(pts[0].lambda == 2);
        for (std::size_t i = 1; i < pts.size(); ++i) CHECK(pts[i].lambda > pts[0].lambda);
    }
    SUBCASE("ranking budget strictly decreases in k for degree >= 3") {
        for (int ell : {3, 4}) {
            const auto pts = pareto_frontier(10, ell, {0.05, 0.05});
            for (std::size_t i = 1; i + 1 < pts.size(); ++i)
                CHECK(pts[i + 1].budget < pts[i].budget - 1e-9);
        }
    }
    SUBCASE("the non-dominated subset has nonincreasing budget along increasing load") {
        for (int ell : {2, 3, 4}) {
            const auto pts = pareto_frontier(9, ell, {0.1, 0.05});
            double last_budget = 1e300;
            int last_lambda = -1;
            for (const auto& pt : pts) {
                if (pt.dominated) continue;
                CHECK(pt.lambda > last_lambda);
                CHECK(pt.budget <= last_budget + 1e-9);
                last_lambda = pt.lambda;
                last_budget = pt.budget;
            }
        }
    }
    SUBCASE("degree-2 k=3 ranking is dominated by the pairwise point") {
        const auto pts = pareto_frontier(10, 2, {0.05, 0.05});
        bool found = false;
        for (const auto& pt : pts) {
            if (pt.plan.kind == ProtocolKind::Ranking && pt.plan.query_size == 3) {
                CHECK(pt.dominated);
                found = true;
            }
        }
        CHECK(found);
    }
}

TEST_CASE("protocol choice by population") {
    const AccuracySpec spec{0.05, 0.05};
    const int m = 10;
    const int ell = 2;
    const auto b = sample_budget(m, ell, spec);
    const std::uint64_t chain_need = binom(m, ell) * b.per_entry;

    SUBCASE("ample population picks the chain") {
        const auto plan = choose_protocol(chain_need, m, ell, spec);
        CHECK(plan.kind == ProtocolKind::Chain);
    }
    SUBCASE("worked example: n = 40000 needs size-3 rankings") {
        const auto plan = choose_protocol(40000, m, ell, spec);
        CHECK(plan.kind == ProtocolKind::Ranking);
        CHECK(plan.query_size == 3);
    }
    SUBCASE("boundary population lands on the full ranking") {
        const std::uint64_t n = chain_need / binom(m, ell); // = per-entry samples
        const auto plan = choose_protocol(n, m, ell, spec);
        CHECK(plan.kind == ProtocolKind::Ranking);
        CHECK(plan.query_size == m);
    }
    SUBCASE("populations below the full-ranking requirement are infeasible") {
        CHECK_THROWS_AS(choose_protocol(b.per_entry - 1, m, ell, spec), FeasibilityError);
    }
    SUBCASE("agrees with the direct threshold rule on a grid") {
        Rng rng(99);
        int cells = 0;
        for (int gm = 5; gm <= 9 && cells < 50; ++gm) {
            for (int gell = 2; gell <= 4 && cells < 50; ++gell) {
                const auto gb = sample_budget(gm, gell, spec);
                const std::uint64_t need = binom(gm, gell) * gb.per_entry;
                for (std::uint64_t n :
                     {gb.per_entry, gb.per_entry * 3, need / 7 + 1, need / 2, need, need * 2}) {
                    ++cells;
                    ElicitationPlan plan;
                    try {
                        plan = choose_protocol(n, gm, gell, spec);
                    } catch (const FeasibilityError&) {
                        CHECK(n * binom(gm, gell) < need);
                        continue;
                    }
                    if (n >= need) {
                        CHECK(plan.kind == ProtocolKind::Chain);
                    } else {
                        CHECK(plan.kind == ProtocolKind::Ranking);
                        // smallest k with C(k, ell) * n >= C(m, ell) * T
                        int expected = gell;
                        while (binom(expected, gell) * n < need) ++expected;
                        CHECK(plan.query_size == expected);
                        CHECK(plan.query_count <= n);
                    }
                }
            }
        }
        CHECK(cells >= 50);
    }
}

TEST_CASE("the chosen protocol is the minimum-load point of the feasible frontier") {
    // Feasibility given n restricts the frontier to points whose query
    // count fits the population; the choice must be the lowest-load
    // point of that subset (and Pareto-optimal within it).
    const AccuracySpec spec{0.1, 0.1};
    for (int m : {6, 8}) {
        for (int ell : {2, 3}) {
            const auto pts = pareto_frontier(m, ell, spec);
            const auto b = sample_budget(m, ell, spec);
            const std::uint64_t need = binom(m, ell) * b.per_entry;
            for (std::uint64_t n : {b.per_entry, need / 5 + 1, need / 2, need, need * 2}) {
                ElicitationPlan plan;
                try {
                    plan = choose_protocol(n, m, ell, spec);
                } catch (const FeasibilityError&) {
                    continue;
                }
                int best_feasible_lambda = std::numeric_limits<int>::max();
                for (const auto& pt : pts)
                    if (pt.plan.query_count <= n)
                        best_feasible_lambda = std::min(best_feasible_lambda, pt.lambda);
                CHECK(plan.query_count <= n);
                CHECK(plan.max_cognitive_load == best_feasible_lambda);
                bool strictly_dominated = false;
                for (const auto& pt : pts) {
                    if (pt.plan.query_count > n) continue;
                    if (pt.lambda < plan.max_cognitive_load &&
                        pt.plan.total_budget < plan.total_budget)
                        strictly_dominated = true;
                }
                CHECK_FALSE(strictly_dominated);
            }
        }
    }
}

TEST_CASE("load lower bound") {
    SUBCASE("planned protocols always satisfy it") {
        for (int ell = 2; ell <= 5; ++ell) {
            CHECK(validate_lambda(plan_chain(8, ell, {0.1, 0.1})).ok);
            CHECK(validate_lambda(plan_ranking(8, ell, ceil_log2_factorial(ell), {0.1, 0.1})).ok);
        }
    }
    SUBCASE("hand-built undersized plans are rejected") {
        ElicitationPlan bad;
        bad.kind = ProtocolKind::Chain;
        bad.target_degree = 4;
        bad.max_cognitive_load = 2;
        CHECK_FALSE(validate_lambda(bad).ok);
    }
    SUBCASE("random plans: verdict matches the inequality") {
        Rng rng(7);
        for (int i = 0; i < 300; ++i) {
            ElicitationPlan plan;
            plan.target_degree = 2 + static_cast<int>(rng.next_u64() % 7);
            plan.max_cognitive_load = static_cast<int>(rng.next_u64() % 12);
            const bool expect_ok = plan.max_cognitive_load >= plan.target_degree - 1;
            CHECK(validate_lambda(plan).ok == expect_ok);
        }
    }
    SUBCASE("a size-ell ranking plan clears the bound") {
        const auto plan = plan_ranking(10, 3, 3, {0.1, 0.1});
        CHECK(plan.query_size == 3);
        CHECK(plan.max_cognitive_load == 3); // ceil(log2 6)
        CHECK(validate_lambda(plan).ok);
    }
}

TEST_CASE("sorting-cost helper") {
    CHECK(ceil_log2_factorial(2) == 1);
    CHECK(ceil_log2_factorial(3) == 3);
    CHECK(ceil_log2_factorial(4) == 5);
    CHECK(ceil_log2_factorial(5) == 7);
    CHECK(ceil_log2_factorial(6) == 10);
    SUBCASE("exceeds the chain cost from size 3 on") {
        for (int k = 3; k <= 12; ++k) CHECK(ceil_log2_factorial(k) > k - 1);
    }
}
