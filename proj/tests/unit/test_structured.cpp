#include "helpers.hpp"
#include "plurmat/errors.hpp"
#include "plurmat/structured.hpp"

#include <doctest.h>

using namespace plurmat;
using plurmat::testing::rk;

TEST_CASE("strength-model subset probabilities") {
    const StrengthVector v({2.0, 1.0, 1.0});
    CHECK(pl_subset_probability(v, {0, 1, 2}, 0) == doctest::Approx(0.5).epsilon(1e-12));
    const StrengthVector u({1.0, 1.0, 1.0, 1.0});
    for (int a = 0; a < 4; ++a)
        CHECK(pl_subset_probability(u, {0, 1, 2, 3}, a) == doctest::Approx(0.25).epsilon(1e-12));
    double total = 0.0;
    for (int a : {0, 1, 2}) total += pl_subset_probability(v, {0, 1, 2}, a);
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(StrengthVector({1.0, 0.0}), DomainError);
}

TEST_CASE("degree-2 lift under the strength model") {
    SUBCASE("pairwise rows are a fixed point") {
        const Profile p = generate(GeneratorSpec::plackett_luce({3.0, 1.0}), 0);
        const PluralityMatrix matrix = plurality_matrix(p, {2});
        const PluralityMatrix lifted = pl_lift(matrix, 1, {2});
        CHECK(lifted.pairwise(0, 1) == doctest::Approx(0.75).epsilon(1e-12));
    }
    SUBCASE("lifted entries equal the direct formula for v = (4,3,2,1)") {
        const StrengthVector v({4.0, 3.0, 2.0, 1.0});
        const Profile p = generate(GeneratorSpec::plackett_luce(v.v), 0);
        const PluralityMatrix matrix = plurality_matrix(p, {2, 3, 4});
        const PluralityMatrix lifted = pl_lift(matrix, 0, {3, 4});
        for (int k : {3, 4}) {
            for (const auto& [subset, row] : lifted.slice(k)) {
                for (std::size_t i = 0; i < subset.size(); ++i)
                    CHECK(row.p[i] ==
                          doctest::Approx(pl_subset_probability(v, subset, subset[i])).epsilon(1e-12));
            }
        }
    }
    SUBCASE("lift reproduces the exact profile's entries") {
        const Profile p = generate(GeneratorSpec::plackett_luce({4.0, 3.0, 2.0, 1.0}), 0);
        CHECK(verify_collapse(p, PlStructure{0}) <= 1e-9);
    }
    SUBCASE("boundary pairwise data is rejected") {
        const PluralityMatrix matrix = plurality_matrix(Profile::point_mass(rk({0, 1, 2})), {2});
        CHECK_THROWS_AS(pl_lift(matrix, 0, {3}), PositivityError);
    }
}

TEST_CASE("single-peaked reconstruction") {
    SUBCASE("unanimous left-to-right profile") {
        const Profile p = Profile::point_mass(rk({0, 1, 2, 3}));
        const PluralityMatrix matrix = plurality_matrix(p, {2});
        const auto entries = sp_subset_probabilities(Ranking::identity(4), matrix, {0, 1, 2, 3});
        CHECK(entries[0] == std::pair<int, double>{0, 1.0});
        for (std::size_t j = 1; j < entries.size(); ++j) CHECK(entries[j].second == doctest::Approx(0.0));
    }
    SUBCASE("middle alternative of a triple") {
        // With axis order a < b < c: p_abc(b) = p_bc - p_ab.
        const Profile p = generate(GeneratorSpec::walsh(3, 9), 4000);
        const PluralityMatrix matrix = plurality_matrix(p, {2, 3});
        const auto entries = sp_subset_probabilities(Ranking::identity(3), matrix, {0, 1, 2});
        CHECK(entries[1].first == 1);
        CHECK(entries[1].second ==
              doctest::Approx(matrix.pairwise(1, 2) - matrix.pairwise(0, 1)).epsilon(1e-12));
        CHECK(entries[1].second == doctest::Approx(matrix.entry({0, 1, 2}, 1)).epsilon(1e-12));
    }
    SUBCASE("Walsh profiles reconstruct every degree from pairwise data") {
        for (std::uint64_t seed : {1ULL, 2ULL}) {
            const Profile p = generate(GeneratorSpec::walsh(5, seed), 2000);
            CHECK(verify_collapse(p, SpStructure{Ranking::identity(5)}) <= 1e-9);
        }
    }
    SUBCASE("entries are nonnegative and sum to one on Walsh profiles") {
        const Profile p = generate(GeneratorSpec::walsh(6, 3), 1500);
        const PluralityMatrix matrix = plurality_matrix(p, {2});
        std::vector<int> subset{0, 2, 3, 5};
        const auto entries = sp_subset_probabilities(Ranking::identity(6), matrix, subset);
        double total = 0.0;
        for (const auto& [alt, prob] : entries) {
            CHECK(prob >= 0.0);
            total += prob;
        }
        CHECK(total == doctest::Approx(1.0).epsilon(1e-9));
    }
    SUBCASE("the middle of an axis triple is never last on Walsh profiles") {
        const Profile p = generate(GeneratorSpec::walsh(5, 4), 3000);
        for (const auto& [r, w] : p.sampled_data().votes) {
            for (int a = 0; a < 5; ++a)
                for (int b = a + 1; b < 5; ++b)
                    for (int c = b + 1; c < 5; ++c) {
                        const bool b_last = r.prefers(a, b) && r.prefers(c, b);
                        CHECK_FALSE(b_last);
                    }
        }
    }
    SUBCASE("a cyclic profile is flagged as far from single-peaked") {
        CHECK(verify_collapse(plurmat::testing::cyclic3_profile(),
                              SpStructure{Ranking::identity(3)}) > 0.05);
    }
}
