#include "helpers.hpp"
#include "plurmat/errors.hpp"
#include "plurmat/oracle.hpp"

#include <doctest.h>

using namespace plurmat;
using plurmat::testing::rk;

TEST_CASE("enumeration tables") {
    SUBCASE("point mass") {
        const auto t = oracle::enumerate_profile(Profile::point_mass(rk({0, 1, 2})));
        REQUIRE(t.atoms.size() == 1);
        CHECK(t.atoms[0].second == doctest::Approx(1.0));
    }
    SUBCASE("rank-marginal expansion reproduces the half/half antagonism law") {
        const auto t = oracle::enumerate_profile(generate(GeneratorSpec::antagonism(3, 0), 0));
        double first = 0.0;
        double last = 0.0;
        double middle = 0.0;
        for (const auto& [r, p] : t.atoms) {
            const int rank = rank_of(r, 0);
            if (rank == 1) first += p;
            if (rank == 2) middle += p;
            if (rank == 3) last += p;
        }
        CHECK(first == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(middle == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(last == doctest::Approx(0.5).epsilon(1e-12));
    }
    SUBCASE("sampled profiles are normalized by total weight") {
        const Profile p = Profile::sampled(3, {{rk({0, 1, 2}), 3.0}, {rk({2, 1, 0}), 1.0}});
        const auto t = oracle::enumerate_profile(p);
        CHECK(t.atoms[0].second + t.atoms[1].second == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(oracle::subset_top_probability(t, {0, 1, 2}, 0) == doctest::Approx(0.75).epsilon(1e-12));
    }
    SUBCASE("rank-marginal expansion refuses large m") {
        const Profile p = Profile::rank_marginal(9, 0, std::vector<double>(9, 1.0 / 9));
        CHECK_THROWS_AS(oracle::enumerate_profile(p), ResourceError);
    }
}

TEST_CASE("definitional values on reference profiles") {
    const auto ic3 = oracle::enumerate_profile(generate(GeneratorSpec::impartial_culture(3), 0));
    CHECK(oracle::rank_variance(ic3, 0) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(oracle::central_moment(ic3, 0, 4) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(oracle::agreement_index(ic3) == doctest::Approx(0.0).epsilon(1e-12));
    const auto an3 = oracle::enumerate_profile(antagonism_two_bloc(3, 0));
    CHECK(oracle::subset_top_probability(an3, {0, 1, 2}, 2) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(oracle::rank_variance(an3, 0) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("rank-law route matches the table values at m = 15") {
    const int m = 15;
    SUBCASE("uniform law") {
        const RankMarginalProfile ic{0, std::vector<double>(15, 1.0 / 15)};
        CHECK(oracle::rm_rank_variance(ic, m) == doctest::Approx(224.0 / 12.0).epsilon(1e-9));
        CHECK(oracle::rm_divisiveness(ic, m) == doctest::Approx(16.0 / 3.0).epsilon(1e-9));
        CHECK(oracle::rm_agreement_index(ic, m) == doctest::Approx(0.0).epsilon(1e-9));
    }
    SUBCASE("antagonism law") {
        std::vector<double> w(15, 0.0);
        w.front() = w.back() = 0.5;
        const RankMarginalProfile an{0, w};
        CHECK(oracle::rm_rank_variance(an, m) == doctest::Approx(49.0).epsilon(1e-9));
        CHECK(oracle::rm_divisiveness(an, m) == doctest::Approx(14.0).epsilon(1e-9));
    }
    SUBCASE("bottom-heavy law") {
        std::vector<double> w(15, 0.0);
        w.front() = 0.05;
        w.back() = 0.95;
        const RankMarginalProfile mn{0, w};
        CHECK(oracle::rm_rank_variance(mn, m) == doctest::Approx(9.31).epsilon(1e-9));
        CHECK(oracle::rm_divisiveness(mn, m) == doctest::Approx(14.0).epsilon(1e-9));
        CHECK(oracle::rm_agreement_index(mn, m) == doctest::Approx(0.12).epsilon(1e-9));
    }
    SUBCASE("rank-law route agrees with full expansion at small m") {
        const RankMarginalProfile rm{0, {0.3, 0.1, 0.2, 0.4}};
        const auto t = oracle::enumerate_profile(Profile::rank_marginal(4, 0, rm.w));
        CHECK(oracle::rm_rank_variance(rm, 4) == doctest::Approx(oracle::rank_variance(t, 0)).epsilon(1e-12));
        CHECK(oracle::rm_divisiveness(rm, 4) == doctest::Approx(oracle::divisiveness(t, 0)).epsilon(1e-12));
        CHECK(oracle::rm_agreement_index(rm, 4) ==
              doctest::Approx(oracle::agreement_index(t)).epsilon(1e-12));
    }
}

TEST_CASE("string dispatch") {
    const auto t = oracle::enumerate_profile(generate(GeneratorSpec::impartial_culture(3), 0));
    CHECK(oracle::brute("pairwise", t, {}, 0, 1, 0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(oracle::brute("var", t, {}, 0, 0, 0) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(oracle::brute("rank_prob", t, {}, 0, 0, 2) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK_THROWS_AS(oracle::brute("nope", t, {}, 0, 0, 0), DomainError);
}

TEST_CASE("positivity violations are refused, mirroring the closed forms") {
    const auto t = oracle::enumerate_profile(Profile::point_mass(rk({0, 1, 2})));
    CHECK_THROWS_AS(oracle::divisiveness(t, 0), PositivityError);
    CHECK_THROWS_AS(oracle::rank_gap_given(t, 0, 1, false), PositivityError);
}
