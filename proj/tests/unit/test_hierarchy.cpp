#include "helpers.hpp"
#include "plurmat/combin.hpp"
#include "plurmat/errors.hpp"
#include "plurmat/hierarchy.hpp"
#include "plurmat/moments.hpp"
#include "plurmat/oracle.hpp"

#include <doctest.h>

#include <cmath>

using namespace plurmat;

TEST_CASE("focal entry of the rank-marginal family") {
    SUBCASE("uniform law gives 1/s at every size") {
        const std::vector<double> w(5, 0.2);
        for (int s = 2; s <= 5; ++s)
            CHECK(rank_marginal_focal_entry(w, 5, s) == doctest::Approx(1.0 / s).epsilon(1e-12));
    }
    SUBCASE("top-concentrated law tops everything") {
        const std::vector<double> w{1.0, 0.0, 0.0, 0.0};
        for (int s = 2; s <= 4; ++s)
            CHECK(rank_marginal_focal_entry(w, 4, s) == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("shifted witness law at size 4") {
        const std::vector<double> w{3.0 / 20, 7.0 / 20, 1.0 / 20, 5.0 / 20, 4.0 / 20};
        CHECK(rank_marginal_focal_entry(w, 5, 4) == doctest::Approx(19.0 / 80).epsilon(1e-12));
    }
    SUBCASE("agrees with sampling inside Monte Carlo bands") {
        const std::vector<double> w{0.5, 0.1, 0.0, 0.1, 0.3};
        const Profile p = Profile::rank_marginal(5, 0, w);
        const double analytic = rank_marginal_focal_entry(w, 5, 3);
        Rng rng(77);
        const std::vector<int> subset{0, 2, 4};
        const std::uint64_t n = 100000;
        std::uint64_t hits = 0;
        for (std::uint64_t i = 0; i < n; ++i)
            if (top_of(sample_one(p, rng), subset) == 0) ++hits;
        const double freq = static_cast<double>(hits) / static_cast<double>(n);
        const double sigma = std::sqrt(analytic * (1 - analytic) / static_cast<double>(n));
        CHECK(std::abs(freq - analytic) <= 3 * sigma);
    }
}

TEST_CASE("matching direction") {
    SUBCASE("d = 3 reproduces the (-1, 3, -3, 1, 0) direction") {
        const auto delta = matching_direction(3);
        REQUIRE(delta.size() == 5);
        const std::vector<long long> expect{-1, 3, -3, 1, 0};
        for (std::size_t j = 0; j < 5; ++j) {
            CHECK(delta[j].den == 1);
            CHECK(delta[j].num == expect[j]);
        }
    }
    SUBCASE("entries sum to zero and annihilate all matched degrees") {
        for (int d = 2; d <= 8; ++d) {
            const auto delta = matching_direction(d);
            const int m = d + 2;
            for (int s = 1; s <= d; ++s) {
                Rational acc(0);
                for (int j = 1; j <= m; ++j)
                    acc = acc + delta[static_cast<std::size_t>(j - 1)] *
                                    Rational(static_cast<long long>(binom(m - j, s - 1)));
                CHECK(acc.is_zero());
            }
            CHECK_FALSE(separation_value(delta, d).is_zero());
        }
    }
    SUBCASE("d = 2 annihilates the two matched functionals but not the third") {
        const auto delta = matching_direction(2);
        const int m = 4;
        Rational sum0(0), sum1(0), sep(0);
        for (int j = 1; j <= m; ++j) {
            sum0 = sum0 + delta[static_cast<std::size_t>(j - 1)];
            sum1 = sum1 + delta[static_cast<std::size_t>(j - 1)] * Rational(m - j);
            sep = sep + delta[static_cast<std::size_t>(j - 1)] *
                            Rational(static_cast<long long>(binom(m - j, 2)));
        }
        CHECK(sum0.is_zero());
        CHECK(sum1.is_zero());
        CHECK_FALSE(sep.is_zero());
    }
}

TEST_CASE("witness construction") {
    SUBCASE("the d = 3 witness with t = 1/20") {
        const WitnessPair wp = build_witness(3, 1.0 / 20.0);
        const std::vector<double> expect{3.0 / 20, 7.0 / 20, 1.0 / 20, 5.0 / 20, 4.0 / 20};
        REQUIRE(wp.w_prime.size() == 5);
        for (std::size_t j = 0; j < 5; ++j)
            CHECK(wp.w_prime[j] == doctest::Approx(expect[j]).epsilon(1e-12));
        CHECK(rank_marginal_focal_entry(wp.w, 5, 4) == doctest::Approx(0.25).epsilon(1e-12));
        CHECK(rank_marginal_focal_entry(wp.w_prime, 5, 4) == doctest::Approx(19.0 / 80).epsilon(1e-12));
    }
    SUBCASE("default step keeps every entry at least 0.01") {
        for (int d = 2; d <= 6; ++d) {
            const WitnessPair wp = build_witness(d);
            for (double x : wp.w_prime) CHECK(x >= 0.01 - 1e-12);
            double total = 0.0;
            for (double x : wp.w_prime) total += x;
            CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
        }
    }
    SUBCASE("oversized steps are rejected") {
        CHECK_THROWS_AS(build_witness(3, 10.0), DomainError);
    }
}

TEST_CASE("verify_agreement") {
    SUBCASE("the two m=3 reference profiles split exactly at degree 3") {
        const Profile ic = generate(GeneratorSpec::impartial_culture(3), 0);
        const Profile an = antagonism_two_bloc(3, 0);
        const auto rep = verify_agreement(ic, an, 3, 1e-9);
        CHECK(rep.max_gap.at(2) == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(rep.max_gap.at(3) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
        CHECK(rep.first_divergent_degree == 3);
    }
    SUBCASE("a profile agrees with itself everywhere") {
        const Profile ic = generate(GeneratorSpec::impartial_culture(4), 0);
        const auto rep = verify_agreement(ic, ic, 4, 1e-12);
        for (const auto& [k, gap] : rep.max_gap) CHECK(gap == doctest::Approx(0.0));
        CHECK(rep.first_divergent_degree == 0);
    }
    SUBCASE("witness pairs diverge first at degree d+1") {
        for (int d = 2; d <= 5; ++d) {
            const WitnessPair wp = build_witness(d);
            const auto rep =
                verify_agreement(wp.base_profile(), wp.shifted_profile(), wp.m, 1e-9);
            CHECK(rep.first_divergent_degree == d + 1);
            for (int k = 2; k <= d; ++k) CHECK(rep.max_gap.at(k) <= 1e-9);
            CHECK(rep.max_gap.at(d + 1) > 1e-9);
        }
    }
}

TEST_CASE("moment separation across a witness pair") {
    // Moments below the matched degree coincide; at the matched degree
    // they differ by exactly d! times the aggregate gap.
    for (int d = 2; d <= 5; ++d) {
        const WitnessPair wp = build_witness(d);
        const auto agg_w = aggregate_vector(wp.base_profile(), 0);
        const auto agg_wp = aggregate_vector(wp.shifted_profile(), 0);
        for (int s = 2; s < d; ++s)
            CHECK(central_moment(agg_w, s) == doctest::Approx(central_moment(agg_wp, s)).epsilon(1e-9));
        const double moment_gap = std::abs(central_moment(agg_w, d) - central_moment(agg_wp, d));
        const double aggregate_gap = std::abs(agg_w.P[static_cast<std::size_t>(d)] -
                                              agg_wp.P[static_cast<std::size_t>(d)]);
        double dfact = 1.0;
        for (int i = 2; i <= d; ++i) dfact *= i;
        CHECK(moment_gap == doctest::Approx(dfact * aggregate_gap).epsilon(1e-9));
        CHECK(moment_gap > 1e-9);
    }
}
