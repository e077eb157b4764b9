#include "helpers.hpp"
#include "plurmat/errors.hpp"
#include "plurmat/measures.hpp"
#include "plurmat/oracle.hpp"
#include "plurmat/rules.hpp"

#include <doctest.h>

#include <cmath>

using namespace plurmat;
using plurmat::testing::polarized_pair_profile;
using plurmat::testing::rk;

namespace {

PluralityMatrix matrix23(const Profile& p) { return plurality_matrix(p, {2, 3}); }

Profile ic(int m) { return generate(GeneratorSpec::impartial_culture(m), 0); }

Profile min_profile(int m, double eps1) {
    std::vector<double> w(static_cast<std::size_t>(m), 0.0);
    w.front() = eps1;
    w.back() = 1.0 - eps1;
    return Profile::rank_marginal(m, 0, std::move(w));
}

} // namespace

TEST_CASE("agreement index") {
    CHECK(agreement_index(matrix23(ic(15))) == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(agreement_index(matrix23(min_profile(15, 0.05))) == doctest::Approx(0.12).epsilon(1e-9));
    CHECK(agreement_index(matrix23(Profile::point_mass(Ranking::identity(4)))) ==
          doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("agreement index is 1 exactly when every pair is unanimous") {
    Rng rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        const Profile p = plurmat::testing::random_exact_profile(4, rng);
        const double a = agreement_index(matrix23(p));
        CHECK(a >= 0.0);
        CHECK(a < 1.0); // full-support profiles never reach unanimity
    }
}

TEST_CASE("borda score") {
    CHECK(borda_score(matrix23(Profile::point_mass(rk({0, 1, 2}))), 0) == doctest::Approx(2.0));
    CHECK(borda_score(matrix23(ic(15)), 0) == doctest::Approx(7.0).epsilon(1e-9));
    CHECK(borda_score(matrix23(generate(GeneratorSpec::antagonism(15, 0), 0)), 0) ==
          doctest::Approx(7.0).epsilon(1e-9));
}

TEST_CASE("rank variance closed form") {
    CHECK(rank_variance(matrix23(ic(15)), 0) == doctest::Approx(224.0 / 12.0).epsilon(1e-9));
    CHECK(rank_variance(matrix23(generate(GeneratorSpec::antagonism(15, 0), 0)), 0) ==
          doctest::Approx(49.0).epsilon(1e-9));
    CHECK(rank_variance(matrix23(min_profile(15, 0.05)), 0) == doctest::Approx(9.31).epsilon(1e-9));
}

TEST_CASE("divisiveness closed form") {
    CHECK(divisiveness(matrix23(generate(GeneratorSpec::antagonism(15, 0), 0)), 0) ==
          doctest::Approx(14.0).epsilon(1e-9));
    CHECK(divisiveness(matrix23(ic(15)), 0) == doctest::Approx(16.0 / 3.0).epsilon(1e-9));
    CHECK(divisiveness(matrix23(min_profile(15, 0.05)), 0) == doctest::Approx(14.0).epsilon(1e-9));
    CHECK_THROWS_AS(divisiveness(matrix23(Profile::point_mass(Ranking::identity(3))), 0),
                    PositivityError);
}

TEST_CASE("alpha divisiveness") {
    const PluralityMatrix an = matrix23(generate(GeneratorSpec::antagonism(15, 0), 0));
    SUBCASE("alpha = 0 recovers divisiveness") {
        CHECK(alpha_divisiveness(an, 0, 0.0) == doctest::Approx(divisiveness(an, 0)).epsilon(1e-12));
    }
    SUBCASE("alpha = 1 weights the gap by p(1-p) = 1/4") {
        CHECK(alpha_divisiveness(an, 0, 1.0) == doctest::Approx(3.5).epsilon(1e-9));
    }
    SUBCASE("matches the enumeration oracle on impartial culture m=5") {
        const Profile p = ic(5);
        const auto table = oracle::enumerate_profile(p);
        const PluralityMatrix matrix = matrix23(p);
        for (int a = 0; a < 5; ++a)
            CHECK(alpha_divisiveness(matrix, a, 1.0) ==
                  doctest::Approx(oracle::alpha_divisiveness(table, a, 1.0)).epsilon(1e-9));
    }
}

TEST_CASE("kt diversity and the generalized family") {
    const PluralityMatrix icm = matrix23(ic(3));
    CHECK(kt_diversity(matrix23(Profile::point_mass(Ranking::identity(3)))) ==
          doctest::Approx(0.0).epsilon(1e-12));
    CHECK(kt_diversity(icm) == doctest::Approx(1.5).epsilon(1e-9));
    const double pairs = 3.0;
    CHECK(generalized_polarization(icm, [pairs](double p) { return std::abs(2 * p - 1) / pairs; }) ==
          doctest::Approx(agreement_index(icm)).epsilon(1e-12));
}

TEST_CASE("pair conflict") {
    SUBCASE("deterministic gap on a unanimous profile") {
        const PairConflict pc = pair_conflict(matrix23(Profile::point_mass(Ranking::identity(3))), 0, 2);
        CHECK(pc.delta == doctest::Approx(2.0).epsilon(1e-9));
        CHECK(pc.alpha == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(pc.degenerate()); // p = 1 leaves the conditional gaps undefined
        CHECK_THROWS_AS(pc.gap_below(), PositivityError);
    }
    SUBCASE("fully reversed pair") {
        const PairConflict pc = pair_conflict(matrix23(polarized_pair_profile(3)), 0, 2);
        CHECK(pc.alpha == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(pc.delta == doctest::Approx(2.0).epsilon(1e-9));
    }
    SUBCASE("law of total expectation ties the conditional gaps together") {
        Rng rng(11);
        for (int trial = 0; trial < 25; ++trial) {
            const Profile p = plurmat::testing::random_exact_profile(4, rng);
            const PluralityMatrix matrix = matrix23(p);
            for (int a = 0; a < 4; ++a)
                for (int b = a + 1; b < 4; ++b) {
                    const PairConflict pc = pair_conflict(matrix, a, b);
                    CHECK(pc.p_ab * pc.gap_above() + (1 - pc.p_ab) * pc.gap_below() ==
                          doctest::Approx(pc.delta).epsilon(1e-9));
                }
        }
    }
    SUBCASE("balance is symmetric in the pair") {
        Rng rng(13);
        const Profile p = plurmat::testing::random_exact_profile(4, rng);
        const PluralityMatrix matrix = matrix23(p);
        const PairConflict xy = pair_conflict(matrix, 1, 3);
        const PairConflict yx = pair_conflict(matrix, 3, 1);
        CHECK(xy.balance() == doctest::Approx(yx.balance()).epsilon(1e-9));
        CHECK(xy.max_nash == doctest::Approx(yx.max_nash).epsilon(1e-9));
    }
}

TEST_CASE("most conflictual pair") {
    SUBCASE("unanimity scores zero everywhere under max_swap") {
        const auto sel =
            most_conflictual_pair(matrix23(Profile::point_mass(Ranking::identity(4))), ConflictRule::MaxSwap);
        CHECK(sel.score == doctest::Approx(0.0).epsilon(1e-9));
        CHECK(sel.pair == std::pair<int, int>{0, 1}); // lexicographic tie-break
        CHECK(sel.tie);
    }
    SUBCASE("reversal pair dominates under p_max_polar") {
        const auto sel =
            most_conflictual_pair(matrix23(polarized_pair_profile(3)), ConflictRule::PMaxPolar, 1.0);
        CHECK(sel.pair == std::pair<int, int>{0, 2});
        CHECK(sel.score == doctest::Approx(1.0).epsilon(1e-9));
    }
    SUBCASE("identical matrices select identical pairs") {
        Rng rng(17);
        const Profile p = plurmat::testing::random_exact_profile(4, rng);
        const auto s1 = most_conflictual_pair(matrix23(p), ConflictRule::MaxSum);
        const auto s2 = most_conflictual_pair(matrix23(p), ConflictRule::MaxSum);
        CHECK(s1.pair == s2.pair);
    }
}

TEST_CASE("level separation: degree-2 measures blind, degree-3 measures not") {
    const PluralityMatrix mic = matrix23(ic(3));
    const PluralityMatrix man = matrix23(antagonism_two_bloc(3, 0));
    CHECK(agreement_index(mic) == doctest::Approx(agreement_index(man)).epsilon(1e-12));
    CHECK(borda_score(mic, 0) == doctest::Approx(borda_score(man, 0)).epsilon(1e-12));
    CHECK(copeland(mic).scores == copeland(man).scores);
    CHECK(minimax(mic).scores == minimax(man).scores);
    CHECK(std::abs(rank_variance(mic, 0) - rank_variance(man, 0)) ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-9));
    CHECK(std::abs(divisiveness(mic, 0) - divisiveness(man, 0)) > 0.1);
}

TEST_CASE("tournament rules") {
    SUBCASE("unanimity") {
        const PluralityMatrix matrix = matrix23(Profile::point_mass(rk({0, 1, 2})));
        CHECK(copeland(matrix).scores[0] == doctest::Approx(2.0));
        CHECK(copeland(matrix).winner() == 0);
        CHECK(kemeny(matrix).ranking.value() == rk({0, 1, 2}));
    }
    SUBCASE("three-cycle zeroes every Copeland score") {
        PluralityMatrix matrix(3, PluralityMatrix::Provenance::Exact);
        matrix.set_row({0, 1}, {0.6, 0.4});
        matrix.set_row({1, 2}, {0.6, 0.4});
        matrix.set_row({0, 2}, {0.4, 0.6});
        const auto cop = copeland(matrix);
        for (double s : cop.scores) CHECK(s == doctest::Approx(0.0));
        CHECK(cop.tie);
    }
    SUBCASE("impartial culture minimax is 1/2 for everyone") {
        for (double s : minimax(matrix23(ic(4))).scores) CHECK(s == doctest::Approx(0.5).epsilon(1e-9));
    }
    SUBCASE("kemeny refuses m > 8") {
        const Profile big = Profile::rank_marginal(9, 0, std::vector<double>(9, 1.0 / 9));
        CHECK_THROWS_AS(kemeny(plurality_matrix(big, {2})), ResourceError);
    }
}

TEST_CASE("k-wise ranking rule") {
    SUBCASE("k = 2 agrees with the pairwise rule") {
        Rng rng(29);
        for (int trial = 0; trial < 10; ++trial) {
            const Profile p = plurmat::testing::random_exact_profile(4, rng);
            CHECK(kwise_kemeny(p, 2).ranking.value() == kemeny(matrix23(p)).ranking.value());
        }
    }
    SUBCASE("unanimous profile selects the unanimous ranking at any k") {
        const Profile p = Profile::point_mass(rk({2, 0, 1}));
        for (int k = 2; k <= 3; ++k) CHECK(kwise_kemeny(p, k).ranking.value() == rk({2, 0, 1}));
    }
    SUBCASE("antagonism ties are broken lexicographically") {
        const auto r = kwise_kemeny(antagonism_two_bloc(3, 0), 3);
        CHECK(r.ranking.value() == rk({0, 1, 2}));
        CHECK(r.tie);
    }
    SUBCASE("refuses m > 7") {
        const Profile big = Profile::rank_marginal(8, 0, std::vector<double>(8, 1.0 / 8));
        CHECK_THROWS_AS(kwise_kemeny(big, 3), ResourceError);
    }
}

TEST_CASE("positional and runoff rules") {
    SUBCASE("unanimity elects the top everywhere") {
        const Profile p = Profile::point_mass(rk({0, 1, 2}));
        for (const auto& r : positional_rules(p, 2)) CHECK(r.winner() == 0);
    }
    SUBCASE("rules blind to positions below their cutoff tie and break by index") {
        // Top alternative is 1; 2-approval and anti-plurality cannot
        // separate ranks 1 and 2, so {0, 1} tie and index order wins.
        const Profile p = Profile::point_mass(rk({1, 0, 2}));
        CHECK(plurality_rule(p).winner() == 1);
        CHECK(bucklin_rule(p).winner() == 1);
        CHECK(stv_rule(p).winner() == 1);
        const auto ka = k_approval_rule(p, 2);
        CHECK(ka.tie);
        CHECK(ka.winners == std::vector<int>{0, 1});
        CHECK(anti_plurality_rule(p).tie);
    }
    SUBCASE("two-bloc antagonism plurality tie resolves to the focal alternative") {
        const auto r = plurality_rule(antagonism_two_bloc(3, 0));
        CHECK(r.scores[0] == doctest::Approx(0.5).epsilon(1e-9));
        CHECK(r.scores[1] == doctest::Approx(0.5).epsilon(1e-9));
        CHECK(r.scores[2] == doctest::Approx(0.0).epsilon(1e-9));
        CHECK(r.winner() == 0);
        CHECK(r.tie);
    }
    SUBCASE("impartial culture reaches a Bucklin majority at depth 2 for m=3") {
        const auto r = bucklin_rule(ic(3));
        for (double d : r.scores) CHECK(d == doctest::Approx(2.0));
    }
    SUBCASE("winners match the definitional oracle on random profiles") {
        Rng rng(41);
        for (int trial = 0; trial < 10; ++trial) {
            const Profile p = plurmat::testing::random_exact_profile(4, rng);
            const auto table = oracle::enumerate_profile(p);
            CHECK(plurality_rule(p).winner() == oracle::plurality_winner(table));
            CHECK(anti_plurality_rule(p).winner() == oracle::anti_plurality_winner(table));
            CHECK(k_approval_rule(p, 2).winner() == oracle::k_approval_winner(table, 2));
            CHECK(bucklin_rule(p).winner() == oracle::bucklin_winner(table));
            CHECK(stv_rule(p).winner() == oracle::stv_winner(table));
            CHECK(copeland(matrix23(p)).winner() == oracle::copeland_winner(table));
            CHECK(minimax(matrix23(p)).winner() == oracle::minimax_winner(table));
            CHECK(kemeny(matrix23(p)).ranking.value() == oracle::kemeny_ranking(table));
        }
    }
}
