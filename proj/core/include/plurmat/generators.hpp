#pragma once

#include "plurmat/profile.hpp"
#include "plurmat/rng.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace plurmat {

struct MallowsParams {
    Ranking center;
    double dispersion = 1.0; // phi in (0, 1]; 1 is impartial culture
};

struct GeneratorSpec {
    enum class Kind {
        ImpartialCulture,
        Mallows,
        MallowsMixture,
        PlackettLuce,
        WalshSinglePeaked,
        Euclidean,
        Antagonism,
        Custom, // rank-marginal family with an explicit rank law
    };

    int m = 0;
    Kind kind = Kind::ImpartialCulture;
    std::uint64_t seed = 0;

    MallowsParams mallows;                                  // Mallows
    std::vector<std::pair<double, MallowsParams>> mixture;  // MallowsMixture, weights sum to 1
    std::vector<double> strengths;                          // PlackettLuce, all > 0
    Ranking axis;                                           // WalshSinglePeaked
    int dimension = 2;                                      // Euclidean
    int focal = 0;                                          // Antagonism / Custom
    std::vector<double> rank_law;                           // Custom

    static GeneratorSpec impartial_culture(int m, std::uint64_t seed = 0);
    static GeneratorSpec mallows_model(int m, Ranking center, double dispersion, std::uint64_t seed = 0);
    // Mixture with the given dispersion, equal weights, centers drawn
    // uniformly from the seed.
    static GeneratorSpec mallows_mixture(int m, int components, double dispersion, std::uint64_t seed = 0);
    static GeneratorSpec plackett_luce(std::vector<double> strengths, std::uint64_t seed = 0);
    // Strengths 1..m.
    static GeneratorSpec plackett_luce_linear(int m, std::uint64_t seed = 0);
    static GeneratorSpec walsh(int m, std::uint64_t seed = 0); // identity axis
    static GeneratorSpec walsh_axis(Ranking axis, std::uint64_t seed = 0);
    static GeneratorSpec euclidean(int m, int dimension, std::uint64_t seed = 0);
    static GeneratorSpec antagonism(int m, int focal = 0, std::uint64_t seed = 0);
    static GeneratorSpec custom(int m, int focal, std::vector<double> rank_law, std::uint64_t seed = 0);

    void validate() const;
};

// n == 0 requests the analytic profile (available for ImpartialCulture,
// Antagonism, Custom at any m, and PlackettLuce at m <= 8); n > 0 draws
// that many voters. Identical (spec, n) gives identical output.
Profile generate(const GeneratorSpec& spec, std::uint64_t n);

// n i.i.d. rankings from the profile.
std::vector<Ranking> sample_voters(const Profile& profile, std::uint64_t n, std::uint64_t seed);

// Single voter draw used by protocol simulation.
Ranking sample_one(const Profile& profile, Rng& rng);

// Two-bloc antagonism profile: half the population ranks the focal
// alternative first and the remaining alternatives in descending index
// order, the other half ranks them in ascending order with the focal
// alternative last. Every pairwise proportion is 1/2.
Profile antagonism_two_bloc(int m, int focal = 0);

} // namespace plurmat
