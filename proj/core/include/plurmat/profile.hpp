#pragma once

#include "plurmat/ranking.hpp"

#include <map>
#include <variant>
#include <vector>

namespace plurmat {

// Distribution over rankings given by an explicit probability table.
// The support may be sparse; probabilities are >= 0 and sum to 1.
struct ExactProfile {
    std::map<Ranking, double> mass;
};

// Finite list of weighted ballots; total weight > 0.
struct SampledProfile {
    std::vector<std::pair<Ranking, double>> votes;
    double total_weight = 0.0;
};

// One focal alternative's rank follows the law w (w[j] = Pr[rank = j+1]);
// the remaining alternatives fill the other positions uniformly.
struct RankMarginalProfile {
    int focal = 0;
    std::vector<double> w;
};

class Profile {
public:
    enum class Kind { Exact, Sampled, RankMarginal };

    static Profile exact(int m, std::map<Ranking, double> mass);
    static Profile sampled(int m, std::vector<std::pair<Ranking, double>> votes);
    static Profile rank_marginal(int m, int focal, std::vector<double> w);
    static Profile point_mass(const Ranking& r);

    int m() const { return m_; }
    Kind kind() const;

    const ExactProfile& exact_data() const;
    const SampledProfile& sampled_data() const;
    const RankMarginalProfile& rank_marginal_data() const;

    // Support atoms with their probabilities, normalized. Exact and
    // Sampled profiles only; RankMarginal callers expand analytically.
    std::vector<std::pair<Ranking, double>> support() const;

private:
    Profile(int m, std::variant<ExactProfile, SampledProfile, RankMarginalProfile> data)
        : m_(m), data_(std::move(data)) {}

    int m_ = 0;
    std::variant<ExactProfile, SampledProfile, RankMarginalProfile> data_;
};

} // namespace plurmat
