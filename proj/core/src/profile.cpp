#include "plurmat/profile.hpp"

#include "plurmat/errors.hpp"

#include <cmath>

namespace plurmat {

Profile Profile::exact(int m, std::map<Ranking, double> mass) {
    if (m < 2) throw DomainError("Profile: need m >= 2");
    if (mass.empty()) throw DomainError("Profile: empty exact table");
    double total = 0.0;
    for (const auto& [r, p] : mass) {
        if (!r.is_complete(m)) throw DomainError("Profile: ranking is not a permutation of 0.." + std::to_string(m - 1));
        if (p < 0) throw DomainError("Profile: negative probability");
        total += p;
    }
    if (std::abs(total - 1.0) > 1e-12) throw DomainError("Profile: exact probabilities sum to " + std::to_string(total));
    return Profile(m, ExactProfile{std::move(mass)});
}

Profile Profile::sampled(int m, std::vector<std::pair<Ranking, double>> votes) {
    if (m < 2) throw DomainError("Profile: need m >= 2");
    double total = 0.0;
    for (const auto& [r, w] : votes) {
        if (!r.is_complete(m)) throw DomainError("Profile: ballot is not a permutation of 0.." + std::to_string(m - 1));
        if (w < 0) throw DomainError("Profile: negative ballot weight");
        total += w;
    }
    if (!(total > 0)) throw DomainError("Profile: total ballot weight must be positive");
    return Profile(m, SampledProfile{std::move(votes), total});
}

Profile Profile::rank_marginal(int m, int focal, std::vector<double> w) {
    if (m < 2) throw DomainError("Profile: need m >= 2");
    if (focal < 0 || focal >= m) throw DomainError("Profile: focal index out of range");
    if (static_cast<int>(w.size()) != m) throw DomainError("Profile: rank law must have length m");
    double total = 0.0;
    for (double x : w) {
        if (x < 0) throw DomainError("Profile: negative rank-law entry");
        total += x;
    }
    if (std::abs(total - 1.0) > 1e-12) throw DomainError("Profile: rank law sums to " + std::to_string(total));
    return Profile(m, RankMarginalProfile{focal, std::move(w)});
}

Profile Profile::point_mass(const Ranking& r) {
    std::map<Ranking, double> mass;
    mass.emplace(r, 1.0);
    return exact(r.size(), std::move(mass));
}

Profile::Kind Profile::kind() const {
    if (std::holds_alternative<ExactProfile>(data_)) return Kind::Exact;
    if (std::holds_alternative<SampledProfile>(data_)) return Kind::Sampled;
    return Kind::RankMarginal;
}

const ExactProfile& Profile::exact_data() const {
    if (kind() != Kind::Exact) throw DomainError("Profile: not an exact profile");
    return std::get<ExactProfile>(data_);
}

const SampledProfile& Profile::sampled_data() const {
    if (kind() != Kind::Sampled) throw DomainError("Profile: not a sampled profile");
    return std::get<SampledProfile>(data_);
}

const RankMarginalProfile& Profile::rank_marginal_data() const {
    if (kind() != Kind::RankMarginal) throw DomainError("Profile: not a rank-marginal profile");
    return std::get<RankMarginalProfile>(data_);
}

std::vector<std::pair<Ranking, double>> Profile::support() const {
    std::vector<std::pair<Ranking, double>> atoms;
    switch (kind()) {
    case Kind::Exact:
        for (const auto& [r, p] : exact_data().mass)
            if (p > 0) atoms.emplace_back(r, p);
        break;
    case Kind::Sampled: {
        const auto& s = sampled_data();
        for (const auto& [r, w] : s.votes)
            if (w > 0) atoms.emplace_back(r, w / s.total_weight);
        break;
    }
    case Kind::RankMarginal:
        throw DomainError("Profile: rank-marginal profiles have no finite listed support; expand analytically");
    }
    return atoms;
}

} // namespace plurmat
