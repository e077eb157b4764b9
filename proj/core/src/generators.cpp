#include "plurmat/generators.hpp"

#include "plurmat/combin.hpp"
#include "plurmat/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace plurmat {

namespace {

void check_m(int m) {
    if (m < 2) throw DomainError("GeneratorSpec: need m >= 2");
}

std::vector<Ranking> all_rankings(int m) {
    std::vector<int> order(static_cast<std::size_t>(m));
    std::iota(order.begin(), order.end(), 0);
    std::vector<Ranking> out;
    do {
        out.emplace_back(order);
    } while (std::next_permutation(order.begin(), order.end()));
    return out;
}

Ranking random_ranking(int m, Rng& rng) {
    std::vector<int> order(static_cast<std::size_t>(m));
    std::iota(order.begin(), order.end(), 0);
    rng.shuffle(order);
    return Ranking(std::move(order));
}

// Repeated-insertion sampling: item j of the center goes to slot i with
// probability proportional to phi^(j - i), so the bottom slot keeps the
// center's order.
Ranking sample_mallows(const MallowsParams& p, Rng& rng) {
    const int m = p.center.size();
    std::vector<int> cur;
    cur.reserve(static_cast<std::size_t>(m));
    std::vector<double> cum;
    for (int j = 0; j < m; ++j) {
        cum.assign(static_cast<std::size_t>(j) + 1, 0.0);
        double acc = 0.0;
        for (int i = 0; i <= j; ++i) {
            acc += std::pow(p.dispersion, j - i);
            cum[static_cast<std::size_t>(i)] = acc;
        }
        const int slot = static_cast<int>(rng.categorical(cum));
        cur.insert(cur.begin() + slot, p.center.at(j));
    }
    return Ranking(std::move(cur));
}

Ranking sample_plackett_luce(const std::vector<double>& strengths, Rng& rng) {
    const int m = static_cast<int>(strengths.size());
    std::vector<int> remaining(static_cast<std::size_t>(m));
    std::iota(remaining.begin(), remaining.end(), 0);
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(m));
    std::vector<double> cum;
    while (!remaining.empty()) {
        cum.resize(remaining.size());
        double acc = 0.0;
        for (std::size_t i = 0; i < remaining.size(); ++i) {
            acc += strengths[static_cast<std::size_t>(remaining[i])];
            cum[i] = acc;
        }
        const std::size_t pick = rng.categorical(cum);
        order.push_back(remaining[pick]);
        remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(pick));
    }
    return Ranking(std::move(order));
}

// Uniform draw over the 2^(m-1) rankings single-peaked on the axis:
// build the ranking bottom-up, taking the leftmost or rightmost
// remaining axis element with probability 1/2 each.
Ranking sample_walsh(const Ranking& axis, Rng& rng) {
    int lo = 0;
    int hi = axis.size() - 1;
    std::vector<int> bottom_up;
    bottom_up.reserve(static_cast<std::size_t>(axis.size()));
    while (lo <= hi) {
        if (lo == hi) {
            bottom_up.push_back(axis.at(lo));
            break;
        }
        if (rng.uniform01() < 0.5)
            bottom_up.push_back(axis.at(lo++));
        else
            bottom_up.push_back(axis.at(hi--));
    }
    std::reverse(bottom_up.begin(), bottom_up.end());
    return Ranking(std::move(bottom_up));
}

Ranking ranking_by_distance(const std::vector<std::vector<double>>& alt_points,
                            const std::vector<double>& voter_point) {
    const int m = static_cast<int>(alt_points.size());
    std::vector<std::pair<double, int>> keyed;
    keyed.reserve(static_cast<std::size_t>(m));
    for (int a = 0; a < m; ++a) {
        double d2 = 0.0;
        for (std::size_t t = 0; t < voter_point.size(); ++t) {
            const double diff = alt_points[static_cast<std::size_t>(a)][t] - voter_point[t];
            d2 += diff * diff;
        }
        keyed.emplace_back(d2, a);
    }
    std::sort(keyed.begin(), keyed.end()); // distance ties broken by index
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(m));
    for (const auto& [d2, a] : keyed) order.push_back(a);
    return Ranking(std::move(order));
}

std::vector<double> antagonism_law(int m) {
    std::vector<double> w(static_cast<std::size_t>(m), 0.0);
    w.front() = 0.5;
    w.back() = 0.5;
    return w;
}

Ranking sample_rank_marginal(const RankMarginalProfile& rm, int m, Rng& rng) {
    std::vector<double> cum(rm.w.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < rm.w.size(); ++i) {
        acc += rm.w[i];
        cum[i] = acc;
    }
    const int focal_pos = static_cast<int>(rng.categorical(cum));
    std::vector<int> others;
    others.reserve(static_cast<std::size_t>(m) - 1);
    for (int a = 0; a < m; ++a)
        if (a != rm.focal) others.push_back(a);
    rng.shuffle(others);
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(m));
    std::size_t next_other = 0;
    for (int pos = 0; pos < m; ++pos) {
        if (pos == focal_pos)
            order.push_back(rm.focal);
        else
            order.push_back(others[next_other++]);
    }
    return Ranking(std::move(order));
}

struct EuclideanLayout {
    std::vector<std::vector<double>> alt_points;
};

EuclideanLayout euclidean_layout(int m, int dim, Rng& rng) {
    EuclideanLayout layout;
    layout.alt_points.assign(static_cast<std::size_t>(m), std::vector<double>(static_cast<std::size_t>(dim)));
    for (auto& pt : layout.alt_points)
        for (auto& x : pt) x = rng.uniform01();
    return layout;
}

} // namespace

GeneratorSpec GeneratorSpec::impartial_culture(int m, std::uint64_t seed) {
    GeneratorSpec s;
    s.m = m;
    s.kind = Kind::ImpartialCulture;
    s.seed = seed;
    return s;
}

GeneratorSpec GeneratorSpec::mallows_model(int m, Ranking center, double dispersion, std::uint64_t seed) {
    GeneratorSpec s;
    s.m = m;
    s.kind = Kind::Mallows;
    s.seed = seed;
    s.mallows = MallowsParams{std::move(center), dispersion};
    return s;
}

GeneratorSpec GeneratorSpec::mallows_mixture(int m, int components, double dispersion, std::uint64_t seed) {
    if (components < 1) throw DomainError("mallows_mixture: need at least one component");
    GeneratorSpec s;
    s.m = m;
    s.kind = Kind::MallowsMixture;
    s.seed = seed;
    Rng rng(splitmix64(seed) ^ 0xC2B2AE3D27D4EB4FULL);
    const double w = 1.0 / components;
    for (int c = 0; c < components; ++c)
        s.mixture.emplace_back(w, MallowsParams{random_ranking(m, rng), dispersion});
    return s;
}

GeneratorSpec GeneratorSpec::plackett_luce(std::vector<double> strengths, std::uint64_t seed) {
    GeneratorSpec s;
    s.m = static_cast<int>(strengths.size());
    s.kind = Kind::PlackettLuce;
    s.seed = seed;
    s.strengths = std::move(strengths);
    return s;
}

GeneratorSpec GeneratorSpec::plackett_luce_linear(int m, std::uint64_t seed) {
    std::vector<double> v(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) v[static_cast<std::size_t>(i)] = i + 1.0;
    return plackett_luce(std::move(v), seed);
}

GeneratorSpec GeneratorSpec::walsh(int m, std::uint64_t seed) { return walsh_axis(Ranking::identity(m), seed); }

GeneratorSpec GeneratorSpec::walsh_axis(Ranking axis, std::uint64_t seed) {
    GeneratorSpec s;
    s.m = axis.size();
    s.kind = Kind::WalshSinglePeaked;
    s.seed = seed;
    s.axis = std::move(axis);
    return s;
}

GeneratorSpec GeneratorSpec::euclidean(int m, int dimension, std::uint64_t seed) {
    GeneratorSpec s;
    s.m = m;
    s.kind = Kind::Euclidean;
    s.seed = seed;
    s.dimension = dimension;
    return s;
}

GeneratorSpec GeneratorSpec::antagonism(int m, int focal, std::uint64_t seed) {
    GeneratorSpec s;
    s.m = m;
    s.kind = Kind::Antagonism;
    s.seed = seed;
    s.focal = focal;
    return s;
}

GeneratorSpec GeneratorSpec::custom(int m, int focal, std::vector<double> rank_law, std::uint64_t seed) {
    GeneratorSpec s;
    s.m = m;
    s.kind = Kind::Custom;
    s.seed = seed;
    s.focal = focal;
    s.rank_law = std::move(rank_law);
    return s;
}

void GeneratorSpec::validate() const {
    check_m(m);
    switch (kind) {
    case Kind::ImpartialCulture:
        break;
    case Kind::Mallows:
        if (!mallows.center.is_complete(m)) throw DomainError("Mallows: center must be a full ranking");
        if (!(mallows.dispersion > 0.0) || mallows.dispersion > 1.0)
            throw DomainError("Mallows: dispersion must lie in (0, 1]");
        break;
    case Kind::MallowsMixture: {
        if (mixture.empty()) throw DomainError("MallowsMixture: no components");
        double total = 0.0;
        for (const auto& [w, comp] : mixture) {
            if (w < 0) throw DomainError("MallowsMixture: negative weight");
            if (!comp.center.is_complete(m)) throw DomainError("MallowsMixture: center must be a full ranking");
            if (!(comp.dispersion > 0.0) || comp.dispersion > 1.0)
                throw DomainError("MallowsMixture: dispersion must lie in (0, 1]");
            total += w;
        }
        if (std::abs(total - 1.0) > 1e-12) throw DomainError("MallowsMixture: weights must sum to 1");
        break;
    }
    case Kind::PlackettLuce:
        if (static_cast<int>(strengths.size()) != m) throw DomainError("PlackettLuce: need one strength per alternative");
        for (double v : strengths)
            if (!(v > 0)) throw DomainError("PlackettLuce: strengths must be positive");
        break;
    case Kind::WalshSinglePeaked:
        if (!axis.is_complete(m)) throw DomainError("Walsh: axis must be a full ranking");
        break;
    case Kind::Euclidean:
        if (dimension < 1) throw DomainError("Euclidean: dimension must be >= 1");
        break;
    case Kind::Antagonism:
        if (focal < 0 || focal >= m) throw DomainError("Antagonism: focal index out of range");
        break;
    case Kind::Custom:
        if (focal < 0 || focal >= m) throw DomainError("Custom: focal index out of range");
        if (static_cast<int>(rank_law.size()) != m) throw DomainError("Custom: rank law must have length m");
        break;
    }
}

Profile generate(const GeneratorSpec& spec, std::uint64_t n) {
    spec.validate();
    const int m = spec.m;

    if (n == 0) {
        switch (spec.kind) {
        case GeneratorSpec::Kind::ImpartialCulture: {
            if (m <= 8) {
                std::map<Ranking, double> mass;
                const auto rankings = all_rankings(m);
                const double p = 1.0 / static_cast<double>(rankings.size());
                for (const auto& r : rankings) mass.emplace(r, p);
                return Profile::exact(m, std::move(mass));
            }
            // Same distribution, represented through its focal rank law.
            std::vector<double> w(static_cast<std::size_t>(m), 1.0 / m);
            return Profile::rank_marginal(m, 0, std::move(w));
        }
        case GeneratorSpec::Kind::Antagonism:
            return Profile::rank_marginal(m, spec.focal, antagonism_law(m));
        case GeneratorSpec::Kind::Custom:
            return Profile::rank_marginal(m, spec.focal, spec.rank_law);
        case GeneratorSpec::Kind::PlackettLuce: {
            if (m > 8) throw ResourceError("PlackettLuce: analytic profile limited to m <= 8; request samples instead");
            std::map<Ranking, double> mass;
            for (const auto& r : all_rankings(m)) {
                double p = 1.0;
                double denom = std::accumulate(spec.strengths.begin(), spec.strengths.end(), 0.0);
                for (int pos = 0; pos < m; ++pos) {
                    const double v = spec.strengths[static_cast<std::size_t>(r.at(pos))];
                    p *= v / denom;
                    denom -= v;
                }
                mass.emplace(r, p);
            }
            return Profile::exact(m, std::move(mass));
        }
        default:
            throw UnsupportedError("generate: no analytic profile for this generator; request n > 0 samples");
        }
    }

    Rng rng(spec.seed);
    std::vector<std::pair<Ranking, double>> votes;
    votes.reserve(static_cast<std::size_t>(n));

    switch (spec.kind) {
    case GeneratorSpec::Kind::ImpartialCulture:
        for (std::uint64_t i = 0; i < n; ++i) votes.emplace_back(random_ranking(m, rng), 1.0);
        break;
    case GeneratorSpec::Kind::Mallows:
        for (std::uint64_t i = 0; i < n; ++i) votes.emplace_back(sample_mallows(spec.mallows, rng), 1.0);
        break;
    case GeneratorSpec::Kind::MallowsMixture: {
        std::vector<double> cum(spec.mixture.size());
        double acc = 0.0;
        for (std::size_t c = 0; c < spec.mixture.size(); ++c) {
            acc += spec.mixture[c].first;
            cum[c] = acc;
        }
        for (std::uint64_t i = 0; i < n; ++i) {
            const std::size_t c = rng.categorical(cum);
            votes.emplace_back(sample_mallows(spec.mixture[c].second, rng), 1.0);
        }
        break;
    }
    case GeneratorSpec::Kind::PlackettLuce:
        for (std::uint64_t i = 0; i < n; ++i) votes.emplace_back(sample_plackett_luce(spec.strengths, rng), 1.0);
        break;
    case GeneratorSpec::Kind::WalshSinglePeaked:
        for (std::uint64_t i = 0; i < n; ++i) votes.emplace_back(sample_walsh(spec.axis, rng), 1.0);
        break;
    case GeneratorSpec::Kind::Euclidean: {
        const auto layout = euclidean_layout(m, spec.dimension, rng);
        std::vector<double> voter(static_cast<std::size_t>(spec.dimension));
        for (std::uint64_t i = 0; i < n; ++i) {
            for (auto& x : voter) x = rng.uniform01();
            votes.emplace_back(ranking_by_distance(layout.alt_points, voter), 1.0);
        }
        break;
    }
    case GeneratorSpec::Kind::Antagonism: {
        const RankMarginalProfile rm{spec.focal, antagonism_law(m)};
        for (std::uint64_t i = 0; i < n; ++i) votes.emplace_back(sample_rank_marginal(rm, m, rng), 1.0);
        break;
    }
    case GeneratorSpec::Kind::Custom: {
        const RankMarginalProfile rm{spec.focal, spec.rank_law};
        for (std::uint64_t i = 0; i < n; ++i) votes.emplace_back(sample_rank_marginal(rm, m, rng), 1.0);
        break;
    }
    }
    return Profile::sampled(m, std::move(votes));
}

Ranking sample_one(const Profile& profile, Rng& rng) {
    switch (profile.kind()) {
    case Profile::Kind::Exact: {
        const auto& mass = profile.exact_data().mass;
        std::vector<double> cum;
        cum.reserve(mass.size());
        std::vector<const Ranking*> keys;
        keys.reserve(mass.size());
        double acc = 0.0;
        for (const auto& [r, p] : mass) {
            acc += p;
            cum.push_back(acc);
            keys.push_back(&r);
        }
        return *keys[rng.categorical(cum)];
    }
    case Profile::Kind::Sampled: {
        const auto& votes = profile.sampled_data().votes;
        std::vector<double> cum;
        cum.reserve(votes.size());
        double acc = 0.0;
        for (const auto& [r, w] : votes) {
            acc += w;
            cum.push_back(acc);
        }
        return votes[rng.categorical(cum)].first;
    }
    case Profile::Kind::RankMarginal:
        return sample_rank_marginal(profile.rank_marginal_data(), profile.m(), rng);
    }
    throw DomainError("sample_one: unknown profile kind");
}

std::vector<Ranking> sample_voters(const Profile& profile, std::uint64_t n, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Ranking> out;
    out.reserve(static_cast<std::size_t>(n));

    // Hoist the cumulative table for listed supports.
    if (profile.kind() == Profile::Kind::Exact || profile.kind() == Profile::Kind::Sampled) {
        const auto atoms = profile.support();
        std::vector<double> cum(atoms.size());
        double acc = 0.0;
        for (std::size_t i = 0; i < atoms.size(); ++i) {
            acc += atoms[i].second;
            cum[i] = acc;
        }
        for (std::uint64_t i = 0; i < n; ++i) out.push_back(atoms[rng.categorical(cum)].first);
        return out;
    }
    for (std::uint64_t i = 0; i < n; ++i) out.push_back(sample_one(profile, rng));
    return out;
}

Profile antagonism_two_bloc(int m, int focal) {
    check_m(m);
    if (focal < 0 || focal >= m) throw DomainError("antagonism_two_bloc: focal index out of range");
    std::vector<int> ascending;
    for (int a = 0; a < m; ++a)
        if (a != focal) ascending.push_back(a);

    std::vector<int> focal_first;
    focal_first.push_back(focal);
    focal_first.insert(focal_first.end(), ascending.rbegin(), ascending.rend());

    std::vector<int> focal_last(ascending);
    focal_last.push_back(focal);

    std::map<Ranking, double> mass;
    mass.emplace(Ranking(std::move(focal_first)), 0.5);
    mass.emplace(Ranking(std::move(focal_last)), 0.5);
    return Profile::exact(m, std::move(mass));
}

} // namespace plurmat
