#pragma once

#include "plurmat/generators.hpp"
#include "plurmat/profile.hpp"
#include "plurmat/rng.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

namespace plurmat::testing {

inline Ranking rk(std::vector<int> order) { return Ranking(std::move(order)); }

// Full-support random profile; every pairwise proportion is interior, so
// conditional measures are always defined.
inline Profile random_exact_profile(int m, Rng& rng) {
    std::vector<int> order(static_cast<std::size_t>(m));
    std::iota(order.begin(), order.end(), 0);
    std::map<Ranking, double> mass;
    double total = 0.0;
    do {
        const double w = 0.05 + rng.uniform01();
        mass.emplace(Ranking(order), w);
        total += w;
    } while (std::next_permutation(order.begin(), order.end()));
    for (auto& [r, p] : mass) p /= total;
    return Profile::exact(m, std::move(mass));
}

// Uniform over {a>b>c, b>a>c, c>b>a} is not single-peaked on (a,b,c).
inline Profile cyclic3_profile() {
    std::map<Ranking, double> mass;
    mass.emplace(rk({0, 2, 1}), 1.0 / 3.0);
    mass.emplace(rk({1, 0, 2}), 1.0 / 3.0);
    mass.emplace(rk({2, 1, 0}), 1.0 / 3.0);
    return Profile::exact(3, std::move(mass));
}

// Two opposed blocs with a full rank reversal between them:
// a>b>c>... vs reverse. The focal pair (first, last) has gap m-1.
inline Profile polarized_pair_profile(int m) {
    std::map<Ranking, double> mass;
    const Ranking fwd = Ranking::identity(m);
    mass.emplace(fwd, 0.5);
    mass.emplace(fwd.reversed(), 0.5);
    return Profile::exact(m, std::move(mass));
}

} // namespace plurmat::testing
