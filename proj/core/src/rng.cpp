#include "plurmat/rng.hpp"

#include "plurmat/errors.hpp"

#include <algorithm>

namespace plurmat {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

int Rng::uniform_int(int lo, int hi) {
    if (lo > hi) throw DomainError("uniform_int: empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    if (span == 0) return static_cast<int>(next_u64()); // full 64-bit range, unreachable for int
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t r;
    do {
        r = next_u64();
    } while (r >= limit);
    return lo + static_cast<int>(r % span);
}

std::size_t Rng::categorical(const std::vector<double>& cumulative) {
    if (cumulative.empty()) throw DomainError("categorical: empty weights");
    const double total = cumulative.back();
    if (!(total > 0)) throw DomainError("categorical: nonpositive total mass");
    const double u = uniform01() * total;
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    if (it == cumulative.end()) --it;
    return static_cast<std::size_t>(it - cumulative.begin());
}

} // namespace plurmat
