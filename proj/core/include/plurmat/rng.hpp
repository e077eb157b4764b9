#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace plurmat {

std::uint64_t splitmix64(std::uint64_t x);

// Seeded RNG with all value transforms implemented locally, so that a
// given seed produces the same stream on every platform and toolchain.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : seed_(seed), eng_(splitmix64(seed)) {}

    std::uint64_t next_u64() { return eng_(); }

    // Uniform in [0, 1) with 53 random bits.
    double uniform01() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Uniform integer in [lo, hi], both inclusive; rejection sampled.
    int uniform_int(int lo, int hi);

    // Index into a nondecreasing cumulative-weight vector whose last
    // entry is the total mass.
    std::size_t categorical(const std::vector<double>& cumulative);

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            const int j = uniform_int(0, static_cast<int>(i) - 1);
            std::swap(v[i - 1], v[static_cast<std::size_t>(j)]);
        }
    }

    // Independent child stream for parallel or repeated work.
    Rng derive(std::uint64_t stream) const {
        return Rng(splitmix64(seed_ + 0x9E3779B97F4A7C15ULL * (stream + 1)));
    }

    std::uint64_t seed() const { return seed_; }

private:
    std::uint64_t seed_;
    std::mt19937_64 eng_;
};

} // namespace plurmat
