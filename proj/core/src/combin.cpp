#include "plurmat/combin.hpp"

#include "plurmat/errors.hpp"

#include <bit>
#include <cmath>
#include <numeric>

namespace plurmat {

std::uint64_t binom(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 acc = 1;
    for (int i = 1; i <= k; ++i) {
        acc = acc * static_cast<unsigned>(n - k + i);
        acc /= static_cast<unsigned>(i);
        if (acc > static_cast<unsigned __int128>(UINT64_MAX))
            throw ResourceError("binomial coefficient C(" + std::to_string(n) + "," +
                                std::to_string(k) + ") exceeds 64 bits");
    }
    return static_cast<std::uint64_t>(acc);
}

double binom_d(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0.0;
    if (k > n - k) k = n - k;
    double acc = 1.0;
    for (int i = 1; i <= k; ++i) acc = acc * (n - k + i) / i;
    return acc;
}

int ceil_log2_factorial(int k) {
    if (k < 0) throw DomainError("ceil_log2_factorial: negative k");
    if (k <= 1) return 0;
    if (k <= 20) {
        std::uint64_t f = 1;
        for (int i = 2; i <= k; ++i) f *= static_cast<std::uint64_t>(i);
        return static_cast<int>(std::bit_width(f - 1));
    }
    long double s = 0.0L;
    for (int i = 2; i <= k; ++i) s += std::log2(static_cast<long double>(i));
    return static_cast<int>(std::ceil(s - 1e-12L));
}

std::vector<std::vector<int>> all_subsets(int m, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > m) return out;
    std::vector<int> s(k);
    std::iota(s.begin(), s.end(), 0);
    if (k == 0) {
        out.push_back({});
        return out;
    }
    do {
        out.push_back(s);
    } while (next_subset(s, m));
    return out;
}

bool next_subset(std::vector<int>& s, int m) {
    const int k = static_cast<int>(s.size());
    int i = k - 1;
    while (i >= 0 && s[i] == m - k + i) --i;
    if (i < 0) {
        std::iota(s.begin(), s.end(), 0);
        return false;
    }
    ++s[i];
    for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
    return true;
}

} // namespace plurmat
