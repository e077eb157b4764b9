#pragma once

#include <cstdint>
#include <vector>

namespace plurmat {

// C(n, k) exactly; throws ResourceError if the value does not fit in 64 bits.
std::uint64_t binom(int n, int k);

// C(n, k) in floating point, usable where exact integers would overflow.
double binom_d(int n, int k);

// ceil(log2(k!)). Exact through 20! (fits in 64 bits); summed in long
// double above that, where k! is never within rounding distance of a
// power of two.
int ceil_log2_factorial(int k);

// All size-k subsets of {0,...,m-1} as sorted index vectors, in
// lexicographic order.
std::vector<std::vector<int>> all_subsets(int m, int k);

// Advance a sorted subset to its lexicographic successor; returns false
// (leaving s at the first subset) after the last one.
bool next_subset(std::vector<int>& s, int m);

} // namespace plurmat
