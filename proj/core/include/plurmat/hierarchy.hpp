#pragma once

#include "plurmat/profile.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace plurmat {

// Exact small rational; numerator/denominator kept reduced with a
// positive denominator. Intermediates go through 128-bit products.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n); // NOLINT(google-explicit-constructor)
    Rational(long long n, long long d);

    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;
    Rational operator-() const;
    bool is_zero() const { return num == 0; }
    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
};

// Nonzero integer direction delta of length d+2 (m = d+2) satisfying
// sum_j delta_j C(m-j, s-1) = 0 for s = 1..d while
// sum_j delta_j C(m-j, d) != 0. For d = 3 this is (-1, 3, -3, 1, 0).
std::vector<Rational> matching_direction(int d);

// Value of the degree-(d+1) functional on a direction.
Rational separation_value(const std::vector<Rational>& delta, int d);

// Two rank-law vectors over m = d+2 positions that give identical
// plurality matrices at every degree <= d and differ at degree d+1.
struct WitnessPair {
    int d = 0;
    int m = 0;
    std::vector<double> w;        // uniform base law
    std::vector<double> w_prime;  // w + t * delta
    std::vector<double> delta;    // integer direction as doubles
    double t = 0.0;

    Profile base_profile(int focal = 0) const;
    Profile shifted_profile(int focal = 0) const;
};

// Default t is the largest step keeping every shifted entry >= 0.01; an
// explicit t is accepted as long as the shifted law stays a probability
// vector (t = 1/20 at d = 3 reproduces (3,7,1,5,4)/20).
WitnessPair build_witness(int d, std::optional<double> t = std::nullopt);

// Per-degree maximum entry gap between the two profiles' plurality
// matrices for degrees 2..max_degree, plus the first degree whose gap
// exceeds tol (0 when none does).
struct AgreementReport {
    std::map<int, double> max_gap;
    int first_divergent_degree = 0;
};

AgreementReport verify_agreement(const Profile& pa, const Profile& pb, int max_degree, double tol);

} // namespace plurmat
