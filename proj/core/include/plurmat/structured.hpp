#pragma once

#include "plurmat/plurality.hpp"

#include <set>
#include <vector>

namespace plurmat {

// Positive latent utilities of the sequential-choice model.
struct StrengthVector {
    std::vector<double> v;
    explicit StrengthVector(std::vector<double> values);
    int m() const { return static_cast<int>(v.size()); }
};

// Probability that a tops S under the strength model: v_a / sum_{x in S} v_x.
double pl_subset_probability(const StrengthVector& strengths, const std::vector<int>& subset, int a);

// Reconstruct every requested degree from the degree-2 slice alone via
// odds ratios against a reference alternative. Every pairwise proportion
// that involves the reference must lie strictly inside (0, 1).
PluralityMatrix pl_lift(const PluralityMatrix& matrix, int reference, const std::set<int>& degrees);

// Entries of one subset for a profile single-peaked on the axis, as
// (alternative, probability) pairs in axis order. Interior entries are
// consecutive-pairwise differences; a computed entry below -tol means
// the input was not single-peaked on this axis.
std::vector<std::pair<int, double>> sp_subset_probabilities(const Ranking& axis,
                                                            const PluralityMatrix& matrix,
                                                            const std::vector<int>& subset,
                                                            double tol = 1e-9);

// Full reconstruction of the requested degrees from degree-2 data under
// the single-peaked assumption.
PluralityMatrix sp_lift(const Ranking& axis, const PluralityMatrix& matrix,
                        const std::set<int>& degrees, double tol = 1e-9);

struct PlStructure {
    int reference = 0;
};
struct SpStructure {
    Ranking axis;
};

// Maximum absolute deviation between the profile's exact entries and the
// degree-2 reconstruction, across every degree 2..m.
double verify_collapse(const Profile& profile, const PlStructure& s);
double verify_collapse(const Profile& profile, const SpStructure& s);

} // namespace plurmat
