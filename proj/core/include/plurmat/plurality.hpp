#pragma once

#include "plurmat/profile.hpp"

#include <cstdint>
#include <map>
#include <set>
#include <vector>

namespace plurmat {

// One stored subset row: probabilities aligned with the sorted subset,
// plus observation counts for empirical provenance.
struct MatrixRow {
    std::vector<double> p;
    std::vector<std::uint64_t> counts;
    std::uint64_t total = 0;
};

// Degree-sliced map (subset S, alternative a in S) -> probability that a
// tops S. Subsets are canonicalized as sorted index vectors.
class PluralityMatrix {
public:
    enum class Provenance { Exact, Empirical };

    PluralityMatrix(int m, Provenance provenance);

    int m() const { return m_; }
    Provenance provenance() const { return provenance_; }

    bool has_degree(int k) const;
    std::vector<int> degrees() const;
    const std::map<std::vector<int>, MatrixRow>& slice(int k) const; // throws DependencyError

    bool has_entry(const std::vector<int>& subset, int a) const;
    double entry(const std::vector<int>& subset, int a) const;
    std::uint64_t count(const std::vector<int>& subset, int a) const;
    std::uint64_t row_total(const std::vector<int>& subset) const;

    // Convenience for pairwise proportions: Pr[a beats b].
    double pairwise(int a, int b) const;

    // Builder for exact rows; values must sum to 1 over the subset.
    void set_row(const std::vector<int>& subset, const std::vector<double>& values);
    void set_counts(const std::vector<int>& subset, const std::vector<std::uint64_t>& counts);

    // Record one observed winner for an empirical subset row; frequencies
    // are the renormalized counts.
    void record_winner(const std::vector<int>& subset, int winner);

    // Sum another empirical matrix's counts into this one.
    void merge_counts(const PluralityMatrix& other);

    std::size_t entry_count() const;

private:
    int m_;
    Provenance provenance_;
    std::map<int, std::map<std::vector<int>, MatrixRow>> slices_;
};

// Focal entry of the rank-marginal family on any size-s set containing
// the focal alternative: sum_j w[j-1] * C(m-j, s-1) / C(m-1, s-1).
double rank_marginal_focal_entry(const std::vector<double>& w, int m, int s);

// Probability that a tops S under the profile. Exact and rank-marginal
// profiles are evaluated analytically; sampled profiles give the
// empirical frequency.
double plurality_entry(const Profile& profile, const std::vector<int>& subset, int a);

// All entries for the requested degrees. Throws ResourceError when the
// requested slices would be too large to enumerate.
PluralityMatrix plurality_matrix(const Profile& profile, const std::set<int>& degrees);

// Aggregate plurality vector of one alternative: P[s] sums the entries of
// a over all size-(s+1) subsets containing it; P[0] = 1, P[1] is Borda.
struct AggregatePlurality {
    int alt = 0;
    std::vector<double> P;  // s = 0..m-1
    int max_valid = 0;      // orders above this were not computed
    int m() const { return static_cast<int>(P.size()); }
};

// Single aggregate value from a matrix holding degree s+1.
double aggregate_plurality(const PluralityMatrix& matrix, int a, int s);

// Full vector from a matrix holding every degree 2..m.
AggregatePlurality aggregate_vector(const PluralityMatrix& matrix, int a);

// Full vector straight from the profile. Listed supports use the
// binomial-moment identity P_s = E[C(m - r_a, s)], which is exact for
// the represented distribution; rank-marginal profiles use the closed
// form (focal) and symmetry (non-focal). max_order < m-1 truncates the
// vector to P_0..P_max_order (entries above are left at 0), enough for
// moment work at large m.
AggregatePlurality aggregate_vector(const Profile& profile, int a, int max_order = -1);

// Level-m inversion identity: Pr[r_a = i] for 1-based i.
double rank_probability(const AggregatePlurality& agg, int i);
std::vector<double> rank_distribution(const AggregatePlurality& agg);

// 1 - Pr[r_a = m].
double anti_plurality(const AggregatePlurality& agg);

} // namespace plurmat
