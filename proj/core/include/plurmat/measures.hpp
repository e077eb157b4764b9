#pragma once

#include "plurmat/plurality.hpp"

#include <functional>
#include <optional>
#include <string>

namespace plurmat {

// Mean over pairs of |2p - 1|: 0 when every pair splits evenly, 1 at
// unanimity on all pairs. Needs the full degree-2 slice.
double agreement_index(const PluralityMatrix& matrix);

// Sum of a's pairwise proportions; equals m - E[rank of a].
double borda_score(const PluralityMatrix& matrix, int a);

// Borda of a restricted to the voters with a over b / b over a.
// Degree-2 and degree-3 slices required; pairwise positivity enforced.
double conditional_borda_above(const PluralityMatrix& matrix, int a, int b);
double conditional_borda_below(const PluralityMatrix& matrix, int a, int b);

// Level-3 closed form of the variance of a's rank.
double rank_variance(const PluralityMatrix& matrix, int a);

// Level-3 closed form of the mean conditional rank gap. With
// drop_degenerate, opponents whose pairwise proportion sits in {0,1}
// are skipped and the average runs over the remaining ones.
double divisiveness(const PluralityMatrix& matrix, int a, bool drop_degenerate = false);

// Conditional-Borda gap weighted by (p(1-p))^alpha; alpha = 0 recovers
// divisiveness.
double alpha_divisiveness(const PluralityMatrix& matrix, int a, double alpha,
                          bool drop_degenerate = false);

// 2 sum over pairs of p(1-p).
double kt_diversity(const PluralityMatrix& matrix);

// Sum over pairs of f(p); f(p) = |2p-1|/C(m,2) recovers the agreement
// index.
double generalized_polarization(const PluralityMatrix& matrix,
                                const std::function<double(double)>& f);

// Pairwise conflict summary. delta is the expected absolute rank gap;
// the conditional gaps, balance and imbalance are only defined away from
// degenerate pairs and are surfaced through throwing accessors.
struct PairConflict {
    int a = 0;
    int b = 0;
    double p_ab = 0.0;
    double delta = 0.0;            // E|r_a - r_b|
    double beta = 0.0;             // delta / (m-1)
    double alpha = 0.0;            // 2 min(p, 1-p)
    double max_sum = 0.0;
    double max_nash = 0.0;
    double max_swap = 0.0;
    double p_max_polar = 0.0;
    double polar_exponent = 1.0;
    std::optional<double> delta_plus;  // E[|r_a - r_b| | a over b]
    std::optional<double> delta_minus; // E[|r_a - r_b| | b over a]

    double gap_above() const;   // throws PositivityError when unavailable
    double gap_below() const;
    double balance() const;     // gamma: min of the two conditional-gap ratios
    double imbalance() const;   // phi: |Bor(a)-Bor(b)| / delta
    bool degenerate() const { return !delta_plus.has_value(); }

    double borda_a = 0.0;
    double borda_b = 0.0;
};

PairConflict pair_conflict(const PluralityMatrix& matrix, int a, int b, double polar_exponent = 1.0);

enum class ConflictRule { MaxSum, MaxNash, MaxSwap, PMaxPolar };
std::string conflict_rule_name(ConflictRule rule);

struct ConflictSelection {
    ConflictRule rule;
    std::pair<int, int> pair;
    double score = 0.0;
    bool tie = false;
    bool skipped_pairs = false;
    std::vector<PairConflict> reports; // one per evaluated pair, (a<b) order
};

ConflictSelection most_conflictual_pair(const PluralityMatrix& matrix, ConflictRule rule,
                                        double polar_exponent = 1.0);

} // namespace plurmat
