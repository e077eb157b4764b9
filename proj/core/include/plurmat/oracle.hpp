#pragma once

#include "plurmat/profile.hpp"

#include <string>
#include <vector>

namespace plurmat::oracle {

// Explicit distribution over rankings used for definitional evaluation.
// Exact and sampled profiles contribute their (normalized) support;
// rank-marginal profiles are expanded over all m! rankings, so they are
// limited to m <= 8 here. No plurality-matrix shortcuts anywhere below.
struct EnumerationTable {
    int m = 0;
    std::vector<std::pair<Ranking, double>> atoms;
};

EnumerationTable enumerate_profile(const Profile& profile);

double subset_top_probability(const EnumerationTable& t, const std::vector<int>& subset, int a);
double rank_probability(const EnumerationTable& t, int a, int i); // 1-based rank
std::vector<double> rank_law(const EnumerationTable& t, int a);
double mean_rank(const EnumerationTable& t, int a);
double borda(const EnumerationTable& t, int a);

// E[C(#beaten by a, s)].
double binomial_moment(const EnumerationTable& t, int a, int s);

double rank_variance(const EnumerationTable& t, int a);
double central_moment(const EnumerationTable& t, int a, int k);
double divisiveness(const EnumerationTable& t, int a);
double alpha_divisiveness(const EnumerationTable& t, int a, double alpha);
double agreement_index(const EnumerationTable& t);
double kt_diversity(const EnumerationTable& t);

// Expected absolute rank gap and its conditional versions.
double rank_gap(const EnumerationTable& t, int a, int b);
double rank_gap_given(const EnumerationTable& t, int a, int b, bool a_over_b);

// Rule winners evaluated definitionally (lexicographic tie-break).
int plurality_winner(const EnumerationTable& t);
int anti_plurality_winner(const EnumerationTable& t);
int k_approval_winner(const EnumerationTable& t, int k);
int bucklin_winner(const EnumerationTable& t);
int stv_winner(const EnumerationTable& t);
int copeland_winner(const EnumerationTable& t);
int minimax_winner(const EnumerationTable& t);
Ranking kemeny_ranking(const EnumerationTable& t);

// Rank-law route for rank-marginal profiles at any m: focal-alternative
// measures computed from the focal rank law and the uniform fill, without
// expanding the support.
double rm_mean_rank(const RankMarginalProfile& rm, int m);
double rm_rank_variance(const RankMarginalProfile& rm, int m);
double rm_central_moment(const RankMarginalProfile& rm, int m, int k);
double rm_divisiveness(const RankMarginalProfile& rm, int m);
double rm_agreement_index(const RankMarginalProfile& rm, int m);

// String-dispatched entry point used by the CLI cross-check flag.
// Supported ids: pairwise, subset_top, var, div, alpha_div, agreement,
// kt_diversity, moment, gap, gap_plus, gap_minus, rank_prob, aggregate.
double brute(const std::string& measure, const EnumerationTable& t,
             const std::vector<int>& subset, int a, int b, double x);

} // namespace plurmat::oracle
