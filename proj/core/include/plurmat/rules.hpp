#pragma once

#include "plurmat/plurality.hpp"

#include <optional>
#include <string>
#include <vector>

namespace plurmat {

// Winner(s) of a rule with its per-alternative scores. winners holds every
// alternative attaining the extremal score in index order; the reported
// winner is winners.front(). Ranking-valued rules also carry the ranking.
struct RuleResult {
    std::string rule;
    std::vector<int> winners;
    std::vector<double> scores;
    std::optional<Ranking> ranking;
    bool tie = false;

    int winner() const { return winners.front(); }
};

// Tournament rules from the degree-2 slice.
RuleResult copeland(const PluralityMatrix& matrix);
RuleResult minimax(const PluralityMatrix& matrix);
RuleResult kemeny(const PluralityMatrix& matrix); // m <= 8

// All three; Kemeny makes this m <= 8.
std::vector<RuleResult> tournament_rules(const PluralityMatrix& matrix);

// arg min over rankings of the summed top-of-subset losses at degrees
// 2..k; k = 2 coincides with Kemeny. m <= 7.
RuleResult kwise_kemeny(const Profile& profile, int k);

// Positional and runoff rules. Plurality, anti-plurality, k-approval and
// Bucklin read the rank distributions recovered from the aggregate
// vectors; the runoff eliminates the lowest-plurality alternative of the
// shrinking set each round.
RuleResult plurality_rule(const Profile& profile);
RuleResult anti_plurality_rule(const Profile& profile);
RuleResult k_approval_rule(const Profile& profile, int k);
RuleResult bucklin_rule(const Profile& profile);
RuleResult stv_rule(const Profile& profile);

std::vector<RuleResult> positional_rules(const Profile& profile, int approval_k);

} // namespace plurmat
