#include "plurmat/rules.hpp"

#include "plurmat/combin.hpp"
#include "plurmat/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace plurmat {

namespace {

constexpr double kScoreTol = 1e-12;

RuleResult from_scores(std::string name, std::vector<double> scores, bool maximize = true) {
    RuleResult r;
    r.rule = std::move(name);
    r.scores = std::move(scores);
    double best = maximize ? -1e300 : 1e300;
    for (double s : r.scores) best = maximize ? std::max(best, s) : std::min(best, s);
    for (int a = 0; a < static_cast<int>(r.scores.size()); ++a)
        if (std::abs(r.scores[static_cast<std::size_t>(a)] - best) <= kScoreTol) r.winners.push_back(a);
    r.tie = r.winners.size() > 1;
    return r;
}

std::vector<Ranking> all_rankings(int m) {
    std::vector<int> order(static_cast<std::size_t>(m));
    std::iota(order.begin(), order.end(), 0);
    std::vector<Ranking> out;
    do {
        out.emplace_back(order);
    } while (std::next_permutation(order.begin(), order.end()));
    return out;
}

} // namespace

RuleResult copeland(const PluralityMatrix& matrix) {
    const int m = matrix.m();
    std::vector<double> scores(static_cast<std::size_t>(m), 0.0);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            if (a == b) continue;
            const double p = matrix.pairwise(a, b);
            if (p > 0.5) scores[static_cast<std::size_t>(a)] += 1.0;
            if (p < 0.5) scores[static_cast<std::size_t>(a)] -= 1.0;
        }
    return from_scores("copeland", std::move(scores));
}

RuleResult minimax(const PluralityMatrix& matrix) {
    const int m = matrix.m();
    std::vector<double> scores(static_cast<std::size_t>(m), 1.0);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            if (b != a)
                scores[static_cast<std::size_t>(a)] =
                    std::min(scores[static_cast<std::size_t>(a)], matrix.pairwise(a, b));
    return from_scores("minimax", std::move(scores));
}

RuleResult kemeny(const PluralityMatrix& matrix) {
    const int m = matrix.m();
    if (m > 8) throw ResourceError("kemeny: brute force limited to m <= 8");
    RuleResult r;
    r.rule = "kemeny";
    double best = -1.0;
    bool tie = false;
    for (const auto& candidate : all_rankings(m)) {
        double s = 0.0;
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j) s += matrix.pairwise(candidate.at(i), candidate.at(j));
        if (s > best + kScoreTol) {
            best = s;
            r.ranking = candidate;
            tie = false;
        } else if (std::abs(s - best) <= kScoreTol) {
            tie = true;
        }
    }
    r.tie = tie;
    r.winners = {r.ranking->at(0)};
    return r;
}

std::vector<RuleResult> tournament_rules(const PluralityMatrix& matrix) {
    return {copeland(matrix), minimax(matrix), kemeny(matrix)};
}

RuleResult kwise_kemeny(const Profile& profile, int k) {
    const int m = profile.m();
    if (m > 7) throw ResourceError("kwise_kemeny: brute force limited to m <= 7");
    if (k < 2 || k > m) throw DomainError("kwise_kemeny: k out of [2, m]");

    std::set<int> degrees;
    for (int d = 2; d <= k; ++d) degrees.insert(d);
    const PluralityMatrix matrix = plurality_matrix(profile, degrees);

    RuleResult r;
    r.rule = "kwise_kemeny";
    double best = 1e300;
    bool tie = false;
    for (const auto& candidate : all_rankings(m)) {
        double loss = 0.0;
        for (int d = 2; d <= k; ++d) {
            for (const auto& [subset, row] : matrix.slice(d)) {
                const int t = top_of(candidate, subset);
                const auto it = std::lower_bound(subset.begin(), subset.end(), t);
                loss += 1.0 - row.p[static_cast<std::size_t>(it - subset.begin())];
            }
        }
        if (loss < best - kScoreTol) {
            best = loss;
            r.ranking = candidate;
            tie = false;
        } else if (std::abs(loss - best) <= kScoreTol) {
            tie = true;
        }
    }
    r.tie = tie;
    r.winners = {r.ranking->at(0)};
    return r;
}

namespace {

std::vector<std::vector<double>> all_rank_laws(const Profile& profile) {
    const int m = profile.m();
    std::vector<std::vector<double>> laws(static_cast<std::size_t>(m));
    for (int a = 0; a < m; ++a) laws[static_cast<std::size_t>(a)] = rank_distribution(aggregate_vector(profile, a));
    return laws;
}

} // namespace

RuleResult plurality_rule(const Profile& profile) {
    const auto laws = all_rank_laws(profile);
    std::vector<double> scores;
    scores.reserve(laws.size());
    for (const auto& law : laws) scores.push_back(law.front());
    return from_scores("plurality", std::move(scores));
}

RuleResult anti_plurality_rule(const Profile& profile) {
    const auto laws = all_rank_laws(profile);
    std::vector<double> scores;
    scores.reserve(laws.size());
    for (const auto& law : laws) scores.push_back(1.0 - law.back());
    return from_scores("anti_plurality", std::move(scores));
}

RuleResult k_approval_rule(const Profile& profile, int k) {
    const int m = profile.m();
    if (k < 1 || k > m) throw DomainError("k_approval: k out of [1, m]");
    const auto laws = all_rank_laws(profile);
    std::vector<double> scores;
    scores.reserve(laws.size());
    for (const auto& law : laws)
        scores.push_back(std::accumulate(law.begin(), law.begin() + k, 0.0));
    auto r = from_scores("k_approval", std::move(scores));
    r.rule = std::to_string(k) + "_approval";
    return r;
}

RuleResult bucklin_rule(const Profile& profile) {
    const int m = profile.m();
    const auto laws = all_rank_laws(profile);
    std::vector<double> depth(static_cast<std::size_t>(m), static_cast<double>(m));
    for (int a = 0; a < m; ++a) {
        double cum = 0.0;
        for (int i = 0; i < m; ++i) {
            cum += laws[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)];
            if (cum >= 0.5 - kScoreTol) {
                depth[static_cast<std::size_t>(a)] = i + 1;
                break;
            }
        }
    }
    return from_scores("bucklin", std::move(depth), /*maximize=*/false);
}

RuleResult stv_rule(const Profile& profile) {
    const int m = profile.m();
    std::vector<int> alive(static_cast<std::size_t>(m));
    std::iota(alive.begin(), alive.end(), 0);
    std::vector<double> elimination_round(static_cast<std::size_t>(m), 0.0);
    int round = 0;
    while (alive.size() > 1) {
        ++round;
        int worst = alive.front();
        double worst_score = 2.0;
        for (int a : alive) {
            const double s = plurality_entry(profile, alive, a);
            if (s < worst_score - kScoreTol) {
                worst_score = s;
                worst = a;
            }
        }
        elimination_round[static_cast<std::size_t>(worst)] = round;
        alive.erase(std::find(alive.begin(), alive.end(), worst));
    }
    elimination_round[static_cast<std::size_t>(alive.front())] = round + 1;
    RuleResult r = from_scores("stv", std::move(elimination_round));
    r.winners = {alive.front()};
    r.tie = false;
    return r;
}

std::vector<RuleResult> positional_rules(const Profile& profile, int approval_k) {
    return {plurality_rule(profile), anti_plurality_rule(profile), k_approval_rule(profile, approval_k),
            bucklin_rule(profile), stv_rule(profile)};
}

} // namespace plurmat
