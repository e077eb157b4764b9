#include "plurmat/oracle.hpp"

#include "plurmat/combin.hpp"
#include "plurmat/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace plurmat::oracle {

namespace {

double factorial_d(int m) {
    double f = 1.0;
    for (int i = 2; i <= m; ++i) f *= i;
    return f;
}

double pairwise(const EnumerationTable& t, int a, int b) {
    double acc = 0.0;
    for (const auto& [r, p] : t.atoms)
        if (r.prefers(a, b)) acc += p;
    return acc;
}

// Conditional Borda of a over the voters with x above y.
double conditional_borda(const EnumerationTable& t, int a, int x, int y) {
    double cond_mass = 0.0;
    std::vector<double> joint(static_cast<std::size_t>(t.m), 0.0);
    for (const auto& [r, p] : t.atoms) {
        if (!r.prefers(x, y)) continue;
        cond_mass += p;
        for (int b = 0; b < t.m; ++b)
            if (b != a && r.prefers(a, b)) joint[static_cast<std::size_t>(b)] += p;
    }
    if (!(cond_mass > 0)) throw PositivityError("oracle: conditioning event has zero probability");
    double acc = 0.0;
    for (int b = 0; b < t.m; ++b)
        if (b != a) acc += joint[static_cast<std::size_t>(b)] / cond_mass;
    return acc;
}

} // namespace

EnumerationTable enumerate_profile(const Profile& profile) {
    EnumerationTable t;
    t.m = profile.m();
    if (profile.kind() == Profile::Kind::RankMarginal) {
        if (t.m > 8)
            throw ResourceError("oracle: rank-marginal expansion limited to m <= 8; use the rank-law route");
        const auto& rm = profile.rank_marginal_data();
        const double fill = 1.0 / factorial_d(t.m - 1);
        std::vector<int> order(static_cast<std::size_t>(t.m));
        std::iota(order.begin(), order.end(), 0);
        do {
            Ranking r(order);
            const double p = rm.w[static_cast<std::size_t>(rank_of(r, rm.focal) - 1)] * fill;
            if (p > 0) t.atoms.emplace_back(std::move(r), p);
        } while (std::next_permutation(order.begin(), order.end()));
        return t;
    }
    t.atoms = profile.support();
    double total = 0.0;
    for (const auto& [r, p] : t.atoms) total += p;
    for (auto& [r, p] : t.atoms) p /= total;
    return t;
}

double subset_top_probability(const EnumerationTable& t, const std::vector<int>& subset, int a) {
    double acc = 0.0;
    for (const auto& [r, p] : t.atoms)
        if (top_of(r, subset) == a) acc += p;
    return acc;
}

double rank_probability(const EnumerationTable& t, int a, int i) {
    double acc = 0.0;
    for (const auto& [r, p] : t.atoms)
        if (rank_of(r, a) == i) acc += p;
    return acc;
}

std::vector<double> rank_law(const EnumerationTable& t, int a) {
    std::vector<double> law(static_cast<std::size_t>(t.m), 0.0);
    for (const auto& [r, p] : t.atoms) law[static_cast<std::size_t>(rank_of(r, a) - 1)] += p;
    return law;
}

double mean_rank(const EnumerationTable& t, int a) {
    double acc = 0.0;
    for (const auto& [r, p] : t.atoms) acc += p * rank_of(r, a);
    return acc;
}

double borda(const EnumerationTable& t, int a) { return t.m - mean_rank(t, a); }

double binomial_moment(const EnumerationTable& t, int a, int s) {
    double acc = 0.0;
    for (const auto& [r, p] : t.atoms) acc += p * binom_d(t.m - rank_of(r, a), s);
    return acc;
}

double rank_variance(const EnumerationTable& t, int a) { return central_moment(t, a, 2); }

double central_moment(const EnumerationTable& t, int a, int k) {
    const double mu = mean_rank(t, a);
    long double acc = 0.0L;
    for (const auto& [r, p] : t.atoms)
        acc += static_cast<long double>(p) * std::pow(static_cast<long double>(rank_of(r, a)) - mu, k);
    return static_cast<double>(acc);
}

double divisiveness(const EnumerationTable& t, int a) {
    double acc = 0.0;
    for (int b = 0; b < t.m; ++b) {
        if (b == a) continue;
        const double pab = pairwise(t, a, b);
        if (!(pab > 0.0) || !(pab < 1.0))
            throw PositivityError("oracle divisiveness: pairwise proportion in {0,1}");
        acc += std::abs(conditional_borda(t, a, a, b) - conditional_borda(t, a, b, a));
    }
    return acc / (t.m - 1);
}

double alpha_divisiveness(const EnumerationTable& t, int a, double alpha) {
    double acc = 0.0;
    for (int b = 0; b < t.m; ++b) {
        if (b == a) continue;
        const double pab = pairwise(t, a, b);
        if (!(pab > 0.0) || !(pab < 1.0))
            throw PositivityError("oracle alpha_divisiveness: pairwise proportion in {0,1}");
        const double gap = std::abs(conditional_borda(t, a, a, b) - conditional_borda(t, a, b, a));
        acc += std::pow(pab * (1.0 - pab), alpha) * gap;
    }
    return acc / (t.m - 1);
}

double agreement_index(const EnumerationTable& t) {
    double acc = 0.0;
    for (int a = 0; a < t.m; ++a)
        for (int b = a + 1; b < t.m; ++b) acc += std::abs(2.0 * pairwise(t, a, b) - 1.0);
    return acc / binom_d(t.m, 2);
}

double kt_diversity(const EnumerationTable& t) {
    double acc = 0.0;
    for (int a = 0; a < t.m; ++a)
        for (int b = a + 1; b < t.m; ++b) {
            const double p = pairwise(t, a, b);
            acc += p * (1.0 - p);
        }
    return 2.0 * acc;
}

double rank_gap(const EnumerationTable& t, int a, int b) {
    double acc = 0.0;
    for (const auto& [r, p] : t.atoms) acc += p * std::abs(rank_of(r, a) - rank_of(r, b));
    return acc;
}

double rank_gap_given(const EnumerationTable& t, int a, int b, bool a_over_b) {
    double mass = 0.0;
    double acc = 0.0;
    for (const auto& [r, p] : t.atoms) {
        if (r.prefers(a, b) != a_over_b) continue;
        mass += p;
        acc += p * std::abs(rank_of(r, a) - rank_of(r, b));
    }
    if (!(mass > 0)) throw PositivityError("oracle rank_gap_given: conditioning event has zero probability");
    return acc / mass;
}

namespace {

int argmax_lex(const std::vector<double>& score) {
    int best = 0;
    for (int i = 1; i < static_cast<int>(score.size()); ++i)
        if (score[static_cast<std::size_t>(i)] > score[static_cast<std::size_t>(best)] + 0.0) best = i;
    return best;
}

} // namespace

int plurality_winner(const EnumerationTable& t) {
    std::vector<double> s(static_cast<std::size_t>(t.m));
    for (int a = 0; a < t.m; ++a) s[static_cast<std::size_t>(a)] = rank_probability(t, a, 1);
    return argmax_lex(s);
}

int anti_plurality_winner(const EnumerationTable& t) {
    std::vector<double> s(static_cast<std::size_t>(t.m));
    for (int a = 0; a < t.m; ++a) s[static_cast<std::size_t>(a)] = 1.0 - rank_probability(t, a, t.m);
    return argmax_lex(s);
}

int k_approval_winner(const EnumerationTable& t, int k) {
    std::vector<double> s(static_cast<std::size_t>(t.m), 0.0);
    for (int a = 0; a < t.m; ++a)
        for (int i = 1; i <= k; ++i) s[static_cast<std::size_t>(a)] += rank_probability(t, a, i);
    return argmax_lex(s);
}

int bucklin_winner(const EnumerationTable& t) {
    std::vector<double> depth(static_cast<std::size_t>(t.m), 0.0);
    for (int a = 0; a < t.m; ++a) {
        double cum = 0.0;
        int d = t.m;
        for (int i = 1; i <= t.m; ++i) {
            cum += rank_probability(t, a, i);
            if (cum >= 0.5) {
                d = i;
                break;
            }
        }
        depth[static_cast<std::size_t>(a)] = -d; // smaller depth wins
    }
    return argmax_lex(depth);
}

int stv_winner(const EnumerationTable& t) {
    std::vector<int> alive(static_cast<std::size_t>(t.m));
    std::iota(alive.begin(), alive.end(), 0);
    while (alive.size() > 1) {
        int worst = alive.front();
        double worst_score = 2.0;
        for (int a : alive) {
            const double s = subset_top_probability(t, alive, a);
            if (s < worst_score) {
                worst_score = s;
                worst = a;
            }
        }
        alive.erase(std::find(alive.begin(), alive.end(), worst));
    }
    return alive.front();
}

int copeland_winner(const EnumerationTable& t) {
    std::vector<double> s(static_cast<std::size_t>(t.m), 0.0);
    for (int a = 0; a < t.m; ++a)
        for (int b = 0; b < t.m; ++b) {
            if (a == b) continue;
            const double p = pairwise(t, a, b);
            if (p > 0.5) s[static_cast<std::size_t>(a)] += 1.0;
            if (p < 0.5) s[static_cast<std::size_t>(a)] -= 1.0;
        }
    return argmax_lex(s);
}

int minimax_winner(const EnumerationTable& t) {
    std::vector<double> s(static_cast<std::size_t>(t.m), 0.0);
    for (int a = 0; a < t.m; ++a) {
        double worst = 1.0;
        for (int b = 0; b < t.m; ++b)
            if (b != a) worst = std::min(worst, pairwise(t, a, b));
        s[static_cast<std::size_t>(a)] = worst;
    }
    return argmax_lex(s);
}

Ranking kemeny_ranking(const EnumerationTable& t) {
    if (t.m > 8) throw ResourceError("oracle kemeny: limited to m <= 8");
    std::vector<int> order(static_cast<std::size_t>(t.m));
    std::iota(order.begin(), order.end(), 0);
    std::vector<int> best = order;
    double best_score = -1.0;
    do {
        double s = 0.0;
        for (std::size_t i = 0; i < order.size(); ++i)
            for (std::size_t j = i + 1; j < order.size(); ++j) s += pairwise(t, order[i], order[j]);
        if (s > best_score + 1e-15) {
            best_score = s;
            best = order;
        }
    } while (std::next_permutation(order.begin(), order.end()));
    return Ranking(std::move(best));
}

double rm_mean_rank(const RankMarginalProfile& rm, int m) {
    double acc = 0.0;
    for (int j = 1; j <= m; ++j) acc += rm.w[static_cast<std::size_t>(j - 1)] * j;
    return acc;
}

double rm_rank_variance(const RankMarginalProfile& rm, int m) { return rm_central_moment(rm, m, 2); }

double rm_central_moment(const RankMarginalProfile& rm, int m, int k) {
    const double mu = rm_mean_rank(rm, m);
    long double acc = 0.0L;
    for (int j = 1; j <= m; ++j)
        acc += static_cast<long double>(rm.w[static_cast<std::size_t>(j - 1)]) *
               std::pow(static_cast<long double>(j) - mu, k);
    return static_cast<double>(acc);
}

double rm_divisiveness(const RankMarginalProfile& rm, int m) {
    // Given the focal rank j, a fixed non-focal alternative sits below
    // with probability (m - j)/(m - 1); the gap of conditional rank
    // means follows from the joint law of (rank, below-indicator).
    double p_above = 0.0; // Pr[focal above b]
    double mean_above = 0.0;
    double mean_below = 0.0;
    for (int j = 1; j <= m; ++j) {
        const double wj = rm.w[static_cast<std::size_t>(j - 1)];
        const double below = static_cast<double>(m - j) / (m - 1);
        p_above += wj * below;
        mean_above += wj * below * j;
        mean_below += wj * (1.0 - below) * j;
    }
    if (!(p_above > 0.0) || !(p_above < 1.0))
        throw PositivityError("oracle rm_divisiveness: pairwise proportion in {0,1}");
    const double e_given_above = mean_above / p_above;
    const double e_given_below = mean_below / (1.0 - p_above);
    // Identical for every non-focal alternative by exchangeability.
    return std::abs(e_given_below - e_given_above);
}

double rm_agreement_index(const RankMarginalProfile& rm, int m) {
    double p_above = 0.0;
    for (int j = 1; j <= m; ++j)
        p_above += rm.w[static_cast<std::size_t>(j - 1)] * static_cast<double>(m - j) / (m - 1);
    // Non-focal pairs split evenly by exchangeability; only the m-1
    // focal pairs contribute.
    return (m - 1) * std::abs(2.0 * p_above - 1.0) / binom_d(m, 2);
}

double brute(const std::string& measure, const EnumerationTable& t,
             const std::vector<int>& subset, int a, int b, double x) {
    if (measure == "pairwise") return pairwise(t, a, b);
    if (measure == "subset_top") return subset_top_probability(t, subset, a);
    if (measure == "var") return rank_variance(t, a);
    if (measure == "div") return divisiveness(t, a);
    if (measure == "alpha_div") return alpha_divisiveness(t, a, x);
    if (measure == "agreement") return agreement_index(t);
    if (measure == "kt_diversity") return kt_diversity(t);
    if (measure == "moment") return central_moment(t, a, static_cast<int>(x));
    if (measure == "gap") return rank_gap(t, a, b);
    if (measure == "gap_plus") return rank_gap_given(t, a, b, true);
    if (measure == "gap_minus") return rank_gap_given(t, a, b, false);
    if (measure == "rank_prob") return rank_probability(t, a, static_cast<int>(x));
    if (measure == "aggregate") return binomial_moment(t, a, static_cast<int>(x));
    throw DomainError("oracle brute: unknown measure id '" + measure + "'");
}

} // namespace plurmat::oracle
