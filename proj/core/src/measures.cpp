#include "plurmat/measures.hpp"

#include "plurmat/combin.hpp"
#include "plurmat/errors.hpp"

#include <algorithm>
#include <cmath>

namespace plurmat {

namespace {

void require_measure_m(const PluralityMatrix& matrix) {
    if (matrix.m() < 3) throw DomainError("measures: need at least three alternatives");
}

void check_alt(const PluralityMatrix& matrix, int a) {
    if (a < 0 || a >= matrix.m()) throw DomainError("measures: alternative index out of range");
}

void require_full_degree(const PluralityMatrix& matrix, int k) {
    const auto& rows = matrix.slice(k);
    const std::uint64_t expected = binom(matrix.m(), k);
    if (rows.size() != expected)
        throw DependencyError("measures: degree-" + std::to_string(k) + " slice incomplete (" +
                              std::to_string(rows.size()) + " of " + std::to_string(expected) + " rows)");
}

std::vector<int> triple(int a, int b, int c) {
    std::vector<int> t{a, b, c};
    std::sort(t.begin(), t.end());
    return t;
}

double checked_pairwise(const PluralityMatrix& matrix, int a, int b) {
    const double p = matrix.pairwise(a, b);
    if (!(p > 0.0) || !(p < 1.0))
        throw PositivityError("measures: pairwise proportion p(" + std::to_string(a) + "," +
                              std::to_string(b) + ") = " + std::to_string(p) +
                              " violates the positivity assumption");
    return p;
}

} // namespace

double agreement_index(const PluralityMatrix& matrix) {
    require_measure_m(matrix);
    require_full_degree(matrix, 2);
    const int m = matrix.m();
    double acc = 0.0;
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) acc += std::abs(2.0 * matrix.pairwise(a, b) - 1.0);
    return acc / binom_d(m, 2);
}

double borda_score(const PluralityMatrix& matrix, int a) {
    check_alt(matrix, a);
    double acc = 0.0;
    for (int b = 0; b < matrix.m(); ++b)
        if (b != a) acc += matrix.pairwise(a, b);
    return acc;
}

double conditional_borda_above(const PluralityMatrix& matrix, int a, int b) {
    require_measure_m(matrix);
    const double pab = checked_pairwise(matrix, a, b);
    double acc = 0.0;
    for (int c = 0; c < matrix.m(); ++c) {
        if (c == a || c == b) continue;
        acc += matrix.entry(triple(a, b, c), a);
    }
    return 1.0 + acc / pab;
}

double conditional_borda_below(const PluralityMatrix& matrix, int a, int b) {
    require_measure_m(matrix);
    const double pab = checked_pairwise(matrix, a, b);
    double acc = 0.0;
    for (int c = 0; c < matrix.m(); ++c) {
        if (c == a || c == b) continue;
        acc += matrix.pairwise(a, c) - matrix.entry(triple(a, b, c), a);
    }
    return acc / (1.0 - pab);
}

double rank_variance(const PluralityMatrix& matrix, int a) {
    require_measure_m(matrix);
    check_alt(matrix, a);
    const int m = matrix.m();
    double acc = 0.0;
    for (int b = 0; b < m; ++b) {
        if (b == a) continue;
        const double p = matrix.pairwise(a, b);
        acc += p * (1.0 - p);
    }
    for (int b = 0; b < m; ++b) {
        if (b == a) continue;
        for (int c = b + 1; c < m; ++c) {
            if (c == a) continue;
            const double joint = matrix.entry(triple(a, b, c), a);
            acc += 2.0 * (joint - matrix.pairwise(a, b) * matrix.pairwise(a, c));
        }
    }
    return acc;
}

double divisiveness(const PluralityMatrix& matrix, int a, bool drop_degenerate) {
    return alpha_divisiveness(matrix, a, 0.0, drop_degenerate);
}

double alpha_divisiveness(const PluralityMatrix& matrix, int a, double alpha, bool drop_degenerate) {
    require_measure_m(matrix);
    check_alt(matrix, a);
    if (alpha < 0) throw DomainError("alpha_divisiveness: alpha must be >= 0");
    const int m = matrix.m();
    double acc = 0.0;
    int used = 0;
    for (int b = 0; b < m; ++b) {
        if (b == a) continue;
        const double pab = matrix.pairwise(a, b);
        if (!(pab > 0.0) || !(pab < 1.0)) {
            if (drop_degenerate) continue;
            throw PositivityError("divisiveness: pairwise proportion p(" + std::to_string(a) + "," +
                                  std::to_string(b) + ") in {0,1}; pass drop_degenerate to skip");
        }
        const double gap = std::abs(conditional_borda_above(matrix, a, b) -
                                    conditional_borda_below(matrix, a, b));
        const double weight = (alpha == 0.0) ? 1.0 : std::pow(pab * (1.0 - pab), alpha);
        acc += weight * gap;
        ++used;
    }
    if (used == 0) throw DegenerateError("divisiveness: every opponent pair is degenerate");
    return acc / used;
}

double kt_diversity(const PluralityMatrix& matrix) {
    require_measure_m(matrix);
    require_full_degree(matrix, 2);
    double acc = 0.0;
    for (int a = 0; a < matrix.m(); ++a)
        for (int b = a + 1; b < matrix.m(); ++b) {
            const double p = matrix.pairwise(a, b);
            acc += p * (1.0 - p);
        }
    return 2.0 * acc;
}

double generalized_polarization(const PluralityMatrix& matrix,
                                const std::function<double(double)>& f) {
    require_measure_m(matrix);
    require_full_degree(matrix, 2);
    double acc = 0.0;
    for (int a = 0; a < matrix.m(); ++a)
        for (int b = a + 1; b < matrix.m(); ++b) acc += f(matrix.pairwise(a, b));
    return acc;
}

double PairConflict::gap_above() const {
    if (!delta_plus) throw PositivityError("pair_conflict: conditional gap undefined (p in {0,1})");
    return *delta_plus;
}

double PairConflict::gap_below() const {
    if (!delta_minus) throw PositivityError("pair_conflict: conditional gap undefined (p in {0,1})");
    return *delta_minus;
}

double PairConflict::balance() const {
    const double dp = gap_above();
    const double dm = gap_below();
    if (!(dp > 0.0) || !(dm > 0.0))
        throw DegenerateError("pair_conflict: balance needs positive conditional gaps");
    return std::min(dp / dm, dm / dp);
}

double PairConflict::imbalance() const {
    if (!(delta > 0.0)) throw DegenerateError("pair_conflict: imbalance undefined for zero rank gap");
    return std::abs(borda_a - borda_b) / delta;
}

PairConflict pair_conflict(const PluralityMatrix& matrix, int a, int b, double polar_exponent) {
    require_measure_m(matrix);
    check_alt(matrix, a);
    check_alt(matrix, b);
    if (a == b) throw DomainError("pair_conflict: identical alternatives");
    const int m = matrix.m();

    PairConflict r;
    r.a = a;
    r.b = b;
    r.polar_exponent = polar_exponent;
    r.p_ab = matrix.pairwise(a, b);
    r.borda_a = borda_score(matrix, a);
    r.borda_b = borda_score(matrix, b);

    double between = 0.0; // sum over c of Pr[c tops {a,b,c}]
    for (int c = 0; c < m; ++c) {
        if (c == a || c == b) continue;
        between += matrix.entry(triple(a, b, c), c);
    }
    r.delta = 2.0 * (m - 1) - r.borda_a - r.borda_b - 2.0 * between;
    r.beta = r.delta / (m - 1);
    r.alpha = 2.0 * std::min(r.p_ab, 1.0 - r.p_ab);

    const double diff = r.borda_a - r.borda_b;
    r.max_sum = r.delta + (1.0 - 2.0 * r.p_ab) * diff;
    r.max_nash = r.delta * r.delta - diff * diff;
    r.max_swap = r.delta - std::abs(diff);
    r.p_max_polar = std::min(r.p_ab, 1.0 - r.p_ab) * std::pow(r.delta, polar_exponent);

    if (r.p_ab > 0.0 && r.p_ab < 1.0) {
        r.delta_plus = (r.delta + diff) / (2.0 * r.p_ab);
        r.delta_minus = (r.delta - diff) / (2.0 * (1.0 - r.p_ab));
    }
    return r;
}

std::string conflict_rule_name(ConflictRule rule) {
    switch (rule) {
    case ConflictRule::MaxSum: return "max_sum";
    case ConflictRule::MaxNash: return "max_nash";
    case ConflictRule::MaxSwap: return "max_swap";
    case ConflictRule::PMaxPolar: return "p_max_polar";
    }
    return "?";
}

ConflictSelection most_conflictual_pair(const PluralityMatrix& matrix, ConflictRule rule,
                                        double polar_exponent) {
    require_measure_m(matrix);
    const int m = matrix.m();
    ConflictSelection sel;
    sel.rule = rule;
    sel.pair = {-1, -1};
    bool first = true;
    for (int a = 0; a < m; ++a) {
        for (int b = a + 1; b < m; ++b) {
            PairConflict rep;
            try {
                rep = pair_conflict(matrix, a, b, polar_exponent);
            } catch (const DomainError&) {
                sel.skipped_pairs = true;
                continue;
            }
            double score = 0.0;
            switch (rule) {
            case ConflictRule::MaxSum: score = rep.max_sum; break;
            case ConflictRule::MaxNash: score = rep.max_nash; break;
            case ConflictRule::MaxSwap: score = rep.max_swap; break;
            case ConflictRule::PMaxPolar: score = rep.p_max_polar; break;
            }
            sel.reports.push_back(rep);
            if (first || score > sel.score + 1e-12) {
                sel.score = score;
                sel.pair = {a, b};
                sel.tie = false;
                first = false;
            } else if (std::abs(score - sel.score) <= 1e-12) {
                sel.tie = true;
            }
        }
    }
    if (first) throw DegenerateError("most_conflictual_pair: no computable pair");
    return sel;
}

} // namespace plurmat
