#include "plurmat/structured.hpp"

#include "plurmat/combin.hpp"
#include "plurmat/errors.hpp"

#include <algorithm>
#include <cmath>

namespace plurmat {

StrengthVector::StrengthVector(std::vector<double> values) : v(std::move(values)) {
    if (v.size() < 2) throw DomainError("StrengthVector: need at least two alternatives");
    for (double x : v)
        if (!(x > 0)) throw DomainError("StrengthVector: strengths must be positive");
}

double pl_subset_probability(const StrengthVector& strengths, const std::vector<int>& subset, int a) {
    double denom = 0.0;
    bool found = false;
    for (int x : subset) {
        if (x < 0 || x >= strengths.m()) throw DomainError("pl_subset_probability: index out of range");
        denom += strengths.v[static_cast<std::size_t>(x)];
        found = found || (x == a);
    }
    if (!found) throw DomainError("pl_subset_probability: alternative not in subset");
    return strengths.v[static_cast<std::size_t>(a)] / denom;
}

PluralityMatrix pl_lift(const PluralityMatrix& matrix, int reference, const std::set<int>& degrees) {
    const int m = matrix.m();
    if (reference < 0 || reference >= m) throw DomainError("pl_lift: reference out of range");

    // Odds against the reference, accumulated in log space to keep the
    // ratio stable when p_ar approaches 1.
    std::vector<double> log_odds(static_cast<std::size_t>(m), 0.0);
    for (int a = 0; a < m; ++a) {
        if (a == reference) continue;
        const double p = matrix.pairwise(a, reference);
        if (!(p > 0.0) || !(p < 1.0))
            throw PositivityError("pl_lift: boundary pairwise proportion against the reference; "
                                  "the degree-2 collapse is inapplicable");
        log_odds[static_cast<std::size_t>(a)] = std::log(p) - std::log1p(-p);
    }

    PluralityMatrix out(m, PluralityMatrix::Provenance::Exact);
    for (int k : degrees) {
        if (k < 2 || k > m) throw DomainError("pl_lift: degree out of [2, m]");
        std::vector<int> subset(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) subset[static_cast<std::size_t>(i)] = i;
        do {
            double max_lo = log_odds[static_cast<std::size_t>(subset[0])];
            for (int x : subset) max_lo = std::max(max_lo, log_odds[static_cast<std::size_t>(x)]);
            double denom = 0.0;
            std::vector<double> row(subset.size());
            for (std::size_t i = 0; i < subset.size(); ++i)
                denom += std::exp(log_odds[static_cast<std::size_t>(subset[i])] - max_lo);
            for (std::size_t i = 0; i < subset.size(); ++i)
                row[i] = std::exp(log_odds[static_cast<std::size_t>(subset[i])] - max_lo) / denom;
            out.set_row(subset, row);
        } while (next_subset(subset, m));
    }
    return out;
}

namespace {

// Consecutive-pairwise differences in axis order, no validity checks.
std::vector<std::pair<int, double>> sp_raw_entries(const Ranking& axis,
                                                   const PluralityMatrix& matrix,
                                                   const std::vector<int>& subset) {
    const int m = matrix.m();
    if (!axis.is_complete(m)) throw DomainError("sp entries: axis must order all alternatives");
    if (subset.size() < 2) throw DomainError("sp entries: need at least two alternatives");

    std::vector<int> along_axis(subset);
    std::sort(along_axis.begin(), along_axis.end(),
              [&axis](int x, int y) { return axis.position_of(x) < axis.position_of(y); });

    const int k = static_cast<int>(along_axis.size());
    std::vector<std::pair<int, double>> out;
    out.reserve(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) {
        // Pr[this element beats its axis successor in the subset], with
        // the conventions 1 past the right end and 0 past the left end.
        const double beats_next =
            (j == k - 1) ? 1.0 : matrix.pairwise(along_axis[static_cast<std::size_t>(j)],
                                                 along_axis[static_cast<std::size_t>(j + 1)]);
        const double prev_beats =
            (j == 0) ? 0.0 : matrix.pairwise(along_axis[static_cast<std::size_t>(j - 1)],
                                             along_axis[static_cast<std::size_t>(j)]);
        out.emplace_back(along_axis[static_cast<std::size_t>(j)], beats_next - prev_beats);
    }
    return out;
}

} // namespace

std::vector<std::pair<int, double>> sp_subset_probabilities(const Ranking& axis,
                                                            const PluralityMatrix& matrix,
                                                            const std::vector<int>& subset,
                                                            double tol) {
    auto out = sp_raw_entries(axis, matrix, subset);
    for (auto& [alt, p] : out) {
        if (p < -tol)
            throw DomainError("sp_subset_probabilities: negative entry " + std::to_string(p) +
                              "; pairwise data is not single-peaked on this axis");
        p = std::max(p, 0.0);
    }
    return out;
}

PluralityMatrix sp_lift(const Ranking& axis, const PluralityMatrix& matrix,
                        const std::set<int>& degrees, double tol) {
    const int m = matrix.m();
    PluralityMatrix out(m, PluralityMatrix::Provenance::Exact);
    for (int k : degrees) {
        if (k < 2 || k > m) throw DomainError("sp_lift: degree out of [2, m]");
        std::vector<int> subset(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) subset[static_cast<std::size_t>(i)] = i;
        do {
            const auto entries = sp_subset_probabilities(axis, matrix, subset, tol);
            std::vector<double> row(subset.size(), 0.0);
            for (const auto& [alt, p] : entries) {
                const auto it = std::lower_bound(subset.begin(), subset.end(), alt);
                row[static_cast<std::size_t>(it - subset.begin())] = p;
            }
            out.set_row(subset, row);
        } while (next_subset(subset, m));
    }
    return out;
}

namespace {

double max_deviation(const PluralityMatrix& truth, const PluralityMatrix& lifted) {
    double worst = 0.0;
    for (int k : truth.degrees()) {
        for (const auto& [subset, row] : truth.slice(k)) {
            for (std::size_t i = 0; i < subset.size(); ++i)
                worst = std::max(worst, std::abs(row.p[i] - lifted.entry(subset, subset[i])));
        }
    }
    return worst;
}

std::set<int> all_degrees(int m) {
    std::set<int> degrees;
    for (int k = 2; k <= m; ++k) degrees.insert(k);
    return degrees;
}

} // namespace

double verify_collapse(const Profile& profile, const PlStructure& s) {
    const auto degrees = all_degrees(profile.m());
    const PluralityMatrix truth = plurality_matrix(profile, degrees);
    const PluralityMatrix lifted = pl_lift(truth, s.reference, degrees);
    return max_deviation(truth, lifted);
}

double verify_collapse(const Profile& profile, const SpStructure& s) {
    const auto degrees = all_degrees(profile.m());
    const PluralityMatrix truth = plurality_matrix(profile, degrees);
    // Raw differences so that a non-single-peaked profile reports its
    // deviation instead of refusing.
    double worst = 0.0;
    for (int k : degrees) {
        for (const auto& [subset, row] : truth.slice(k)) {
            for (const auto& [alt, predicted] : sp_raw_entries(s.axis, truth, subset))
                worst = std::max(worst, std::abs(truth.entry(subset, alt) - predicted));
        }
    }
    return worst;
}

} // namespace plurmat
