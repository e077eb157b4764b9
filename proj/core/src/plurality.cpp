#include "plurmat/plurality.hpp"

#include "plurmat/combin.hpp"
#include "plurmat/errors.hpp"

#include <algorithm>
#include <cmath>

namespace plurmat {

namespace {

// Entry budget for a single matrix request.
constexpr std::size_t kMaxEntries = 4'000'000;

void check_subset(const std::vector<int>& subset, int m) {
    if (subset.size() < 2) throw DomainError("plurality: subsets must have at least two alternatives");
    for (std::size_t i = 0; i < subset.size(); ++i) {
        if (subset[i] < 0 || subset[i] >= m) throw DomainError("plurality: alternative index out of range");
        if (i > 0 && subset[i] <= subset[i - 1]) throw DomainError("plurality: subset must be strictly increasing");
    }
}

int index_in(const std::vector<int>& subset, int a) {
    auto it = std::lower_bound(subset.begin(), subset.end(), a);
    if (it == subset.end() || *it != a)
        throw DomainError("plurality: alternative " + std::to_string(a) + " not in subset");
    return static_cast<int>(it - subset.begin());
}

std::size_t degree_entry_count(int m, int k) {
    return static_cast<std::size_t>(binom_d(m, k) * k);
}

} // namespace

PluralityMatrix::PluralityMatrix(int m, Provenance provenance) : m_(m), provenance_(provenance) {
    if (m < 2) throw DomainError("PluralityMatrix: need m >= 2");
}

bool PluralityMatrix::has_degree(int k) const { return slices_.count(k) > 0; }

std::vector<int> PluralityMatrix::degrees() const {
    std::vector<int> out;
    out.reserve(slices_.size());
    for (const auto& [k, s] : slices_) out.push_back(k);
    return out;
}

const std::map<std::vector<int>, MatrixRow>& PluralityMatrix::slice(int k) const {
    auto it = slices_.find(k);
    if (it == slices_.end())
        throw DependencyError("PluralityMatrix: degree-" + std::to_string(k) + " slice not present");
    return it->second;
}

bool PluralityMatrix::has_entry(const std::vector<int>& subset, int a) const {
    auto sit = slices_.find(static_cast<int>(subset.size()));
    if (sit == slices_.end()) return false;
    auto rit = sit->second.find(subset);
    if (rit == sit->second.end()) return false;
    return std::binary_search(subset.begin(), subset.end(), a);
}

double PluralityMatrix::entry(const std::vector<int>& subset, int a) const {
    check_subset(subset, m_);
    const auto& rows = slice(static_cast<int>(subset.size()));
    auto it = rows.find(subset);
    if (it == rows.end()) throw DependencyError("PluralityMatrix: subset row not present");
    return it->second.p[static_cast<std::size_t>(index_in(subset, a))];
}

std::uint64_t PluralityMatrix::count(const std::vector<int>& subset, int a) const {
    check_subset(subset, m_);
    const auto& rows = slice(static_cast<int>(subset.size()));
    auto it = rows.find(subset);
    if (it == rows.end()) throw DependencyError("PluralityMatrix: subset row not present");
    return it->second.counts[static_cast<std::size_t>(index_in(subset, a))];
}

std::uint64_t PluralityMatrix::row_total(const std::vector<int>& subset) const {
    check_subset(subset, m_);
    const auto& rows = slice(static_cast<int>(subset.size()));
    auto it = rows.find(subset);
    if (it == rows.end()) throw DependencyError("PluralityMatrix: subset row not present");
    return it->second.total;
}

double PluralityMatrix::pairwise(int a, int b) const {
    if (a == b) throw DomainError("pairwise: identical alternatives");
    std::vector<int> pair{std::min(a, b), std::max(a, b)};
    return entry(pair, a);
}

void PluralityMatrix::set_row(const std::vector<int>& subset, const std::vector<double>& values) {
    check_subset(subset, m_);
    if (values.size() != subset.size()) throw DomainError("set_row: size mismatch");
    double total = 0.0;
    for (double v : values) {
        if (v < -1e-12 || v > 1.0 + 1e-12) throw DomainError("set_row: probability out of [0,1]");
        total += v;
    }
    if (std::abs(total - 1.0) > 1e-8) throw DomainError("set_row: row does not sum to 1");
    MatrixRow row;
    row.p = values;
    row.counts.assign(values.size(), 0);
    slices_[static_cast<int>(subset.size())][subset] = std::move(row);
}

void PluralityMatrix::set_counts(const std::vector<int>& subset, const std::vector<std::uint64_t>& counts) {
    check_subset(subset, m_);
    if (counts.size() != subset.size()) throw DomainError("set_counts: size mismatch");
    MatrixRow row;
    row.counts = counts;
    row.total = 0;
    for (std::uint64_t c : counts) row.total += c;
    row.p.assign(counts.size(), 0.0);
    if (row.total > 0)
        for (std::size_t i = 0; i < counts.size(); ++i)
            row.p[i] = static_cast<double>(counts[i]) / static_cast<double>(row.total);
    slices_[static_cast<int>(subset.size())][subset] = std::move(row);
}

void PluralityMatrix::record_winner(const std::vector<int>& subset, int winner) {
    if (provenance_ != Provenance::Empirical)
        throw DomainError("record_winner: matrix is not empirical");
    check_subset(subset, m_);
    const int pos = index_in(subset, winner);
    auto& row = slices_[static_cast<int>(subset.size())][subset];
    if (row.p.empty()) {
        row.p.assign(subset.size(), 0.0);
        row.counts.assign(subset.size(), 0);
        row.total = 0;
    }
    row.counts[static_cast<std::size_t>(pos)] += 1;
    row.total += 1;
    for (std::size_t i = 0; i < row.p.size(); ++i)
        row.p[i] = static_cast<double>(row.counts[i]) / static_cast<double>(row.total);
}

void PluralityMatrix::merge_counts(const PluralityMatrix& other) {
    if (provenance_ != Provenance::Empirical || other.provenance_ != Provenance::Empirical)
        throw DomainError("merge_counts: both matrices must be empirical");
    if (other.m_ != m_) throw DomainError("merge_counts: mismatched m");
    for (const auto& [k, rows] : other.slices_) {
        for (const auto& [subset, src] : rows) {
            auto& dst = slices_[k][subset];
            if (dst.p.empty()) {
                dst.p.assign(subset.size(), 0.0);
                dst.counts.assign(subset.size(), 0);
                dst.total = 0;
            }
            for (std::size_t i = 0; i < subset.size(); ++i) dst.counts[i] += src.counts[i];
            dst.total += src.total;
            if (dst.total > 0)
                for (std::size_t i = 0; i < subset.size(); ++i)
                    dst.p[i] = static_cast<double>(dst.counts[i]) / static_cast<double>(dst.total);
        }
    }
}

std::size_t PluralityMatrix::entry_count() const {
    std::size_t n = 0;
    for (const auto& [k, rows] : slices_) n += rows.size() * static_cast<std::size_t>(k);
    return n;
}

double rank_marginal_focal_entry(const std::vector<double>& w, int m, int s) {
    if (s < 1 || s > m) throw DomainError("rank_marginal_focal_entry: subset size out of range");
    const double denom = binom_d(m - 1, s - 1);
    double acc = 0.0;
    for (int j = 1; j <= m; ++j) acc += w[static_cast<std::size_t>(j - 1)] * binom_d(m - j, s - 1);
    return acc / denom;
}

namespace {

double rank_marginal_entry(const RankMarginalProfile& rm, int m, const std::vector<int>& subset, int a) {
    const int s = static_cast<int>(subset.size());
    const bool has_focal = std::binary_search(subset.begin(), subset.end(), rm.focal);
    if (!has_focal) return 1.0 / s; // non-focal alternatives are exchangeable
    const double pf = rank_marginal_focal_entry(rm.w, m, s);
    if (a == rm.focal) return pf;
    return (1.0 - pf) / (s - 1);
}

double support_entry(const std::vector<std::pair<Ranking, double>>& atoms,
                     const std::vector<int>& subset, int a) {
    double acc = 0.0;
    for (const auto& [r, p] : atoms)
        if (top_of(r, subset) == a) acc += p;
    return acc;
}

} // namespace

double plurality_entry(const Profile& profile, const std::vector<int>& subset, int a) {
    check_subset(subset, profile.m());
    if (!std::binary_search(subset.begin(), subset.end(), a))
        throw DomainError("plurality_entry: alternative not in subset");
    if (profile.kind() == Profile::Kind::RankMarginal)
        return rank_marginal_entry(profile.rank_marginal_data(), profile.m(), subset, a);
    return support_entry(profile.support(), subset, a);
}

PluralityMatrix plurality_matrix(const Profile& profile, const std::set<int>& degrees) {
    const int m = profile.m();
    std::size_t total_entries = 0;
    for (int k : degrees) {
        if (k < 2 || k > m) throw DomainError("plurality_matrix: degree " + std::to_string(k) + " out of [2, m]");
        total_entries += degree_entry_count(m, k);
    }
    if (total_entries > kMaxEntries)
        throw ResourceError("plurality_matrix: " + std::to_string(total_entries) +
                            " entries requested; sample the profile and estimate instead");

    PluralityMatrix out(m, PluralityMatrix::Provenance::Exact);

    if (profile.kind() == Profile::Kind::RankMarginal) {
        const auto& rm = profile.rank_marginal_data();
        for (int k : degrees) {
            std::vector<int> subset(static_cast<std::size_t>(k));
            for (int i = 0; i < k; ++i) subset[static_cast<std::size_t>(i)] = i;
            do {
                std::vector<double> row(subset.size());
                for (std::size_t i = 0; i < subset.size(); ++i)
                    row[i] = rank_marginal_entry(rm, m, subset, subset[i]);
                out.set_row(subset, row);
            } while (next_subset(subset, m));
        }
        return out;
    }

    const auto atoms = profile.support();
    // Cost scales with |support| * #subsets; the entry cap above already
    // bounds #subsets, so additionally bound the product.
    if (atoms.size() * (total_entries / 2 + 1) > 200'000'000ULL)
        throw ResourceError("plurality_matrix: support too large for the requested degrees");

    for (int k : degrees) {
        std::vector<int> subset(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) subset[static_cast<std::size_t>(i)] = i;
        do {
            std::vector<double> row(subset.size(), 0.0);
            for (const auto& [r, p] : atoms) {
                const int w = top_of(r, subset);
                row[static_cast<std::size_t>(index_in(subset, w))] += p;
            }
            out.set_row(subset, row);
        } while (next_subset(subset, m));
    }
    return out;
}

double aggregate_plurality(const PluralityMatrix& matrix, int a, int s) {
    const int m = matrix.m();
    if (a < 0 || a >= m) throw DomainError("aggregate_plurality: alternative out of range");
    if (s < 0 || s > m - 1) throw DomainError("aggregate_plurality: order out of range");
    if (s == 0) return 1.0;
    const auto& rows = matrix.slice(s + 1); // throws DependencyError when absent
    double acc = 0.0;
    for (const auto& [subset, row] : rows) {
        auto it = std::lower_bound(subset.begin(), subset.end(), a);
        if (it != subset.end() && *it == a) acc += row.p[static_cast<std::size_t>(it - subset.begin())];
    }
    return acc;
}

AggregatePlurality aggregate_vector(const PluralityMatrix& matrix, int a) {
    AggregatePlurality agg;
    agg.alt = a;
    agg.max_valid = matrix.m() - 1;
    agg.P.resize(static_cast<std::size_t>(matrix.m()));
    for (int s = 0; s < matrix.m(); ++s) agg.P[static_cast<std::size_t>(s)] = aggregate_plurality(matrix, a, s);
    return agg;
}

AggregatePlurality aggregate_vector(const Profile& profile, int a, int max_order) {
    const int m = profile.m();
    if (a < 0 || a >= m) throw DomainError("aggregate_vector: alternative out of range");
    const int top = (max_order < 0 || max_order > m - 1) ? m - 1 : max_order;
    AggregatePlurality agg;
    agg.alt = a;
    agg.max_valid = top;
    agg.P.assign(static_cast<std::size_t>(m), 0.0);
    agg.P[0] = 1.0;

    if (profile.kind() == Profile::Kind::RankMarginal) {
        const auto& rm = profile.rank_marginal_data();
        if (a == rm.focal) {
            for (int s = 1; s <= top; ++s) {
                double acc = 0.0;
                for (int j = 1; j <= m; ++j)
                    acc += rm.w[static_cast<std::size_t>(j - 1)] * binom_d(m - j, s);
                agg.P[static_cast<std::size_t>(s)] = acc;
            }
        } else {
            // Non-focal alternatives split the remaining mass evenly:
            // sum over all a of P_s(a) equals C(m, s+1).
            AggregatePlurality focal = aggregate_vector(profile, rm.focal, top);
            for (int s = 1; s <= top; ++s)
                agg.P[static_cast<std::size_t>(s)] =
                    (binom_d(m, s + 1) - focal.P[static_cast<std::size_t>(s)]) / (m - 1);
        }
        return agg;
    }

    auto accumulate = [&agg, m, top, a](const Ranking& r, double p) {
        const int beaten = m - rank_of(r, a);
        for (int s = 1; s <= top; ++s)
            agg.P[static_cast<std::size_t>(s)] += p * binom_d(beaten, s);
    };
    if (profile.kind() == Profile::Kind::Sampled) {
        const auto& data = profile.sampled_data();
        for (const auto& [r, w] : data.votes)
            if (w > 0) accumulate(r, w / data.total_weight);
    } else {
        for (const auto& [r, p] : profile.exact_data().mass)
            if (p > 0) accumulate(r, p);
    }
    return agg;
}

double rank_probability(const AggregatePlurality& agg, int i) {
    const int m = agg.m();
    if (i < 1 || i > m) throw DomainError("rank_probability: rank out of [1, m]");
    if (agg.max_valid < m - 1)
        throw DependencyError("rank_probability: needs the full aggregate vector P_0..P_{m-1}");
    long double acc = 0.0L;
    for (int k = m - i; k <= m - 1; ++k) {
        const long double term =
            binom_d(k, m - i) * static_cast<long double>(agg.P[static_cast<std::size_t>(k)]);
        acc += ((k - (m - i)) % 2 == 0) ? term : -term;
    }
    return static_cast<double>(acc);
}

std::vector<double> rank_distribution(const AggregatePlurality& agg) {
    std::vector<double> out(static_cast<std::size_t>(agg.m()));
    for (int i = 1; i <= agg.m(); ++i) out[static_cast<std::size_t>(i - 1)] = rank_probability(agg, i);
    return out;
}

double anti_plurality(const AggregatePlurality& agg) {
    if (agg.max_valid < agg.m() - 1)
        throw DependencyError("anti_plurality: needs the full aggregate vector P_0..P_{m-1}");
    long double acc = 0.0L;
    for (int k = 0; k < agg.m(); ++k) {
        const long double term = agg.P[static_cast<std::size_t>(k)];
        acc += (k % 2 == 0) ? term : -term;
    }
    return static_cast<double>(1.0L - acc);
}

} // namespace plurmat
