#include "plurmat/ranking.hpp"

#include "plurmat/errors.hpp"

#include <algorithm>
#include <numeric>

namespace plurmat {

namespace {

std::vector<std::string> default_labels(int m) {
    if (m < 1) throw DomainError("AlternativeSet: need at least one alternative");
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(m));
    if (m <= 26) {
        for (int i = 0; i < m; ++i) labels.push_back(std::string(1, static_cast<char>('a' + i)));
    } else {
        for (int i = 0; i < m; ++i) labels.push_back("a" + std::to_string(i + 1));
    }
    return labels;
}

} // namespace

AlternativeSet::AlternativeSet(int m) : AlternativeSet(default_labels(m)) {}

AlternativeSet::AlternativeSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.empty()) throw DomainError("AlternativeSet: empty label list");
    for (int i = 0; i < static_cast<int>(labels_.size()); ++i) {
        auto [it, inserted] = index_.emplace(labels_[static_cast<std::size_t>(i)], i);
        if (!inserted) throw DomainError("AlternativeSet: duplicate label '" + labels_[static_cast<std::size_t>(i)] + "'");
    }
}

const std::string& AlternativeSet::label(int i) const {
    if (i < 0 || i >= size()) throw DomainError("AlternativeSet: index out of range");
    return labels_[static_cast<std::size_t>(i)];
}

int AlternativeSet::index_of(std::string_view label) const {
    auto it = index_.find(label);
    if (it == index_.end()) throw DomainError("AlternativeSet: unknown label '" + std::string(label) + "'");
    return it->second;
}

Ranking::Ranking(std::vector<int> order) : order_(std::move(order)) {
    if (order_.empty()) throw DomainError("Ranking: empty order");
    int maxi = 0;
    for (int a : order_) {
        if (a < 0) throw DomainError("Ranking: negative alternative index");
        maxi = std::max(maxi, a);
    }
    positions_.assign(static_cast<std::size_t>(maxi) + 1, -1);
    for (int pos = 0; pos < static_cast<int>(order_.size()); ++pos) {
        int a = order_[static_cast<std::size_t>(pos)];
        if (positions_[static_cast<std::size_t>(a)] != -1)
            throw DomainError("Ranking: alternative " + std::to_string(a) + " appears twice");
        positions_[static_cast<std::size_t>(a)] = pos;
    }
}

Ranking Ranking::identity(int m) {
    std::vector<int> order(static_cast<std::size_t>(m));
    std::iota(order.begin(), order.end(), 0);
    return Ranking(std::move(order));
}

bool Ranking::contains(int a) const {
    return a >= 0 && a < static_cast<int>(positions_.size()) && positions_[static_cast<std::size_t>(a)] != -1;
}

int Ranking::position_of(int a) const {
    if (!contains(a)) throw DomainError("Ranking: alternative " + std::to_string(a) + " not present");
    return positions_[static_cast<std::size_t>(a)];
}

bool Ranking::prefers(int a, int b) const { return position_of(a) < position_of(b); }

bool Ranking::is_complete(int m) const {
    if (static_cast<int>(order_.size()) != m) return false;
    for (int a : order_)
        if (a >= m) return false;
    return true; // distinctness is a construction invariant
}

Ranking Ranking::reversed() const {
    std::vector<int> order(order_.rbegin(), order_.rend());
    return Ranking(std::move(order));
}

int rank_of(const Ranking& r, int a) { return r.position_of(a) + 1; }

Ranking restrict_to(const Ranking& r, const std::vector<int>& subset) {
    if (subset.empty()) throw DomainError("restrict_to: empty subset");
    std::vector<int> kept;
    kept.reserve(subset.size());
    for (int a : r.order()) {
        if (std::find(subset.begin(), subset.end(), a) != subset.end()) kept.push_back(a);
    }
    if (kept.size() != subset.size()) throw DomainError("restrict_to: subset not contained in ranking");
    return Ranking(std::move(kept));
}

int top_of(const Ranking& r, const std::vector<int>& subset) {
    if (subset.empty()) throw DomainError("top_of: empty subset");
    int best = -1;
    int best_pos = -1;
    for (int a : subset) {
        const int pos = r.position_of(a);
        if (best == -1 || pos < best_pos) {
            best = a;
            best_pos = pos;
        }
    }
    return best;
}

} // namespace plurmat
