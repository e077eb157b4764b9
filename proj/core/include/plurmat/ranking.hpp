#pragma once

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace plurmat {

// Ordered collection of distinct alternative labels; index <-> label is a
// bijection. Sizes of 2 are accepted here, measure code insists on >= 3.
class AlternativeSet {
public:
    explicit AlternativeSet(int m);
    explicit AlternativeSet(std::vector<std::string> labels);

    int size() const { return static_cast<int>(labels_.size()); }
    const std::string& label(int i) const;
    int index_of(std::string_view label) const; // throws DomainError if absent
    const std::vector<std::string>& labels() const { return labels_; }

private:
    std::vector<std::string> labels_;
    std::map<std::string, int, std::less<>> index_;
};

// Strict order over a set of alternative indices; order()[0] is the most
// preferred. Entries must be distinct and nonnegative. A ranking over the
// full alternative set is a permutation of 0..m-1 (see is_complete).
class Ranking {
public:
    Ranking() = default;
    explicit Ranking(std::vector<int> order);

    static Ranking identity(int m);

    int size() const { return static_cast<int>(order_.size()); }
    int at(int position) const { return order_[static_cast<std::size_t>(position)]; }
    const std::vector<int>& order() const { return order_; }

    bool contains(int a) const;
    int position_of(int a) const; // 0-based; throws DomainError if absent
    bool prefers(int a, int b) const;
    bool is_complete(int m) const; // permutation of exactly 0..m-1

    Ranking reversed() const;

    friend bool operator==(const Ranking& x, const Ranking& y) { return x.order_ == y.order_; }
    friend std::strong_ordering operator<=>(const Ranking& x, const Ranking& y) {
        return x.order_ <=> y.order_;
    }

private:
    std::vector<int> order_;
    std::vector<int> positions_; // index -> position, -1 when absent
};

// 1-based rank of a: 1 + #alternatives preferred to a.
int rank_of(const Ranking& r, int a);

// Restriction of r to the alternatives in subset, relative order kept.
Ranking restrict_to(const Ranking& r, const std::vector<int>& subset);

// Most preferred member of subset under r.
int top_of(const Ranking& r, const std::vector<int>& subset);

} // namespace plurmat
