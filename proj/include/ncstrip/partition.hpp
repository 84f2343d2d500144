#pragma once

#include <algorithm>
#include <compare>
#include <functional>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "ncstrip/counting.hpp"
#include "ncstrip/detail/text.hpp"
#include "ncstrip/errors.hpp"

namespace ncstrip {

// A weakly decreasing sequence of positive integers. The empty partition is
// a legitimate value (weight 0, length 0, multiplicity product 1).
class IntPartition {
public:
    IntPartition() = default;

    explicit IntPartition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1) throw DomainError("IntPartition: parts must be positive");
            if (i > 0 && parts_[i - 1] < parts_[i]) {
                throw DomainError("IntPartition: parts must be weakly decreasing");
            }
        }
    }

    IntPartition(std::initializer_list<int> parts) : IntPartition(std::vector<int>(parts)) {}

    // Sorts the given sizes into a partition; zero entries are dropped.
    static IntPartition from_multiset(std::vector<int> sizes) {
        std::erase(sizes, 0);
        std::sort(sizes.begin(), sizes.end(), std::greater<>());
        return IntPartition(std::move(sizes));
    }

    const std::vector<int>& parts() const noexcept { return parts_; }
    bool empty() const noexcept { return parts_.empty(); }
    int operator[](std::size_t i) const { return parts_.at(i); }

    // Part i, or 0 past the end (the usual zero padding).
    int part_or_zero(std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

    friend auto operator<=>(const IntPartition&, const IntPartition&) = default;

    // "(2,1)"; the empty partition prints as "()".
    std::string to_string() const { return "(" + detail::join_ints(parts_) + ")"; }

private:
    std::vector<int> parts_;
};

inline int weight(const IntPartition& p) {
    return std::accumulate(p.parts().begin(), p.parts().end(), 0);
}

inline int length(const IntPartition& p) { return static_cast<int>(p.parts().size()); }

// m_i(p): how many parts equal i.
inline int multiplicity(const IntPartition& p, int part) {
    return static_cast<int>(std::count(p.parts().begin(), p.parts().end(), part));
}

// m_1(p)! m_2(p)! ...
inline BigNat multiplicity_product(const IntPartition& p) {
    BigNat result = 1;
    const auto& parts = p.parts();
    std::size_t i = 0;
    while (i < parts.size()) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        result *= factorial(static_cast<int>(j - i));
        i = j;
    }
    return result;
}

inline IntPartition with_part(const IntPartition& p, int part) {
    auto parts = p.parts();
    parts.push_back(part);
    return IntPartition::from_multiset(std::move(parts));
}

// Removes one occurrence of `part`; DomainError if there is none.
inline IntPartition without_part(const IntPartition& p, int part) {
    auto parts = p.parts();
    auto it = std::find(parts.begin(), parts.end(), part);
    if (it == parts.end()) {
        throw DomainError("without_part: " + p.to_string() + " has no part " + std::to_string(part));
    }
    parts.erase(it);
    return IntPartition(std::move(parts));
}

// Ascending weight, then reverse-lexicographic within a weight:
// (), (1), (2), (1,1), (3), (2,1), (1,1,1), ...
struct CanonicalOrder {
    bool operator()(const IntPartition& a, const IntPartition& b) const {
        int wa = weight(a), wb = weight(b);
        if (wa != wb) return wa < wb;
        return std::lexicographical_compare(b.parts().begin(), b.parts().end(),
                                            a.parts().begin(), a.parts().end());
    }
};

namespace detail {

inline void partitions_rec(int remaining, int max_part, std::vector<int>& prefix,
                           std::vector<IntPartition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        prefix.push_back(part);
        partitions_rec(remaining - part, part, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace detail

// Partitions of exactly n, reverse-lexicographic.
inline std::vector<IntPartition> partitions_of(int n) {
    if (n < 0) throw DomainError("partitions_of: n must be >= 0");
    std::vector<IntPartition> out;
    std::vector<int> prefix;
    detail::partitions_rec(n, n, prefix, out);
    return out;
}

// Every partition of every n' in [0, n], in CanonicalOrder.
inline std::vector<IntPartition> partitions_with_weight_at_most(int n) {
    if (n < 0) throw DomainError("partitions_with_weight_at_most: n must be >= 0");
    std::vector<IntPartition> out;
    for (int m = 0; m <= n; ++m) {
        auto level = partitions_of(m);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

// Accepts "2,1", "(2,1)", "" and "()"; parts may be given in any order.
inline IntPartition parse_partition(std::string_view text) {
    text = detail::trim(text);
    if (!text.empty() && text.front() == '(') {
        if (text.back() != ')') throw ParseError("partition literal: unbalanced parenthesis");
        text = text.substr(1, text.size() - 2);
    }
    auto parts = detail::parse_int_list(text, "partition literal");
    for (int p : parts) {
        if (p < 1) throw ParseError("partition literal: parts must be positive");
    }
    return IntPartition::from_multiset(std::move(parts));
}

}  // namespace ncstrip
