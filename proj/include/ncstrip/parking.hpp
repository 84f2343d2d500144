#pragma once

// Parking functions, classical and relative to a skew shape.

#include <algorithm>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ncstrip/bijections.hpp"
#include "ncstrip/detail/text.hpp"
#include "ncstrip/errors.hpp"
#include "ncstrip/lattice_path.hpp"
#include "ncstrip/noncrossing_a.hpp"
#include "ncstrip/partition.hpp"
#include "ncstrip/shapes.hpp"

namespace ncstrip {

// Sorted rearrangement b satisfies b_i <= i.
inline bool is_parking_function(const std::vector<int>& seq) {
    std::vector<int> b(seq);
    std::sort(b.begin(), b.end());
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (b[i] < 1 || b[i] > static_cast<int>(i) + 1) return false;
    }
    return true;
}

inline bool is_primitive(const std::vector<int>& seq) {
    return is_parking_function(seq) && std::is_sorted(seq.begin(), seq.end());
}

class ParkingFunction {
public:
    explicit ParkingFunction(std::vector<int> entries) : entries_(std::move(entries)) {
        if (!is_parking_function(entries_)) {
            throw DomainError("(" + detail::join_ints(entries_) + ") is not a parking function");
        }
    }

    const std::vector<int>& entries() const noexcept { return entries_; }
    int length() const noexcept { return static_cast<int>(entries_.size()); }
    bool primitive() const { return std::is_sorted(entries_.begin(), entries_.end()); }
    std::string to_string() const { return detail::join_ints(entries_); }

    friend auto operator<=>(const ParkingFunction&, const ParkingFunction&) = default;

private:
    std::vector<int> entries_;
};

// Multiplicities of the values, sorted.
inline IntPartition pf_type(const ParkingFunction& pf) {
    std::map<int, int> counts;
    for (int v : pf.entries()) ++counts[v];
    std::vector<int> sizes;
    for (const auto& [value, m] : counts) sizes.push_back(m);
    return IntPartition::from_multiset(std::move(sizes));
}

// Weakly increasing parking functions of length n, lexicographically.
inline std::vector<ParkingFunction> enumerate_primitive(int n) {
    if (n < 0) throw DomainError("enumerate_primitive: n must be >= 0");
    std::vector<ParkingFunction> out;
    std::vector<int> seq;
    auto rec = [&](auto&& self, int i, int min_v) -> void {
        if (i > n) {
            out.emplace_back(seq);
            return;
        }
        for (int v = min_v; v <= i; ++v) {
            seq.push_back(v);
            self(self, i + 1, v);
            seq.pop_back();
        }
    };
    rec(rec, 1, 1);
    return out;
}

namespace detail {

// Every distinct rearrangement of each sequence, sorted.
inline std::vector<std::vector<int>> all_rearrangements(const std::vector<std::vector<int>>& sorted_seqs) {
    std::vector<std::vector<int>> out;
    for (auto seq : sorted_seqs) {
        std::sort(seq.begin(), seq.end());
        do {
            out.push_back(seq);
        } while (std::next_permutation(seq.begin(), seq.end()));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace detail

// All parking functions of length n, lexicographically.
inline std::vector<ParkingFunction> enumerate_parking_functions(int n) {
    std::vector<std::vector<int>> primitives;
    for (const auto& pf : enumerate_primitive(n)) primitives.push_back(pf.entries());
    std::vector<ParkingFunction> out;
    for (auto& seq : detail::all_rearrangements(primitives)) out.emplace_back(std::move(seq));
    return out;
}

// The Dyck path E^{m_1} N E^{m_2} N ... E^{m_n} N, where m_i counts the
// entries equal to i, followed by psi_a with k = 1.
inline NoncrossingA primitive_pf_to_ncp(const ParkingFunction& pf) {
    if (!pf.primitive()) throw DomainError("primitive_pf_to_ncp: (" + pf.to_string() + ") is not weakly increasing");
    const int n = pf.length();
    std::vector<Step> steps;
    for (int i = 1; i <= n; ++i) {
        const auto m = std::count(pf.entries().begin(), pf.entries().end(), i);
        steps.insert(steps.end(), static_cast<std::size_t>(m), Step::E);
        steps.push_back(Step::N);
    }
    return psi_a(FussCatalanPath(n, 1, LatticePath(std::move(steps))));
}

// Box heights (0-based): primitive ones are the height sequences of the
// horizontal strips of the shape, the others their rearrangements.
inline std::vector<std::vector<int>> enumerate_shape_parking_functions(const SkewShape& shape, bool primitive_only) {
    auto primitives = enumerate_horizontal_strips(shape);
    if (primitive_only) return primitives;
    return detail::all_rearrangements(primitives);
}

// "3,1,1"
inline ParkingFunction parse_parking_function(std::string_view text) {
    auto entries = detail::parse_int_list(text, "parking function literal");
    try {
        return ParkingFunction(std::move(entries));
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
}

}  // namespace ncstrip
