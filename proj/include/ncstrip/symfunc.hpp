#pragma once

// Formal sums of complete homogeneous symmetric functions h_lambda with
// natural coefficients. Nothing here evaluates h_lambda at variables.

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "ncstrip/counting.hpp"
#include "ncstrip/partition.hpp"
#include "ncstrip/shapes.hpp"

namespace ncstrip {

class HExpansion {
public:
    using Terms = std::map<IntPartition, BigNat, CanonicalOrder>;

    HExpansion() = default;

    void add(const IntPartition& lambda, const BigNat& coeff = 1) {
        if (coeff == 0) return;
        terms_[lambda] += coeff;
    }

    BigNat coefficient(const IntPartition& lambda) const {
        auto it = terms_.find(lambda);
        return it == terms_.end() ? BigNat(0) : it->second;
    }

    // Canonical partition order; never holds a zero coefficient.
    const Terms& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool empty() const noexcept { return terms_.empty(); }

    BigNat coefficient_sum() const {
        BigNat total = 0;
        for (const auto& [lambda, c] : terms_) total += c;
        return total;
    }

    // Highest degree first, e.g. "2h(2,1) + 2h(2) + h(1,1) + 2h(1) + h()".
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::vector<const Terms::value_type*> order;
        for (const auto& t : terms_) order.push_back(&t);
        std::stable_sort(order.begin(), order.end(), [](auto* a, auto* b) {
            return weight(a->first) > weight(b->first);
        });
        std::string out;
        for (const auto* t : order) {
            if (!out.empty()) out += " + ";
            if (t->second != 1) out += t->second.str();
            out += "h" + t->first.to_string();
        }
        return out;
    }

    friend bool operator==(const HExpansion& a, const HExpansion& b) { return a.terms_ == b.terms_; }

private:
    Terms terms_;
};

// f_{outer/inner}: one h_type for every r-strip.
inline HExpansion expand_skew(const SkewShape& shape) {
    std::map<IntPartition, BigNat, CanonicalOrder> counts;
    std::vector<int> ys;
    std::vector<int> sizes;
    detail::shape_paths_rec(shape, 1, shape.start_height(), ys, [&](const std::vector<int>& heights) {
        // E step at height y carries a box at y - 1 unless y is the column's lower end
        sizes.clear();
        int prev = -1;
        for (std::size_t c = 0; c < heights.size(); ++c) {
            const int box = heights[c] > shape.columns()[c].lo ? heights[c] - 1 : -1;
            if (box >= 0 && box == prev) ++sizes.back();
            else if (box >= 0) sizes.push_back(1);
            prev = box;
        }
        counts[IntPartition::from_multiset(sizes)] += 1;
    });
    HExpansion out;
    for (const auto& [lambda, c] : counts) out.add(lambda, c);
    return out;
}

// Closed form for the stretched staircase (n^{kn})/((n-1)^k,...,1^k):
// coefficient of h_lambda, |lambda| <= n, is
//   (k(n+1))! (n+1-|lambda|) / ((n+1) m_lambda (k(n+1)-l(lambda))!).
inline HExpansion fuss_a_expansion_formula(int n, int k) {
    if (n < 1 || k < 1) throw DomainError("fuss_a_expansion_formula: need n >= 1, k >= 1");
    const int big = k * (n + 1);
    HExpansion out;
    for (const auto& lambda : partitions_with_weight_at_most(n)) {
        BigNat num = factorial(big) * (n + 1 - weight(lambda));
        BigNat den = BigNat(n + 1) * multiplicity_product(lambda) * factorial(big - length(lambda));
        out.add(lambda, exact_div(num, den));
    }
    return out;
}

// Closed form for the rectangle (n^{kn}): (kn)! / (m_lambda (kn - l(lambda))!).
inline HExpansion fuss_b_expansion_formula(int n, int k) {
    if (n < 1 || k < 1) throw DomainError("fuss_b_expansion_formula: need n >= 1, k >= 1");
    HExpansion out;
    for (const auto& lambda : partitions_with_weight_at_most(n)) {
        BigNat den = multiplicity_product(lambda) * factorial(k * n - length(lambda));
        out.add(lambda, exact_div(factorial(k * n), den));
    }
    return out;
}

// The parking function symmetric function pf_n:
// sum over lambda |- n of n! / (m_lambda (n+1-l(lambda))!) h_lambda.
inline HExpansion parking_expansion(int n) {
    if (n < 1) throw DomainError("parking_expansion: need n >= 1");
    HExpansion out;
    for (const auto& lambda : partitions_of(n)) {
        BigNat den = multiplicity_product(lambda) * factorial(n + 1 - length(lambda));
        out.add(lambda, exact_div(factorial(n), den));
    }
    return out;
}

inline HExpansion top_homogeneous_part(const HExpansion& e, int degree) {
    HExpansion out;
    for (const auto& [lambda, c] : e.terms()) {
        if (weight(lambda) == degree) out.add(lambda, c);
    }
    return out;
}

struct CoefficientDiff {
    IntPartition lambda;
    BigNat lhs;
    BigNat rhs;
};

struct ExpansionComparison {
    std::vector<CoefficientDiff> diffs;

    bool equal() const noexcept { return diffs.empty(); }
    explicit operator bool() const noexcept { return equal(); }

    std::string report() const {
        if (diffs.empty()) return "expansions agree";
        std::ostringstream out;
        for (const auto& d : diffs) {
            out << "h" << d.lambda.to_string() << ": " << d.lhs.str() << " != " << d.rhs.str() << "\n";
        }
        return out.str();
    }
};

inline ExpansionComparison h_expansions_equal(const HExpansion& a, const HExpansion& b) {
    ExpansionComparison cmp;
    std::map<IntPartition, bool, CanonicalOrder> keys;
    for (const auto& t : a.terms()) keys[t.first] = true;
    for (const auto& t : b.terms()) keys[t.first] = true;
    for (const auto& [lambda, unused] : keys) {
        auto ca = a.coefficient(lambda), cb = b.coefficient(lambda);
        if (ca != cb) cmp.diffs.push_back({lambda, ca, cb});
    }
    return cmp;
}

}  // namespace ncstrip
