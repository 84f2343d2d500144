#pragma once

// Type-B noncrossing partitions of [N]^+- = {-N, ..., -1, 1, ..., N}, drawn on
// a 2N-gon whose vertices carry 1, 2, ..., N, -1, -2, ..., -N clockwise. All
// crossing tests run on vertex positions 0 .. 2N-1, not on labels.

#include <algorithm>
#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ncstrip/counting.hpp"
#include "ncstrip/detail/text.hpp"
#include "ncstrip/errors.hpp"
#include "ncstrip/noncrossing_a.hpp"
#include "ncstrip/partition.hpp"

namespace ncstrip {

// Clockwise vertex position of a label: 1..N -> 0..N-1, -1..-N -> N..2N-1.
inline int signed_position(int label, int half) { return label > 0 ? label - 1 : half - label - 1; }
inline int signed_label(int position, int half) { return position < half ? position + 1 : half - position - 1; }

// Rank in the order -1 < -2 < ... < -N < 1 < 2 < ... < N.
inline int signed_rank(int label, int half) { return label < 0 ? -label - 1 : half + label - 1; }

// A set partition of [N]^+-, blocks stored in clockwise position order and
// sorted by their first position.
class SignedSetPartition {
public:
    SignedSetPartition() = default;

    SignedSetPartition(int half, std::vector<Block> blocks) : half_(half), blocks_(std::move(blocks)) {
        if (half_ < 0) throw DomainError("signed partition: negative ground set size");
        std::vector<int> seen(static_cast<std::size_t>(2 * half_), 0);
        for (auto& b : blocks_) {
            if (b.empty()) throw DomainError("signed partition: empty block");
            for (int x : b) {
                if (x == 0 || x < -half_ || x > half_) {
                    throw DomainError("signed partition: element " + std::to_string(x) + " is outside [" +
                                      std::to_string(half_) + "]^+-");
                }
                if (seen[static_cast<std::size_t>(signed_position(x, half_))]++) {
                    throw DomainError("signed partition: element " + std::to_string(x) + " appears twice");
                }
            }
            std::sort(b.begin(), b.end(), [this](int a, int c) {
                return signed_position(a, half_) < signed_position(c, half_);
            });
        }
        for (int pos = 0; pos < 2 * half_; ++pos) {
            if (!seen[static_cast<std::size_t>(pos)]) {
                throw DomainError("signed partition: element " + std::to_string(signed_label(pos, half_)) +
                                  " is missing");
            }
        }
        std::sort(blocks_.begin(), blocks_.end(), [this](const Block& a, const Block& b) {
            return signed_position(a.front(), half_) < signed_position(b.front(), half_);
        });
    }

    int half() const noexcept { return half_; }
    const std::vector<Block>& blocks() const noexcept { return blocks_; }

    // Blocks ordered by minimum under -1 < -2 < ... < -N < 1 < ... < N, each
    // listed clockwise starting from that minimum.
    std::vector<Block> canonical_listing() const {
        std::vector<Block> out;
        for (const auto& b : blocks_) {
            auto lowest = std::min_element(b.begin(), b.end(), [this](int a, int c) {
                return signed_rank(a, half_) < signed_rank(c, half_);
            });
            Block rotated(lowest, b.end());
            rotated.insert(rotated.end(), b.begin(), lowest);
            out.push_back(std::move(rotated));
        }
        std::sort(out.begin(), out.end(), [this](const Block& a, const Block& b) {
            return signed_rank(a.front(), half_) < signed_rank(b.front(), half_);
        });
        return out;
    }

    // Canonical listing, e.g. "-1,-2,12/-3,-7,11/...".
    std::string to_string() const {
        std::string out;
        for (const auto& b : canonical_listing()) {
            if (!out.empty()) out += '/';
            out += detail::join_ints(b);
        }
        return out;
    }

    friend auto operator<=>(const SignedSetPartition&, const SignedSetPartition&) = default;

private:
    int half_ = 0;
    std::vector<Block> blocks_;
};

inline Block negated(const Block& b) {
    Block out;
    for (int x : b) out.push_back(-x);
    return out;
}

inline bool same_elements(Block a, Block b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

inline bool is_antipodally_invariant(const SignedSetPartition& p) {
    const int half = p.half();
    std::vector<int> owner(static_cast<std::size_t>(2 * half), -1);
    for (std::size_t b = 0; b < p.blocks().size(); ++b) {
        for (int x : p.blocks()[b]) owner[static_cast<std::size_t>(signed_position(x, half))] = static_cast<int>(b);
    }
    for (const auto& b : p.blocks()) {
        const int image = owner[static_cast<std::size_t>(signed_position(-b.front(), half))];
        if (!same_elements(p.blocks()[static_cast<std::size_t>(image)], negated(b))) return false;
    }
    return true;
}

inline bool is_circularly_noncrossing(const SignedSetPartition& p) {
    const int half = p.half();
    std::vector<int> owner(static_cast<std::size_t>(2 * half), -1);
    for (std::size_t b = 0; b < p.blocks().size(); ++b) {
        for (int x : p.blocks()[b]) owner[static_cast<std::size_t>(signed_position(x, half))] = static_cast<int>(b);
    }
    std::vector<int> stack;
    for (int pos = 0; pos < 2 * half; ++pos) {
        const int b = owner[static_cast<std::size_t>(pos)];
        const auto& block = p.blocks()[static_cast<std::size_t>(b)];
        if (signed_position(block.front(), half) == pos) stack.push_back(b);
        else if (stack.empty() || stack.back() != b) return false;
        if (signed_position(block.back(), half) == pos) stack.pop_back();
    }
    return true;
}

inline bool is_noncrossing_b(const SignedSetPartition& p) {
    return is_antipodally_invariant(p) && is_circularly_noncrossing(p);
}

// Element of NC_n^{B,(k)}: a k-divisible type-B noncrossing partition of [kn]^+-.
class NoncrossingB {
public:
    NoncrossingB(int n, int k, SignedSetPartition p) : n_(n), k_(k), p_(std::move(p)) {
        if (n_ < 0 || k_ < 1) throw DomainError("NoncrossingB: need n >= 0, k >= 1");
        if (p_.half() != k_ * n_) {
            throw DomainError("NoncrossingB: ground set must be [kn]^+- with kn = " + std::to_string(k_ * n_));
        }
        if (!is_antipodally_invariant(p_)) {
            throw DomainError("partition " + p_.to_string() + " is not invariant under negation");
        }
        if (!is_circularly_noncrossing(p_)) {
            throw DomainError("partition " + p_.to_string() + " has a crossing on the 2kn-gon");
        }
        for (const auto& b : p_.blocks()) {
            if (b.size() % static_cast<std::size_t>(k_) != 0) {
                throw DomainError("partition " + p_.to_string() + " has a block whose size is not divisible by k=" +
                                  std::to_string(k_));
            }
        }
    }

    int n() const noexcept { return n_; }
    int k() const noexcept { return k_; }
    const SignedSetPartition& partition() const noexcept { return p_; }
    const std::vector<Block>& blocks() const noexcept { return p_.blocks(); }
    std::string to_string() const { return p_.to_string(); }

    friend auto operator<=>(const NoncrossingB&, const NoncrossingB&) = default;

private:
    int n_;
    int k_;
    SignedSetPartition p_;
};

// The block B with B = -B, if there is one.
inline std::optional<Block> antipodal_block(const NoncrossingB& p) {
    for (const auto& b : p.blocks()) {
        if (same_elements(b, negated(b))) return b;
    }
    return std::nullopt;
}

// One block from each {B, -B} orbit, sizes divided by k; the antipodal block
// is left out.
inline IntPartition type_b(const NoncrossingB& p) {
    std::vector<int> sizes;
    const int half = p.partition().half();
    for (const auto& b : p.blocks()) {
        if (same_elements(b, negated(b))) continue;
        // representative: the block holding the smaller position
        const int mine = signed_position(b.front(), half);
        int partner = 2 * half;
        for (int x : b) partner = std::min(partner, signed_position(-x, half));
        if (mine < partner) sizes.push_back(static_cast<int>(b.size()) / p.k());
    }
    return IntPartition::from_multiset(std::move(sizes));
}

// NC_n^{B,(k)}, generated as noncrossing partitions of the 2kn vertex
// positions; from position kn on, each choice must agree with the mirror
// image of the first half.
inline std::vector<NoncrossingB> enumerate_nc_b(int n, int k) {
    if (n < 0 || k < 1) throw DomainError("enumerate_nc_b: need n >= 0, k >= 1");
    const int half = k * n;
    const int total = 2 * half;
    const auto ku = static_cast<std::size_t>(k);
    std::vector<NoncrossingB> out;
    std::vector<Block> blocks;                              // positions
    std::vector<int> owner(static_cast<std::size_t>(total), -1);
    std::vector<int> open;
    auto mirror = [half, total](int pos) { return (pos + half) % total; };

    auto consistent = [&](int pos) {
        const int b = owner[static_cast<std::size_t>(pos)];
        const int mb = owner[static_cast<std::size_t>(pos - half)];
        for (int q = 0; q < pos; ++q) {
            const int mq = mirror(q);
            if (mq >= pos) continue;
            const bool together = owner[static_cast<std::size_t>(q)] == b;
            const bool mirrored = owner[static_cast<std::size_t>(mq)] == mb;
            if (together != mirrored) return false;
        }
        return true;
    };

    auto rec = [&](auto&& self, int pos) -> void {
        if (pos == total) {
            for (int b : open) {
                if (blocks[static_cast<std::size_t>(b)].size() % ku != 0) return;
            }
            std::vector<Block> labelled;
            for (const auto& b : blocks) {
                Block lb;
                for (int q : b) lb.push_back(signed_label(q, half));
                labelled.push_back(std::move(lb));
            }
            out.emplace_back(n, k, SignedSetPartition(half, std::move(labelled)));
            return;
        }
        blocks.push_back({pos});
        open.push_back(static_cast<int>(blocks.size()) - 1);
        owner[static_cast<std::size_t>(pos)] = open.back();
        if (pos < half || consistent(pos)) self(self, pos + 1);
        open.pop_back();
        blocks.pop_back();
        for (int j = static_cast<int>(open.size()) - 1; j >= 0; --j) {
            bool closable = true;
            for (int t = j + 1; t < static_cast<int>(open.size()); ++t) {
                if (blocks[static_cast<std::size_t>(open[static_cast<std::size_t>(t)])].size() % ku != 0) {
                    closable = false;
                }
            }
            if (!closable) break;
            std::vector<int> saved(open.begin() + j + 1, open.end());
            open.resize(static_cast<std::size_t>(j) + 1);
            const auto target = static_cast<std::size_t>(open.back());
            blocks[target].push_back(pos);
            owner[static_cast<std::size_t>(pos)] = open.back();
            if (pos < half || consistent(pos)) self(self, pos + 1);
            blocks[target].pop_back();
            open.insert(open.end(), saved.begin(), saved.end());
        }
        owner[static_cast<std::size_t>(pos)] = -1;
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

// Number of k-divisible type-B noncrossing partitions with type lambda,
// (kn)! / (m_lambda (kn - l(lambda))!), for |lambda| <= n.
inline BigNat count_by_type_b(int n, int k, const IntPartition& lambda) {
    if (n < 0 || k < 1) throw DomainError("count_by_type_b: need n >= 0, k >= 1");
    if (weight(lambda) > n) {
        throw DomainError("count_by_type_b: type " + lambda.to_string() + " has weight > " + std::to_string(n));
    }
    BigNat den = multiplicity_product(lambda) * factorial(k * n - length(lambda));
    return exact_div(factorial(k * n), den);
}

// "-1,-2,12/-3,-7,11/..." over [half]^+-. Every block must be listed; the
// negation closure is checked by NoncrossingB, never filled in.
inline SignedSetPartition parse_signed_partition(std::string_view text, int half) {
    text = detail::trim(text);
    std::vector<Block> blocks;
    if (!text.empty()) {
        for (auto part : detail::split(text, '/')) {
            auto block = detail::parse_int_list(part, "partition literal");
            if (block.empty()) throw ParseError("partition literal: empty block");
            blocks.push_back(std::move(block));
        }
    }
    try {
        return SignedSetPartition(half, std::move(blocks));
    } catch (const DomainError& e) {
        throw ParseError(std::string("partition literal '") + std::string(text) + "': " + e.what());
    }
}

}  // namespace ncstrip
