#pragma once

// Set partitions of [n] and the type-A noncrossing ones, with the type and
// reduced-type statistics of k-divisible noncrossing partitions and their
// closed-form counts.

#include <algorithm>
#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "ncstrip/counting.hpp"
#include "ncstrip/detail/text.hpp"
#include "ncstrip/errors.hpp"
#include "ncstrip/partition.hpp"

namespace ncstrip {

using Block = std::vector<int>;

// A set partition of [n] = {1, ..., n}. Stored in canonical listing: blocks
// ascending by minimum, elements ascending; this makes equality structural.
class SetPartition {
public:
    SetPartition() = default;

    SetPartition(int n, std::vector<Block> blocks) : n_(n), blocks_(std::move(blocks)) {
        if (n_ < 0) throw DomainError("set partition: negative ground set size");
        std::vector<int> seen(static_cast<std::size_t>(n_) + 1, 0);
        for (auto& b : blocks_) {
            if (b.empty()) throw DomainError("set partition: empty block");
            std::sort(b.begin(), b.end());
            for (int x : b) {
                if (x < 1 || x > n_) {
                    throw DomainError("set partition: element " + std::to_string(x) + " is outside [1," +
                                      std::to_string(n_) + "]");
                }
                if (seen[static_cast<std::size_t>(x)]++) {
                    throw DomainError("set partition: element " + std::to_string(x) + " appears twice");
                }
            }
        }
        for (int x = 1; x <= n_; ++x) {
            if (!seen[static_cast<std::size_t>(x)]) {
                throw DomainError("set partition: element " + std::to_string(x) + " is missing");
            }
        }
        std::sort(blocks_.begin(), blocks_.end());
    }

    int size() const noexcept { return n_; }
    const std::vector<Block>& blocks() const noexcept { return blocks_; }

    // Block index of every element; entry 0 unused.
    std::vector<int> block_index() const {
        std::vector<int> idx(static_cast<std::size_t>(n_) + 1, -1);
        for (std::size_t b = 0; b < blocks_.size(); ++b) {
            for (int x : blocks_[b]) idx[static_cast<std::size_t>(x)] = static_cast<int>(b);
        }
        return idx;
    }

    // "1,2,5,6/3,4/7,8"
    std::string to_string() const {
        std::string out;
        for (const auto& b : blocks_) {
            if (!out.empty()) out += '/';
            out += detail::join_ints(b);
        }
        return out;
    }

    friend auto operator<=>(const SetPartition&, const SetPartition&) = default;

private:
    int n_ = 0;
    std::vector<Block> blocks_;
};

// One pass with a stack of open blocks: an element may only rejoin the most
// recently opened block that is still open.
inline bool is_noncrossing(const SetPartition& p) {
    const auto idx = p.block_index();
    std::vector<int> stack;
    for (int x = 1; x <= p.size(); ++x) {
        const int b = idx[static_cast<std::size_t>(x)];
        const auto& block = p.blocks()[static_cast<std::size_t>(b)];
        if (block.front() == x) stack.push_back(b);
        else if (stack.empty() || stack.back() != b) return false;
        if (block.back() == x) stack.pop_back();
    }
    return true;
}

class NoncrossingA {
public:
    explicit NoncrossingA(SetPartition p) : p_(std::move(p)) {
        if (!is_noncrossing(p_)) throw DomainError("partition " + p_.to_string() + " has a crossing");
    }
    NoncrossingA(int n, std::vector<Block> blocks) : NoncrossingA(SetPartition(n, std::move(blocks))) {}

    int size() const noexcept { return p_.size(); }
    const std::vector<Block>& blocks() const noexcept { return p_.blocks(); }
    const SetPartition& partition() const noexcept { return p_; }
    std::string to_string() const { return p_.to_string(); }

    friend auto operator<=>(const NoncrossingA&, const NoncrossingA&) = default;

private:
    SetPartition p_;
};

// Blocks by increasing minimum, each listed increasingly.
inline std::vector<Block> canonical_listing(const NoncrossingA& p) { return p.blocks(); }

inline bool is_k_divisible(const SetPartition& p, int k) {
    return k >= 1 && std::all_of(p.blocks().begin(), p.blocks().end(),
                                 [k](const Block& b) { return b.size() % static_cast<std::size_t>(k) == 0; });
}

namespace detail {

inline IntPartition scaled_block_sizes(const std::vector<Block>& blocks, int k, const Block* skip) {
    std::vector<int> sizes;
    for (const auto& b : blocks) {
        if (b.size() % static_cast<std::size_t>(k) != 0) {
            throw DomainError("block of size " + std::to_string(b.size()) + " is not divisible by k=" +
                              std::to_string(k));
        }
        if (&b != skip) sizes.push_back(static_cast<int>(b.size()) / k);
    }
    return IntPartition::from_multiset(std::move(sizes));
}

}  // namespace detail

// Block sizes divided by k.
inline IntPartition type_a(const NoncrossingA& p, int k = 1) {
    if (k < 1) throw DomainError("type_a: k must be >= 1");
    return detail::scaled_block_sizes(p.blocks(), k, nullptr);
}

// As type_a, with the block containing 1 deleted.
inline IntPartition reduced_type_a(const NoncrossingA& p, int k = 1) {
    if (k < 1) throw DomainError("reduced_type_a: k must be >= 1");
    const Block* first = p.blocks().empty() ? nullptr : &p.blocks().front();
    return detail::scaled_block_sizes(p.blocks(), k, first);
}

// k-divisible noncrossing partitions of [kn], generated directly: each new
// element opens a block or joins an open block, closing everything opened
// after it. A block may only be closed once its size is a multiple of k.
inline std::vector<NoncrossingA> enumerate_k_divisible(int n, int k) {
    if (n < 0 || k < 1) throw DomainError("enumerate_k_divisible: need n >= 0, k >= 1");
    const int size = k * n;
    const auto ku = static_cast<std::size_t>(k);
    std::vector<NoncrossingA> out;
    std::vector<Block> blocks;
    std::vector<int> open;  // indices into blocks, innermost last

    auto rec = [&](auto&& self, int x) -> void {
        if (x > size) {
            for (int b : open) {
                if (blocks[static_cast<std::size_t>(b)].size() % ku != 0) return;
            }
            out.emplace_back(SetPartition(size, blocks));
            return;
        }
        // open a new block
        blocks.push_back({x});
        open.push_back(static_cast<int>(blocks.size()) - 1);
        self(self, x + 1);
        open.pop_back();
        blocks.pop_back();
        // join an open block; those above it are closed for good
        for (int j = static_cast<int>(open.size()) - 1; j >= 0; --j) {
            bool closable = true;
            for (int t = j + 1; t < static_cast<int>(open.size()); ++t) {
                if (blocks[static_cast<std::size_t>(open[static_cast<std::size_t>(t)])].size() % ku != 0) {
                    closable = false;
                }
            }
            if (!closable) break;  // a lower j closes a superset
            std::vector<int> saved(open.begin() + j + 1, open.end());
            open.resize(static_cast<std::size_t>(j) + 1);
            const auto target = static_cast<std::size_t>(open.back());
            blocks[target].push_back(x);
            self(self, x + 1);
            blocks[target].pop_back();
            open.insert(open.end(), saved.begin(), saved.end());
        }
    };
    rec(rec, 1);
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<NoncrossingA> enumerate_nc_a(int n) { return enumerate_k_divisible(n, 1); }

// q^(k)(zeta) = (kn)! / (m_zeta (kn + 1 - l(zeta))!), the number of
// k-divisible noncrossing partitions of [kn] with type zeta |- n.
inline BigNat count_by_type(int n, int k, const IntPartition& zeta) {
    if (n < 0 || k < 1) throw DomainError("count_by_type: need n >= 0, k >= 1");
    if (weight(zeta) != n) {
        throw DomainError("count_by_type: type " + zeta.to_string() + " does not have weight " +
                          std::to_string(n));
    }
    BigNat den = multiplicity_product(zeta) * factorial(k * n + 1 - length(zeta));
    return exact_div(factorial(k * n), den);
}

// p^(k)(lambda) = (kn)! (n - |lambda|) / (n m_lambda (kn - l(lambda))!), the
// number of k-divisible noncrossing partitions of [kn] with reduced type
// lambda. The block containing 1 is nonempty, so |lambda| < n.
inline BigNat count_by_reduced_type(int n, int k, const IntPartition& lambda) {
    if (n < 1 || k < 1) throw DomainError("count_by_reduced_type: need n >= 1, k >= 1");
    if (weight(lambda) >= n) {
        throw DomainError("count_by_reduced_type: reduced type " + lambda.to_string() +
                          " must have weight < " + std::to_string(n));
    }
    BigNat num = factorial(k * n) * (n - weight(lambda));
    BigNat den = BigNat(n) * multiplicity_product(lambda) * factorial(k * n - length(lambda));
    return exact_div(num, den);
}

// "1,2,5,6/3,4/7,8" as a partition of [size]; size defaults to the number of
// elements listed.
inline SetPartition parse_set_partition(std::string_view text, int size = -1) {
    text = detail::trim(text);
    std::vector<Block> blocks;
    int count = 0;
    if (!text.empty()) {
        for (auto part : detail::split(text, '/')) {
            auto block = detail::parse_int_list(part, "partition literal");
            if (block.empty()) throw ParseError("partition literal: empty block");
            count += static_cast<int>(block.size());
            blocks.push_back(std::move(block));
        }
    }
    try {
        return SetPartition(size < 0 ? count : size, std::move(blocks));
    } catch (const DomainError& e) {
        throw ParseError(std::string("partition literal '") + std::string(text) + "': " + e.what());
    }
}

}  // namespace ncstrip
