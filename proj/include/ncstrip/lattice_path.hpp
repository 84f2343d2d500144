#pragma once

// E/N lattice paths with E = (1,0) and N = (0,1), and the two families used
// by the bijections: k-Fuss-Catalan paths (0 <= y <= kx) and unconstrained
// k-Fuss binomial paths, both from (0,0) to (n, kn).

#include <algorithm>
#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "ncstrip/errors.hpp"
#include "ncstrip/partition.hpp"

namespace ncstrip {

enum class Step : char { E = 'E', N = 'N' };

class LatticePath {
public:
    LatticePath() = default;
    explicit LatticePath(std::vector<Step> steps) : steps_(std::move(steps)) {}

    // Uppercase word over {E, N}; the empty string is the empty path.
    static LatticePath parse(std::string_view word) {
        std::vector<Step> steps;
        steps.reserve(word.size());
        for (char c : word) {
            if (c == 'E') steps.push_back(Step::E);
            else if (c == 'N') steps.push_back(Step::N);
            else throw ParseError(std::string("path literal: unexpected character '") + c + "'");
        }
        return LatticePath(std::move(steps));
    }

    const std::vector<Step>& steps() const noexcept { return steps_; }
    std::size_t size() const noexcept { return steps_.size(); }
    bool empty() const noexcept { return steps_.empty(); }

    int east_count() const { return static_cast<int>(std::count(steps_.begin(), steps_.end(), Step::E)); }
    int north_count() const { return static_cast<int>(steps_.size()) - east_count(); }

    std::string to_string() const {
        std::string out;
        out.reserve(steps_.size());
        for (Step s : steps_) out.push_back(static_cast<char>(s));
        return out;
    }

    friend auto operator<=>(const LatticePath&, const LatticePath&) = default;

private:
    std::vector<Step> steps_;
};

inline LatticePath repeat(Step s, int count) {
    return LatticePath(std::vector<Step>(static_cast<std::size_t>(std::max(count, 0)), s));
}

inline LatticePath operator+(const LatticePath& a, const LatticePath& b) {
    auto steps = a.steps();
    steps.insert(steps.end(), b.steps().begin(), b.steps().end());
    return LatticePath(std::move(steps));
}

// A maximal run of consecutive E steps. The run starts at (x, y).
struct Ascent {
    int x = 0;
    int y = 0;
    int length = 0;
    friend bool operator==(const Ascent&, const Ascent&) = default;
};

inline std::vector<Ascent> ascents(const LatticePath& path) {
    std::vector<Ascent> out;
    int x = 0, y = 0;
    bool in_run = false;
    for (Step s : path.steps()) {
        if (s == Step::E) {
            if (!in_run) out.push_back({x, y, 0});
            ++out.back().length;
            ++x;
            in_run = true;
        } else {
            ++y;
            in_run = false;
        }
    }
    return out;
}

// True iff the path has n E's, kn N's and never rises above y = kx.
inline bool is_fuss_catalan(const LatticePath& path, int n, int k) {
    if (n < 0 || k < 1) return false;
    int x = 0, y = 0;
    for (Step s : path.steps()) {
        if (s == Step::E) ++x;
        else if (++y > k * x) return false;
    }
    return x == n && y == k * n;
}

inline bool is_fuss_binomial(const LatticePath& path, int n, int k) {
    return n >= 0 && k >= 1 && path.east_count() == n && path.north_count() == k * n;
}

// Element of D_n^(k).
class FussCatalanPath {
public:
    FussCatalanPath(int n, int k, LatticePath path) : n_(n), k_(k), path_(std::move(path)) {
        if (!is_fuss_catalan(path_, n_, k_)) {
            throw DomainError("'" + path_.to_string() + "' is not a " + std::to_string(k_) +
                              "-Fuss-Catalan path of length " + std::to_string(n_) +
                              " (needs n E's, kn N's and 0 <= y <= kx)");
        }
    }

    int n() const noexcept { return n_; }
    int k() const noexcept { return k_; }
    const LatticePath& path() const noexcept { return path_; }
    std::string to_string() const { return path_.to_string(); }

    friend auto operator<=>(const FussCatalanPath&, const FussCatalanPath&) = default;

private:
    int n_;
    int k_;
    LatticePath path_;
};

// Element of B_n^(k).
class FussBinomialPath {
public:
    FussBinomialPath(int n, int k, LatticePath path) : n_(n), k_(k), path_(std::move(path)) {
        if (!is_fuss_binomial(path_, n_, k_)) {
            throw DomainError("'" + path_.to_string() + "' is not a " + std::to_string(k_) +
                              "-Fuss binomial path of length " + std::to_string(n_) +
                              " (needs n E's and kn N's)");
        }
    }

    int n() const noexcept { return n_; }
    int k() const noexcept { return k_; }
    const LatticePath& path() const noexcept { return path_; }
    std::string to_string() const { return path_.to_string(); }

    friend auto operator<=>(const FussBinomialPath&, const FussBinomialPath&) = default;

private:
    int n_;
    int k_;
    LatticePath path_;
};

namespace detail {

template <typename Accept, typename Emit>
void words_rec(int east_left, int north_left, int x, int y, std::vector<Step>& prefix,
               const Accept& may_step_north, const Emit& emit) {
    if (east_left == 0 && north_left == 0) {
        emit(prefix);
        return;
    }
    if (east_left > 0) {
        prefix.push_back(Step::E);
        words_rec(east_left - 1, north_left, x + 1, y, prefix, may_step_north, emit);
        prefix.pop_back();
    }
    if (north_left > 0 && may_step_north(x, y)) {
        prefix.push_back(Step::N);
        words_rec(east_left, north_left - 1, x, y + 1, prefix, may_step_north, emit);
        prefix.pop_back();
    }
}

}  // namespace detail

// D_n^(k) in lexicographic order with E < N.
inline std::vector<FussCatalanPath> enumerate_fuss_catalan(int n, int k) {
    if (n < 0 || k < 1) throw DomainError("enumerate_fuss_catalan: need n >= 0, k >= 1");
    std::vector<FussCatalanPath> out;
    std::vector<Step> prefix;
    detail::words_rec(n, k * n, 0, 0, prefix,
                      [k](int x, int y) { return y + 1 <= k * x; },
                      [&](const std::vector<Step>& w) { out.emplace_back(n, k, LatticePath(w)); });
    return out;
}

// B_n^(k) in lexicographic order with E < N.
inline std::vector<FussBinomialPath> enumerate_fuss_binomial(int n, int k) {
    if (n < 0 || k < 1) throw DomainError("enumerate_fuss_binomial: need n >= 0, k >= 1");
    std::vector<FussBinomialPath> out;
    std::vector<Step> prefix;
    detail::words_rec(n, k * n, 0, 0, prefix, [](int, int) { return true; },
                      [&](const std::vector<Step>& w) { out.emplace_back(n, k, LatticePath(w)); });
    return out;
}

inline IntPartition fc_type(const FussCatalanPath& p) {
    std::vector<int> sizes;
    for (const auto& a : ascents(p.path())) sizes.push_back(a.length);
    return IntPartition::from_multiset(std::move(sizes));
}

// Ascent lengths with the ascent containing the first E left out.
inline IntPartition fc_reduced_type(const FussCatalanPath& p) {
    auto runs = ascents(p.path());
    std::vector<int> sizes;
    for (std::size_t i = 1; i < runs.size(); ++i) sizes.push_back(runs[i].length);
    return IntPartition::from_multiset(std::move(sizes));
}

// Ascent lengths, except for an ascent on the line y = 0.
inline IntPartition fb_type(const FussBinomialPath& p) {
    std::vector<int> sizes;
    for (const auto& a : ascents(p.path())) {
        if (a.y > 0) sizes.push_back(a.length);
    }
    return IntPartition::from_multiset(std::move(sizes));
}

}  // namespace ncstrip
