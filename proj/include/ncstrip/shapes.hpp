#pragma once

// Skew shapes and their r-strips.
//
// Coordinates: columns are numbered 1..width from the left; a box has a
// height, the y-coordinate of its bottom edge measured from the lowest edge
// of the diagram (the bottom row has height 0). Row i of the outer partition
// (counted from the top, English convention) sits at height rows - i.
//
// An r-strip corresponds to a monotone lattice path from the bottom-left to
// the top-right corner of the diagram that stays between the lower and upper
// boundary of the shape: the E step across column c at height y carries the
// box (c, y - 1) directly below it, and carries no box when it runs along
// the lower boundary of the column. The path therefore runs along the north
// edges of the blocks of the strip.

#include <algorithm>
#include <compare>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ncstrip/counting.hpp"
#include "ncstrip/detail/text.hpp"
#include "ncstrip/errors.hpp"
#include "ncstrip/lattice_path.hpp"
#include "ncstrip/partition.hpp"

namespace ncstrip {

struct Box {
    int column = 0;
    int height = 0;
    friend auto operator<=>(const Box&, const Box&) = default;
};

using BoxSet = std::set<Box>;

// Boxes of one column occupy heights lo, lo+1, ..., hi-1 (empty when lo == hi).
struct ColumnSpan {
    int lo = 0;
    int hi = 0;
    bool empty() const noexcept { return lo >= hi; }
    int size() const noexcept { return std::max(hi - lo, 0); }
    friend bool operator==(const ColumnSpan&, const ColumnSpan&) = default;
};

class SkewShape {
public:
    SkewShape() = default;

    SkewShape(IntPartition outer, IntPartition inner) : outer_(std::move(outer)), inner_(std::move(inner)) {
        if (length(inner_) > length(outer_)) {
            throw DomainError("skew shape: inner partition has more rows than the outer one");
        }
        for (int i = 0; i < length(inner_); ++i) {
            if (inner_[i] > outer_[i]) {
                throw DomainError("skew shape: inner partition is not contained in the outer one");
            }
        }
        const int w = width();
        spans_.reserve(static_cast<std::size_t>(w));
        for (int c = 1; c <= w; ++c) {
            int outer_len = 0, inner_len = 0;
            for (int p : outer_.parts()) outer_len += (p >= c);
            for (int p : inner_.parts()) inner_len += (p >= c);
            spans_.push_back({rows() - outer_len, rows() - inner_len});
        }
        int first = 0, last = 0;
        for (int c = 1; c <= w; ++c) {
            if (column(c).empty()) continue;
            if (first == 0) first = c;
            else if (last != c - 1) {
                throw DomainError("skew shape " + to_string() + ": nonempty columns are not contiguous");
            }
            last = c;
        }
    }

    const IntPartition& outer() const noexcept { return outer_; }
    const IntPartition& inner() const noexcept { return inner_; }

    int rows() const noexcept { return length(outer_); }
    int width() const noexcept { return outer_.part_or_zero(0); }
    int box_count() const noexcept { return weight(outer_) - weight(inner_); }

    // Column c, 1-based.
    const ColumnSpan& column(int c) const { return spans_.at(static_cast<std::size_t>(c - 1)); }
    const std::vector<ColumnSpan>& columns() const noexcept { return spans_; }

    bool contains(const Box& b) const {
        if (b.column < 1 || b.column > width()) return false;
        const auto& s = column(b.column);
        return b.height >= s.lo && b.height < s.hi;
    }

    // Lattice path endpoints: (0, start_height()) and (width(), end_height()).
    int start_height() const noexcept { return spans_.empty() ? 0 : spans_.front().lo; }
    int end_height() const noexcept { return spans_.empty() ? 0 : spans_.back().hi; }

    // "3,2/1"; an empty inner partition prints as "3,2/".
    std::string to_string() const {
        return detail::join_ints(outer_.parts()) + "/" + detail::join_ints(inner_.parts());
    }

    friend bool operator==(const SkewShape& a, const SkewShape& b) {
        return a.outer_ == b.outer_ && a.inner_ == b.inner_;
    }

private:
    IntPartition outer_;
    IntPartition inner_;
    std::vector<ColumnSpan> spans_;
};

// (n^{kn}) / ((n-1)^k, ..., 2^k, 1^k)
inline SkewShape stretched_staircase(int n, int k) {
    if (n < 0 || k < 1) throw DomainError("stretched_staircase: need n >= 0, k >= 1");
    std::vector<int> outer(static_cast<std::size_t>(k * n), n);
    std::vector<int> inner;
    for (int part = n - 1; part >= 1; --part) inner.insert(inner.end(), static_cast<std::size_t>(k), part);
    return SkewShape(IntPartition(std::move(outer)), IntPartition(std::move(inner)));
}

inline SkewShape staircase(int n) { return stretched_staircase(n, 1); }

// (n^{kn})
inline SkewShape rectangle(int n, int k) {
    if (n < 0 || k < 1) throw DomainError("rectangle: need n >= 0, k >= 1");
    return SkewShape(IntPartition(std::vector<int>(static_cast<std::size_t>(k * n), n)), IntPartition());
}

// "3,2/1", "3,2/" or "3,2".
inline SkewShape parse_shape(std::string_view text) {
    text = detail::trim(text);
    auto slash = text.find('/');
    auto outer_text = text.substr(0, slash);
    auto inner_text = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
    if (inner_text.find('/') != std::string_view::npos) throw ParseError("shape literal: more than one '/'");
    auto outer = detail::parse_int_list(outer_text, "shape literal");
    auto inner = detail::parse_int_list(inner_text, "shape literal");
    try {
        return SkewShape(IntPartition(std::move(outer)), IntPartition(std::move(inner)));
    } catch (const DomainError& e) {
        throw ParseError(std::string("shape literal '") + std::string(text) + "': " + e.what());
    }
}

inline std::vector<ColumnSpan> column_heights(const SkewShape& shape) { return shape.columns(); }

inline bool is_partial_horizontal_strip(const SkewShape& shape, const BoxSet& boxes) {
    const Box* prev = nullptr;
    for (const auto& b : boxes) {  // ordered by column, then height
        if (!shape.contains(b)) return false;
        if (prev != nullptr) {
            if (prev->column == b.column) return false;
            if (prev->height > b.height) return false;
        }
        prev = &b;
    }
    return true;
}

// Direct check of the definition: a partial horizontal strip to which no box
// can be added immediately to the right of any of its boxes.
inline bool is_r_strip(const SkewShape& shape, const BoxSet& boxes) {
    if (!is_partial_horizontal_strip(shape, boxes)) return false;
    for (const auto& b : boxes) {
        Box right{b.column + 1, b.height};
        if (boxes.contains(right)) continue;
        BoxSet extended = boxes;
        extended.insert(right);
        if (is_partial_horizontal_strip(shape, extended)) return false;
    }
    return true;
}

class RStrip;
RStrip strip_from_path(const SkewShape& shape, const LatticePath& path);

class RStrip {
public:
    // Validates the box set against the r-strip definition.
    RStrip(SkewShape shape, const BoxSet& boxes) : shape_(std::move(shape)) {
        if (!is_r_strip(shape_, boxes)) {
            throw DomainError("box set is not an r-strip of the shape " + shape_.to_string());
        }
        heights_.assign(static_cast<std::size_t>(shape_.width()), std::nullopt);
        for (const auto& b : boxes) heights_[static_cast<std::size_t>(b.column - 1)] = b.height;
    }

    const SkewShape& shape() const noexcept { return shape_; }

    // Height of the box in column c (1-based), if any.
    std::optional<int> height_in(int c) const { return heights_.at(static_cast<std::size_t>(c - 1)); }

    BoxSet boxes() const {
        BoxSet out;
        for (std::size_t i = 0; i < heights_.size(); ++i) {
            if (heights_[i]) out.insert({static_cast<int>(i) + 1, *heights_[i]});
        }
        return out;
    }

    int box_count() const {
        return static_cast<int>(std::count_if(heights_.begin(), heights_.end(),
                                              [](const auto& h) { return h.has_value(); }));
    }

    // "1:0,2:0,3:1" (column:height); the empty strip prints as "-".
    std::string to_string() const {
        std::string out;
        for (std::size_t i = 0; i < heights_.size(); ++i) {
            if (!heights_[i]) continue;
            if (!out.empty()) out += ',';
            out += std::to_string(i + 1) + ":" + std::to_string(*heights_[i]);
        }
        return out.empty() ? "-" : out;
    }

    friend bool operator==(const RStrip& a, const RStrip& b) {
        return a.shape_ == b.shape_ && a.heights_ == b.heights_;
    }
    friend bool operator<(const RStrip& a, const RStrip& b) { return a.heights_ < b.heights_; }

private:
    struct Trusted {};
    RStrip(Trusted, SkewShape shape, std::vector<std::optional<int>> heights)
        : shape_(std::move(shape)), heights_(std::move(heights)) {}
    friend RStrip strip_from_path(const SkewShape& shape, const LatticePath& path);

    SkewShape shape_;
    std::vector<std::optional<int>> heights_;
};

// Heights of the E steps of a path across the shape, one per column.
inline std::vector<int> east_heights(const SkewShape& shape, const LatticePath& path) {
    std::vector<int> heights;
    int y = shape.start_height();
    for (Step s : path.steps()) {
        if (s == Step::N) {
            ++y;
            continue;
        }
        int c = static_cast<int>(heights.size()) + 1;
        if (c > shape.width()) throw DomainError("path has more E steps than the shape has columns");
        const auto& span = shape.column(c);
        if (y < span.lo || y > span.hi) {
            throw DomainError("path '" + path.to_string() + "' leaves the shape " + shape.to_string() +
                              " in column " + std::to_string(c));
        }
        heights.push_back(y);
    }
    if (static_cast<int>(heights.size()) != shape.width() || y != shape.end_height()) {
        throw DomainError("path '" + path.to_string() + "' does not end at the top-right corner of " +
                          shape.to_string());
    }
    return heights;
}

inline RStrip strip_from_path(const SkewShape& shape, const LatticePath& path) {
    auto ys = east_heights(shape, path);
    std::vector<std::optional<int>> heights(ys.size());
    for (std::size_t i = 0; i < ys.size(); ++i) {
        if (ys[i] > shape.columns()[i].lo) heights[i] = ys[i] - 1;
    }
    return RStrip(RStrip::Trusted{}, shape, std::move(heights));
}

inline LatticePath path_from_strip(const RStrip& strip) {
    const auto& shape = strip.shape();
    std::vector<Step> steps;
    int y = shape.start_height();
    for (int c = 1; c <= shape.width(); ++c) {
        auto h = strip.height_in(c);
        int target = h ? *h + 1 : shape.column(c).lo;
        for (; y < target; ++y) steps.push_back(Step::N);
        steps.push_back(Step::E);
    }
    for (; y < shape.end_height(); ++y) steps.push_back(Step::N);
    return LatticePath(std::move(steps));
}

namespace detail {

template <typename Emit>
void shape_paths_rec(const SkewShape& shape, int c, int min_y, std::vector<int>& ys, const Emit& emit) {
    if (c > shape.width()) {
        emit(ys);
        return;
    }
    const auto& span = shape.column(c);
    for (int y = std::max(min_y, span.lo); y <= span.hi; ++y) {
        ys.push_back(y);
        shape_paths_rec(shape, c + 1, y, ys, emit);
        ys.pop_back();
    }
}

inline LatticePath path_from_heights(const SkewShape& shape, const std::vector<int>& ys) {
    std::vector<Step> steps;
    int y = shape.start_height();
    for (int target : ys) {
        for (; y < target; ++y) steps.push_back(Step::N);
        steps.push_back(Step::E);
    }
    for (; y < shape.end_height(); ++y) steps.push_back(Step::N);
    return LatticePath(std::move(steps));
}

}  // namespace detail

// All lattice paths across the shape, lexicographic with E < N.
inline std::vector<LatticePath> enumerate_shape_paths(const SkewShape& shape) {
    std::vector<LatticePath> out;
    std::vector<int> ys;
    detail::shape_paths_rec(shape, 1, shape.start_height(), ys,
                            [&](const std::vector<int>& h) { out.push_back(detail::path_from_heights(shape, h)); });
    return out;
}

// Every r-strip exactly once, in the lexicographic order of their paths.
inline std::vector<RStrip> enumerate_r_strips(const SkewShape& shape) {
    std::vector<RStrip> out;
    for (const auto& p : enumerate_shape_paths(shape)) out.push_back(strip_from_path(shape, p));
    return out;
}

// Number of r-strips, by dynamic programming over the column heights.
inline BigNat count_r_strips(const SkewShape& shape) {
    const int top = shape.end_height();
    const int base = shape.start_height();
    std::vector<BigNat> ways(static_cast<std::size_t>(top - base + 1), 0);
    ways[0] = 1;  // path sits at height `base` before column 1
    for (int c = 1; c <= shape.width(); ++c) {
        const auto& span = shape.column(c);
        std::vector<BigNat> next(ways.size(), 0);
        BigNat running = 0;  // paths reaching any height <= y
        for (int y = base; y <= top; ++y) {
            running += ways[static_cast<std::size_t>(y - base)];
            if (y >= span.lo && y <= span.hi) next[static_cast<std::size_t>(y - base)] = running;
        }
        ways = std::move(next);
    }
    BigNat total = 0;
    for (const auto& w : ways) total += w;
    return total;
}

// Block sizes, a block being a maximal run of boxes in consecutive columns at
// the same height.
inline IntPartition strip_type(const RStrip& strip) {
    std::vector<int> sizes;
    std::optional<int> prev;
    for (int c = 1; c <= strip.shape().width(); ++c) {
        auto h = strip.height_in(c);
        if (h && prev && *h == *prev) ++sizes.back();
        else if (h) sizes.push_back(1);
        prev = h;
    }
    return IntPartition::from_multiset(std::move(sizes));
}

// Box heights of every horizontal strip (exactly one box per column,
// weakly increasing), lexicographically.
inline std::vector<std::vector<int>> enumerate_horizontal_strips(const SkewShape& shape) {
    for (int c = 1; c <= shape.width(); ++c) {
        if (shape.column(c).empty()) {
            throw DomainError("horizontal strips need every column nonempty; column " + std::to_string(c) +
                              " of " + shape.to_string() + " is empty");
        }
    }
    std::vector<std::vector<int>> out;
    std::vector<int> heights;
    auto rec = [&](auto&& self, int c, int min_h) -> void {
        if (c > shape.width()) {
            out.push_back(heights);
            return;
        }
        const auto& span = shape.column(c);
        for (int h = std::max(min_h, span.lo); h < span.hi; ++h) {
            heights.push_back(h);
            self(self, c + 1, h);
            heights.pop_back();
        }
    };
    rec(rec, 1, 0);
    return out;
}

// "1:0,2:0,3:1" or "-" for the empty strip.
inline RStrip parse_strip(const SkewShape& shape, std::string_view text) {
    text = detail::trim(text);
    BoxSet boxes;
    if (!text.empty() && text != "-") {
        for (auto token : detail::split(text, ',')) {
            auto colon = token.find(':');
            if (colon == std::string_view::npos) throw ParseError("strip literal: expected column:height");
            boxes.insert({detail::parse_int(token.substr(0, colon), "strip literal"),
                          detail::parse_int(token.substr(colon + 1), "strip literal")});
        }
    }
    return RStrip(shape, boxes);
}

// Rows top to bottom: '#' strip box, '.' other box of the shape, ' ' outside.
inline std::string ascii_art(const SkewShape& shape, const BoxSet& strip = {}) {
    std::string out;
    for (int row = 1; row <= shape.rows(); ++row) {
        int h = shape.rows() - row;
        std::string line;
        for (int c = 1; c <= shape.width(); ++c) {
            Box b{c, h};
            line += strip.contains(b) ? '#' : (shape.contains(b) ? '.' : ' ');
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line + '\n';
    }
    return out;
}

}  // namespace ncstrip
