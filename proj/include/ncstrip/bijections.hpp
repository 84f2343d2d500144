#pragma once

// The maps between strips, lattice paths and noncrossing partitions:
//
//   phi_a : r-strips of stretched_staircase(n,k) -> D_{n+1}^(k)
//   psi_a : D_n^(k) -> NC_n^{A,(k)}
//   phi_b : r-strips of rectangle(n,k) -> B_n^(k)
//   psi_b : B_n^(k) -> NC_n^{B,(k)}
//
// psi_a and psi_b work on the segment word of a path: each E step is cut
// into k segments (written U) and each N step is written D. The level of a
// point is #U - #D so far, i.e. kx - y in segment units; a segment belongs to
// the diagonal region numbered by the level at its left end.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ncstrip/errors.hpp"
#include "ncstrip/lattice_path.hpp"
#include "ncstrip/noncrossing_a.hpp"
#include "ncstrip/noncrossing_b.hpp"
#include "ncstrip/shapes.hpp"

namespace ncstrip {

// ---------------------------------------------------------------- phi_a

inline FussCatalanPath phi_a(int n, int k, const RStrip& strip) {
    if (!(strip.shape() == stretched_staircase(n, k))) {
        throw DomainError("phi_a: strip lives in " + strip.shape().to_string() + ", expected the stretched staircase " +
                          stretched_staircase(n, k).to_string());
    }
    auto path = repeat(Step::E, 1) + path_from_strip(strip) + repeat(Step::N, k);
    return FussCatalanPath(n + 1, k, std::move(path));
}

// Strip over stretched_staircase(path.n() - 1, k).
inline RStrip phi_a_inverse(const FussCatalanPath& path) {
    const int n = path.n() - 1;
    const int k = path.k();
    if (n < 0) throw DomainError("phi_a_inverse: the empty path has no preimage");
    const auto& steps = path.path().steps();
    std::vector<Step> inner(steps.begin() + 1, steps.end() - k);
    return strip_from_path(stretched_staircase(n, k), LatticePath(std::move(inner)));
}

// ---------------------------------------------------------------- auxiliary tree

// Vertices are the kn segments in path order. Each vertex has at most a
// right child (the next segment of its ascent) and an up child (the first
// segment of a later ascent in the same region).
struct AuxiliaryTree {
    struct Vertex {
        int step = 0;     // index of the E step, 0-based
        int segment = 0;  // 0 .. k-1 within the step
        int region = 0;
        int ascent = 0;   // index into ascents(path)
        int label = 0;
        int right = -1;
        int up = -1;
    };
    std::vector<Vertex> vertices;
    int root = -1;

    int label_of(int step, int segment) const {
        for (const auto& v : vertices) {
            if (v.step == step && v.segment == segment) return v.label;
        }
        throw DomainError("auxiliary tree: no segment (" + std::to_string(step) + "," + std::to_string(segment) + ")");
    }
};

namespace detail {

enum class Seg : char { U = 'U', D = 'D' };
using SegWord = std::vector<Seg>;

inline SegWord segment_word(const LatticePath& path, int k) {
    SegWord w;
    for (Step s : path.steps()) {
        if (s == Step::E) w.insert(w.end(), static_cast<std::size_t>(k), Seg::U);
        else w.push_back(Seg::D);
    }
    return w;
}

// Labels 1..m of the U's of a word that never goes below level 0, in the
// order the U's occur, together with the tree they come from.
struct SegTree {
    std::vector<int> region;
    std::vector<int> run;  // maximal U-run index
    std::vector<int> right;
    std::vector<int> up;
    std::vector<int> label;
};

inline SegTree label_segments(const SegWord& w) {
    SegTree t;
    int level = 0;
    int runs = -1;
    bool prev_up = false;
    std::vector<int> last_in_region;  // indexed by level
    for (Seg s : w) {
        if (s == Seg::D) {
            if (--level < 0) throw std::logic_error("label_segments: word goes below level 0");
            prev_up = false;
            continue;
        }
        const int v = static_cast<int>(t.region.size());
        if (!prev_up) ++runs;
        t.region.push_back(level);
        t.run.push_back(runs);
        t.right.push_back(-1);
        t.up.push_back(-1);
        if (prev_up) {
            t.right[static_cast<std::size_t>(v - 1)] = v;
        } else if (runs > 0) {
            const auto lv = static_cast<std::size_t>(level);
            if (lv >= last_in_region.size() || last_in_region[lv] < 0) {
                throw std::logic_error("label_segments: no earlier segment in region " + std::to_string(level));
            }
            const auto parent = static_cast<std::size_t>(last_in_region[lv]);
            if (t.up[parent] >= 0) throw std::logic_error("label_segments: segment has two up children");
            t.up[parent] = v;
        }
        if (static_cast<std::size_t>(level) >= last_in_region.size()) {
            last_in_region.resize(static_cast<std::size_t>(level) + 1, -1);
        }
        last_in_region[static_cast<std::size_t>(level)] = v;
        ++level;
        prev_up = true;
    }
    t.label.assign(t.region.size(), 0);
    if (t.region.empty()) return t;
    // preorder: the vertex, then its up branch, then its right branch
    int next = 1;
    std::vector<int> stack{0};
    while (!stack.empty()) {
        const auto v = static_cast<std::size_t>(stack.back());
        stack.pop_back();
        t.label[v] = next++;
        if (t.right[v] >= 0) stack.push_back(t.right[v]);
        if (t.up[v] >= 0) stack.push_back(t.up[v]);
    }
    if (next != static_cast<int>(t.region.size()) + 1) throw std::logic_error("label_segments: tree is not connected");
    return t;
}

// Inverse of label_segments followed by grouping labels into U-runs: the
// word of a noncrossing partition of [m]. Vertex v has right child the next
// element of its block and up child v+1 when v+1 starts a block; the word is
// read off as word(v) = U word(right(v)) D word(up(v)).
inline SegWord word_from_blocks(int m, const std::vector<Block>& blocks) {
    SegWord w;
    if (m == 0) return w;
    std::vector<int> right(static_cast<std::size_t>(m) + 1, 0);
    std::vector<bool> is_min(static_cast<std::size_t>(m) + 2, false);
    for (const auto& b : blocks) {
        is_min[static_cast<std::size_t>(b.front())] = true;
        for (std::size_t i = 0; i + 1 < b.size(); ++i) right[static_cast<std::size_t>(b[i])] = b[i + 1];
    }
    // a frame either expands a vertex or emits its D and then its up child
    struct Frame {
        int vertex;
        bool emit_down;
    };
    std::vector<Frame> stack{{1, false}};
    while (!stack.empty()) {
        Frame f = stack.back();
        stack.pop_back();
        const int v = f.vertex;
        if (f.emit_down) {
            w.push_back(Seg::D);
            const int up = (v + 1 <= m && is_min[static_cast<std::size_t>(v) + 1]) ? v + 1 : 0;
            if (up) stack.push_back({up, false});
            continue;
        }
        w.push_back(Seg::U);
        stack.push_back({v, true});
        const int r = right[static_cast<std::size_t>(v)];
        if (r) stack.push_back({r, false});
    }
    return w;
}

inline LatticePath path_from_segments(const SegWord& w, int k) {
    std::vector<Step> steps;
    int pending = 0;
    for (Seg s : w) {
        if (s == Seg::U) {
            if (++pending == k) {
                steps.push_back(Step::E);
                pending = 0;
            }
        } else {
            if (pending != 0) throw std::logic_error("segment word splits an E step");
            steps.push_back(Step::N);
        }
    }
    if (pending != 0) throw std::logic_error("segment word splits an E step");
    return LatticePath(std::move(steps));
}

}  // namespace detail

inline AuxiliaryTree build_auxiliary_tree(const FussCatalanPath& path) {
    const int k = path.k();
    const auto t = detail::label_segments(detail::segment_word(path.path(), k));
    AuxiliaryTree tree;
    for (std::size_t v = 0; v < t.region.size(); ++v) {
        AuxiliaryTree::Vertex x;
        x.step = static_cast<int>(v) / k;
        x.segment = static_cast<int>(v) % k;
        x.region = t.region[v];
        x.ascent = t.run[v];
        x.label = t.label[v];
        x.right = t.right[v];
        x.up = t.up[v];
        tree.vertices.push_back(x);
    }
    if (!tree.vertices.empty()) tree.root = 0;
    return tree;
}

// ---------------------------------------------------------------- psi_a

// Blocks are the label sets of the ascents.
inline NoncrossingA psi_a(const FussCatalanPath& path) {
    const auto tree = build_auxiliary_tree(path);
    std::vector<Block> blocks;
    for (const auto& v : tree.vertices) {
        if (static_cast<std::size_t>(v.ascent) >= blocks.size()) blocks.emplace_back();
        blocks[static_cast<std::size_t>(v.ascent)].push_back(v.label);
    }
    return NoncrossingA(SetPartition(path.k() * path.n(), std::move(blocks)));
}

inline FussCatalanPath psi_a_inverse(const NoncrossingA& p, int k) {
    if (k < 1) throw DomainError("psi_a_inverse: k must be >= 1");
    if (!is_k_divisible(p.partition(), k)) {
        throw DomainError("psi_a_inverse: partition " + p.to_string() + " is not " + std::to_string(k) + "-divisible");
    }
    if (p.size() % k != 0) throw DomainError("psi_a_inverse: ground set size is not a multiple of k");
    auto path = detail::path_from_segments(detail::word_from_blocks(p.size(), p.blocks()), k);
    return FussCatalanPath(p.size() / k, k, std::move(path));
}

// ---------------------------------------------------------------- phi_b

inline FussBinomialPath phi_b(int n, int k, const RStrip& strip) {
    if (!(strip.shape() == rectangle(n, k))) {
        throw DomainError("phi_b: strip lives in " + strip.shape().to_string() + ", expected the rectangle " +
                          rectangle(n, k).to_string());
    }
    return FussBinomialPath(n, k, path_from_strip(strip));
}

inline RStrip phi_b_inverse(const FussBinomialPath& path) {
    return strip_from_path(rectangle(path.n(), path.k()), path.path());
}

// ---------------------------------------------------------------- psi_b

// The segment word is cut into maximal positive pieces (steps in the region
// level >= 0) and negative pieces. Positive pieces are labelled by
// label_segments left to right with n_0+1, n_0+2, ..., where n_0 is the
// number of negative segments; negative pieces are rotated by 180 degrees,
// labelled right to left with 1, 2, ..., n_0 and negated. The ascent on
// y = 0 gives the antipodal block; every other ascent gives a pair B, -B.
inline NoncrossingB psi_b(const FussBinomialPath& path) {
    const int n = path.n();
    const int k = path.k();
    const int half = k * n;
    const auto w = detail::segment_word(path.path(), k);

    struct Piece {
        bool positive;
        detail::SegWord word;
        std::vector<int> segments;  // global U indices, in path order
    };
    std::vector<Piece> pieces;
    int level = 0;
    int u_count = 0;
    for (auto s : w) {
        const bool positive = s == detail::Seg::U ? level >= 0 : level >= 1;
        if (pieces.empty() || pieces.back().positive != positive) pieces.push_back({positive, {}, {}});
        pieces.back().word.push_back(s);
        if (s == detail::Seg::U) {
            pieces.back().segments.push_back(u_count++);
            ++level;
        } else {
            --level;
        }
    }

    int n0 = 0;
    for (const auto& piece : pieces) {
        if (!piece.positive) n0 += static_cast<int>(piece.segments.size());
    }
    std::vector<int> label(static_cast<std::size_t>(u_count), 0);
    int next = n0;
    for (const auto& piece : pieces) {
        if (!piece.positive) continue;
        const auto t = detail::label_segments(piece.word);
        for (std::size_t i = 0; i < piece.segments.size(); ++i) {
            label[static_cast<std::size_t>(piece.segments[i])] = next + t.label[i];
        }
        next += static_cast<int>(piece.segments.size());
    }
    next = 0;
    for (auto it = pieces.rbegin(); it != pieces.rend(); ++it) {
        if (it->positive) continue;
        detail::SegWord rotated(it->word.rbegin(), it->word.rend());
        const auto t = detail::label_segments(rotated);
        const std::size_t m = it->segments.size();
        for (std::size_t i = 0; i < m; ++i) {
            label[static_cast<std::size_t>(it->segments[m - 1 - i])] = -(next + t.label[i]);
        }
        next += static_cast<int>(m);
    }

    std::vector<Block> blocks;
    int u = 0;
    for (const auto& a : ascents(path.path())) {
        Block b;
        for (int i = 0; i < a.length * k; ++i) b.push_back(label[static_cast<std::size_t>(u++)]);
        if (a.y == 0) {
            const Block neg = negated(b);
            b.insert(b.end(), neg.begin(), neg.end());
            blocks.push_back(std::move(b));
        } else {
            blocks.push_back(negated(b));
            blocks.push_back(std::move(b));
        }
    }
    return NoncrossingB(n, k, SignedSetPartition(half, std::move(blocks)));
}

namespace detail {

inline bool has_negative(const Block& b) {
    return std::any_of(b.begin(), b.end(), [](int x) { return x < 0; });
}
inline bool has_positive(const Block& b) {
    return std::any_of(b.begin(), b.end(), [](int x) { return x > 0; });
}
inline int min_positive(const Block& b) {
    int m = 0;
    for (int x : b) {
        if (x > 0 && (m == 0 || x < m)) m = x;
    }
    return m;
}
inline int min_abs_negative(const Block& b) {
    int m = 0;
    for (int x : b) {
        if (x < 0 && (m == 0 || -x < m)) m = -x;
    }
    return m;
}

}  // namespace detail

// The greatest label of the negative pieces is a_0 - 1, where a_0 is the
// smallest positive element of the antipodal block, or else the smallest
// positive element of the last mixed block (in the canonical listing) whose
// negative elements are all smaller in absolute value than its positive
// ones, or else kn + 1. Of every pair B, -B the block inside
// A = [-(a_0-1), -1] u [a_0, kn] was produced by an ascent; the pieces are
// recovered from their roots, ordered P_1 N_1 P_2 N_2 ..., and each is
// rebuilt from its restricted partition with word_from_blocks.
inline FussBinomialPath psi_b_inverse(const NoncrossingB& p) {
    const int n = p.n();
    const int k = p.k();
    const int half = k * n;
    const auto anti = antipodal_block(p);

    int a0 = half + 1;
    if (anti) {
        a0 = detail::min_positive(*anti);
    } else {
        for (const auto& b : p.partition().canonical_listing()) {
            if (!detail::has_negative(b) || !detail::has_positive(b)) continue;
            int max_neg = 0;
            for (int x : b) {
                if (x < 0) max_neg = std::max(max_neg, -x);
            }
            if (max_neg < detail::min_positive(b)) a0 = detail::min_positive(b);
        }
    }
    auto in_a = [a0](int x) { return x < 0 ? -x <= a0 - 1 : x >= a0; };

    std::vector<Block> selected;
    for (const auto& b : p.blocks()) {
        if (anti && same_elements(b, *anti)) {
            Block part;
            for (int x : b) {
                if (in_a(x)) part.push_back(x);
            }
            selected.push_back(std::move(part));
        } else if (std::all_of(b.begin(), b.end(), in_a)) {
            selected.push_back(b);
        }
    }
    std::size_t covered = 0;
    for (const auto& b : selected) covered += b.size();
    if (covered != static_cast<std::size_t>(half)) {
        throw std::logic_error("psi_b_inverse: selected blocks of " + p.to_string() + " do not cover A");
    }

    std::vector<int> p_roots;
    std::vector<int> n_roots;
    std::vector<std::pair<int, int>> links;  // (negative root, positive root)
    if (anti) p_roots.push_back(a0);
    for (const auto& b : selected) {
        if (detail::has_negative(b) && detail::has_positive(b)) {
            links.emplace_back(detail::min_abs_negative(b), detail::min_positive(b));
            p_roots.push_back(detail::min_positive(b));
            n_roots.push_back(detail::min_abs_negative(b));
        }
    }
    if (a0 > 1 && std::find(n_roots.begin(), n_roots.end(), 1) == n_roots.end()) n_roots.push_back(1);
    std::sort(p_roots.begin(), p_roots.end());
    std::sort(n_roots.begin(), n_roots.end());
    if (!p_roots.empty() && p_roots.front() != a0) {
        throw std::logic_error("psi_b_inverse: first positive piece of " + p.to_string() + " does not start at a_0");
    }

    auto range_end = [](const std::vector<int>& roots, std::size_t i, int last) {
        return i + 1 < roots.size() ? roots[i + 1] - 1 : last;
    };
    // restricted partition of one piece, relabelled to 1..m
    auto piece_word = [&](int lo, int hi, bool positive) {
        std::vector<Block> local;
        for (const auto& b : selected) {
            Block part;
            for (int x : b) {
                const int v = positive ? x : -x;
                if (v >= lo && v <= hi) part.push_back(v - lo + 1);
            }
            if (!part.empty()) {
                std::sort(part.begin(), part.end());
                local.push_back(std::move(part));
            }
        }
        NoncrossingA piece(SetPartition(hi - lo + 1, std::move(local)));
        auto word = detail::word_from_blocks(piece.size(), piece.blocks());
        if (!positive) std::reverse(word.begin(), word.end());
        return word;
    };

    detail::SegWord w;
    std::size_t next_p = 0;
    auto append_positive = [&](int root) {
        if (next_p >= p_roots.size() || p_roots[next_p] != root) {
            throw std::logic_error("psi_b_inverse: positive pieces of " + p.to_string() + " are out of order");
        }
        auto part = piece_word(root, range_end(p_roots, next_p, half), true);
        w.insert(w.end(), part.begin(), part.end());
        ++next_p;
    };
    if (anti) append_positive(a0);
    for (std::size_t j = n_roots.size(); j-- > 0;) {
        auto part = piece_word(n_roots[j], range_end(n_roots, j, a0 - 1), false);
        w.insert(w.end(), part.begin(), part.end());
        auto link = std::find_if(links.begin(), links.end(), [&](const auto& l) { return l.first == n_roots[j]; });
        if (link != links.end()) append_positive(link->second);
        else if (j != 0) throw std::logic_error("psi_b_inverse: negative piece of " + p.to_string() + " has no successor");
    }
    if (next_p != p_roots.size()) {
        throw std::logic_error("psi_b_inverse: unused positive piece in " + p.to_string());
    }
    return FussBinomialPath(n, k, detail::path_from_segments(w, k));
}

}  // namespace ncstrip
