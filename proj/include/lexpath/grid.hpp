#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lexpath/graph.hpp"
#include "lexpath/star.hpp"
#include "lexpath/word.hpp"

namespace lexpath {

// A finite rectangle-of-rows restriction of a lexicographical path sum.
// Row r occupies the column interval [lo_r, hi_r); vertex (r, c) carries
// label u(c); within a row adjacency is |c - c'| = 1; across rows r < r'
// it is star(u(c), u(c')) = 1. Vertices are indexed row-major so searches
// and reports are reproducible.
struct GridWindow {
    Word word;
    StarTable star;
    std::vector<std::pair<long, long>> row_intervals;
    LabelledGraph graph;
    std::vector<std::pair<int, long>> coords;  // index -> (row, col)

    int rows() const { return int(row_intervals.size()); }

    int index_of(int row, long col) const {
        if (row < 0 || row >= rows()) return -1;
        auto [lo, hi] = row_intervals[size_t(row)];
        if (col < lo || col >= hi) return -1;
        long base = 0;
        for (int r = 0; r < row; ++r)
            base += row_intervals[size_t(r)].second - row_intervals[size_t(r)].first;
        return int(base + (col - lo));
    }

    std::pair<int, long> coord_of(int idx) const { return coords[size_t(idx)]; }
};

inline GridWindow build_window(Word u, StarTable star,
                               std::vector<std::pair<long, long>> intervals) {
    if (u.alphabet_size != star.k)
        throw std::invalid_argument("word and star must share an alphabet");
    if (intervals.empty()) throw std::invalid_argument("window needs at least one row");
    GridWindow w;
    w.word = std::move(u);
    w.star = std::move(star);
    w.row_intervals = std::move(intervals);

    for (int r = 0; r < w.rows(); ++r) {
        auto [lo, hi] = w.row_intervals[size_t(r)];
        if (lo < 0 || hi <= lo) throw std::invalid_argument("row interval must be non-empty");
        if (hi > w.word.size())
            throw std::invalid_argument("row interval exceeds the word prefix");
        for (long c = lo; c < hi; ++c) w.coords.emplace_back(r, c);
    }

    const int n = int(w.coords.size());
    w.graph = LabelledGraph(n);
    std::vector<int> labels(static_cast<size_t>(n));
    std::vector<std::string> names(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        auto [r, c] = w.coords[size_t(i)];
        labels[size_t(i)] = w.word[c];
        names[size_t(i)] = "(" + std::to_string(r) + "," + std::to_string(c) + ")";
    }
    for (int i = 0; i < n; ++i) {
        auto [r1, c1] = w.coords[size_t(i)];
        for (int j = i + 1; j < n; ++j) {
            auto [r2, c2] = w.coords[size_t(j)];
            bool edge;
            if (r1 == r2)
                edge = (c2 - c1 == 1) || (c1 - c2 == 1);
            else  // r1 < r2 by row-major order
                edge = w.star.op(w.word[c1], w.word[c2]) == 1;
            if (edge) w.graph.add_edge(i, j);
        }
    }
    w.graph.set_labels(std::move(labels));
    w.graph.set_names(std::move(names));
    return w;
}

inline GridWindow build_window(Word u, StarTable star, int rows, long cols) {
    if (rows < 1) throw std::invalid_argument("window needs rows >= 1");
    if (cols < 1 || cols > u.size())
        throw std::invalid_argument("window needs 1 <= cols <= |word|");
    return build_window(std::move(u), std::move(star),
                        std::vector<std::pair<long, long>>(size_t(rows), {0, cols}));
}

// Congruence window: same row rule, and across rows adjacency iff the
// columns differ mod k. Built through the generic machinery from the
// periodic word, then checked vertex-pair-exhaustively against the direct
// rule.
inline GridWindow congruence_window(int k, int rows, long cols) {
    GridWindow w = build_window(periodic_word(k, cols), congruence_table(k), rows, cols);
    for (int i = 0; i < w.graph.size(); ++i) {
        auto [r1, c1] = w.coord_of(i);
        for (int j = i + 1; j < w.graph.size(); ++j) {
            auto [r2, c2] = w.coord_of(j);
            bool direct = r1 == r2 ? (c2 - c1 == 1 || c1 - c2 == 1) : (c1 % k != c2 % k);
            if (direct != w.graph.adjacent(i, j))
                throw std::logic_error("congruence window disagrees with the direct rule");
        }
    }
    return w;
}

// Rows 0..nrows-1 with row r restricted to columns [0, r + tail); the
// default tail of 5 gives the restricted congruence graph the checks run on.
inline std::vector<std::pair<long, long>> staircase_intervals(int nrows, long tail = 5) {
    std::vector<std::pair<long, long>> iv;
    for (int r = 0; r < nrows; ++r) iv.emplace_back(0, r + tail);
    return iv;
}

// The six-vertex two-row induced path (0,0),(1,1),(0,k),(0,k+1),(1,2k),
// (0,2k+1) showing that the length-six locality bound for congruence
// windows cannot be lowered. Throws if the window cannot host it or if the
// check fails, since that would falsify the sharpness example.
inline InducedPath sharpness_path(const GridWindow& w) {
    const int k = w.star.k;
    if (w.star != congruence_table(k))
        throw std::invalid_argument("sharpness path is defined on congruence windows");
    const std::vector<std::pair<int, long>> seq = {
        {0, 0}, {1, 1}, {0, k}, {0, k + 1}, {1, 2L * k}, {0, 2L * k + 1}};
    std::vector<int> path;
    for (auto [r, c] : seq) {
        int idx = w.index_of(r, c);
        if (idx < 0)
            throw std::invalid_argument("window too small for the sharpness path: needs 2 rows and 2k+2 cols");
        path.push_back(idx);
    }
    if (!is_induced_path(w.graph, path))
        throw std::logic_error("sharpness sequence is not an induced path");
    return InducedPath{path};
}

// A row path of length m together with one vertex of another component.
// The probe's adjacency trace along the path consists of blocks of k-1
// columns separated by single columns, so probes of different k are
// mutually non-embeddable. Unlabelled on purpose: the non-embedding claims
// concern the plain graphs.
struct CongruenceProbe {
    LabelledGraph graph;  // vertices 0..m = the path, m+1 = the probe vertex
    std::string trace;    // adjacency of the probe along the path
    int k = 0;
    int m = 0;
};

inline CongruenceProbe congruence_probe(int k, int m) {
    if (m < std::max(k + 1, 6))
        throw std::invalid_argument("probe needs m >= max(k+1, 6)");
    GridWindow w = congruence_window(k, 2, m + 1);
    std::vector<int> vs;
    for (long c = 0; c <= m; ++c) vs.push_back(w.index_of(0, c));
    vs.push_back(w.index_of(1, 0));
    CongruenceProbe p;
    p.graph = strip_labels(induced_subgraph(w.graph, vs));
    p.k = k;
    p.m = m;
    for (int c = 0; c <= m; ++c)
        p.trace.push_back(p.graph.adjacent(c, m + 1) ? '1' : '0');
    return p;
}

}  // namespace lexpath
