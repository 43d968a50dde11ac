#pragma once

#include <algorithm>
#include <deque>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lexpath/bitset.hpp"

namespace lexpath {

// Simple undirected graph, optionally vertex-labelled and vertex-named.
// Immutable in spirit: built once, then only queried.
class LabelledGraph {
public:
    LabelledGraph() = default;
    explicit LabelledGraph(int n) : n_(n), adj_(size_t(n), Bitset(n)) {}

    int size() const { return n_; }

    void add_edge(int a, int b) {
        if (a == b) throw std::invalid_argument("loops are not allowed");
        if (a < 0 || b < 0 || a >= n_ || b >= n_)
            throw std::out_of_range("edge endpoint out of range");
        adj_[size_t(a)].set(b);
        adj_[size_t(b)].set(a);
    }

    bool adjacent(int a, int b) const { return adj_[size_t(a)].test(b); }
    const Bitset& neighbours(int v) const { return adj_[size_t(v)]; }
    int degree(int v) const { return adj_[size_t(v)].count(); }

    long edge_count() const {
        long twice = 0;
        for (const auto& row : adj_) twice += row.count();
        return twice / 2;
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> es;
        for (int a = 0; a < n_; ++a)
            for (int b = adj_[size_t(a)].find_next(a); b >= 0; b = adj_[size_t(a)].find_next(b))
                es.emplace_back(a, b);
        return es;
    }

    bool labelled() const { return !labels_.empty(); }
    int label(int v) const { return labels_[size_t(v)]; }
    void set_labels(std::vector<int> labels) {
        if (!labels.empty() && labels.size() != size_t(n_))
            throw std::invalid_argument("label count must match vertex count");
        labels_ = std::move(labels);
    }
    const std::vector<int>& labels() const { return labels_; }

    bool named() const { return !names_.empty(); }
    const std::string& name(int v) const { return names_[size_t(v)]; }
    void set_names(std::vector<std::string> names) {
        if (!names.empty() && names.size() != size_t(n_))
            throw std::invalid_argument("name count must match vertex count");
        names_ = std::move(names);
    }
    const std::vector<std::string>& names() const { return names_; }

private:
    int n_ = 0;
    std::vector<Bitset> adj_;
    std::vector<int> labels_;
    std::vector<std::string> names_;
};

inline LabelledGraph strip_labels(const LabelledGraph& g) {
    LabelledGraph h = g;
    h.set_labels({});
    return h;
}

inline LabelledGraph induced_subgraph(const LabelledGraph& g, const std::vector<int>& vs) {
    LabelledGraph h(int(vs.size()));
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i + 1; j < vs.size(); ++j)
            if (g.adjacent(vs[i], vs[j])) h.add_edge(int(i), int(j));
    if (g.labelled()) {
        std::vector<int> lab;
        for (int v : vs) lab.push_back(g.label(v));
        h.set_labels(std::move(lab));
    }
    if (g.named()) {
        std::vector<std::string> nm;
        for (int v : vs) nm.push_back(g.name(v));
        h.set_names(std::move(nm));
    }
    return h;
}

constexpr int kUnreachable = -1;

inline std::vector<int> bfs_distances(const LabelledGraph& g, const std::vector<int>& sources) {
    std::vector<int> dist(size_t(g.size()), kUnreachable);
    std::deque<int> q;
    for (int s : sources) {
        dist[size_t(s)] = 0;
        q.push_back(s);
    }
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (int w = g.neighbours(v).find_first(); w >= 0; w = g.neighbours(v).find_next(w))
            if (dist[size_t(w)] == kUnreachable) {
                dist[size_t(w)] = dist[size_t(v)] + 1;
                q.push_back(w);
            }
    }
    return dist;
}

// All-pairs graphic distance; kUnreachable stands for +infinity.
inline std::vector<std::vector<int>> distance_matrix(const LabelledGraph& g) {
    std::vector<std::vector<int>> d;
    d.reserve(size_t(g.size()));
    for (int v = 0; v < g.size(); ++v) d.push_back(bfs_distances(g, {v}));
    return d;
}

// nullopt = +infinity (some pair unreachable). A one-vertex or empty graph
// has diameter 0.
inline std::optional<int> diameter(const LabelledGraph& g) {
    int best = 0;
    for (int v = 0; v < g.size(); ++v) {
        auto d = bfs_distances(g, {v});
        for (int x : d) {
            if (x == kUnreachable) return std::nullopt;
            best = std::max(best, x);
        }
    }
    return best;
}

inline std::vector<int> ball(const LabelledGraph& g, const std::vector<int>& centers, int r) {
    if (r < 0) throw std::invalid_argument("ball radius must be >= 0");
    if (centers.empty()) return {};
    auto d = bfs_distances(g, centers);
    std::vector<int> out;
    for (int v = 0; v < g.size(); ++v)
        if (d[size_t(v)] != kUnreachable && d[size_t(v)] <= r) out.push_back(v);
    return out;
}

struct InducedPath {
    std::vector<int> vertices;
    int length() const { return int(vertices.size()) - 1; }
};

inline bool is_induced_path(const LabelledGraph& g, const std::vector<int>& p) {
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = i + 1; j < p.size(); ++j) {
            if (p[i] == p[j]) return false;
            bool want = (j == i + 1);
            if (g.adjacent(p[i], p[j]) != want) return false;
        }
    return true;
}

// DFS over partial induced paths: an extension must be adjacent to the last
// vertex and non-adjacent to every earlier one. Each undirected path is
// reported once, oriented with its smaller endpoint first; the report order
// is lexicographic on the vertex sequence. Return false from the visitor to
// stop early.
inline void enumerate_induced_paths(const LabelledGraph& g, int exact_len,
                                    const std::function<bool(const InducedPath&)>& visit) {
    if (exact_len < 1) throw std::invalid_argument("path length must be >= 1");
    const int n = g.size();
    std::vector<int> path;
    path.reserve(size_t(exact_len) + 1);
    std::vector<Bitset> banned(size_t(exact_len) + 1, Bitset(n));
    bool stop = false;

    std::function<void()> extend = [&]() {
        if (stop) return;
        const size_t depth = path.size();  // vertices so far
        if (int(depth) == exact_len + 1) {
            if (path.front() < path.back()) {
                if (!visit(InducedPath{path})) stop = true;
            }
            return;
        }
        const int last = path.back();
        Bitset cand = g.neighbours(last).and_not(banned[depth - 1]);
        for (int w = cand.find_first(); w >= 0 && !stop; w = cand.find_next(w)) {
            banned[depth] = banned[depth - 1];
            banned[depth] |= g.neighbours(last);
            banned[depth].set(w);
            path.push_back(w);
            extend();
            path.pop_back();
        }
    };

    for (int s = 0; s < n && !stop; ++s) {
        path.assign(1, s);
        banned[0].clear();
        banned[0].set(s);
        extend();
    }
}

inline std::vector<InducedPath> induced_paths(const LabelledGraph& g, int exact_len,
                                              std::optional<long> limit = std::nullopt) {
    std::vector<InducedPath> out;
    enumerate_induced_paths(g, exact_len, [&](const InducedPath& p) {
        out.push_back(p);
        return !limit || long(out.size()) < *limit;
    });
    return out;
}

// Longest induced path, by exhaustive DFS. 0 for edgeless graphs.
inline int detour(const LabelledGraph& g) {
    const int n = g.size();
    int best = 0;
    std::vector<int> path;
    std::vector<Bitset> banned(size_t(n) + 1, Bitset(n));
    std::function<void()> extend = [&]() {
        const size_t depth = path.size();
        best = std::max(best, int(depth) - 1);
        const int last = path.back();
        Bitset cand = g.neighbours(last).and_not(banned[depth - 1]);
        for (int w = cand.find_first(); w >= 0; w = cand.find_next(w)) {
            banned[depth] = banned[depth - 1];
            banned[depth] |= g.neighbours(last);
            banned[depth].set(w);
            path.push_back(w);
            extend();
            path.pop_back();
        }
    };
    for (int s = 0; s < n; ++s) {
        path.assign(1, s);
        banned[0].clear();
        banned[0].set(s);
        extend();
    }
    return best;
}

// First induced path of the exact length in enumeration order, if any.
inline std::optional<InducedPath> first_induced_path(const LabelledGraph& g, int exact_len) {
    std::optional<InducedPath> out;
    enumerate_induced_paths(g, exact_len, [&](const InducedPath& p) {
        out = p;
        return false;
    });
    return out;
}

struct Embedding {
    std::vector<int> map;  // pattern vertex -> host vertex
};

inline bool embedding_valid(const LabelledGraph& pattern, const LabelledGraph& host,
                            const Embedding& e, bool respect_labels) {
    if (e.map.size() != size_t(pattern.size())) return false;
    std::vector<char> used(size_t(host.size()), 0);
    for (int v = 0; v < pattern.size(); ++v) {
        int h = e.map[size_t(v)];
        if (h < 0 || h >= host.size() || used[size_t(h)]) return false;
        used[size_t(h)] = 1;
        if (respect_labels && pattern.label(v) != host.label(h)) return false;
    }
    for (int a = 0; a < pattern.size(); ++a)
        for (int b = a + 1; b < pattern.size(); ++b)
            if (pattern.adjacent(a, b) != host.adjacent(e.map[size_t(a)], e.map[size_t(b)]))
                return false;
    return true;
}

// Exhaustive induced-subgraph search: backtracking with forward checking.
// Every unassigned pattern vertex keeps a candidate set that shrinks as
// vertices are assigned (edges must map to edges, non-edges to non-edges,
// labels to equal labels when requested); the next vertex to assign is
// always one with the fewest candidates, ties and candidates in ascending
// order, so both the found embedding and the absence verdict are
// deterministic. Absence means absence: the search never prunes
// heuristically.
inline std::optional<Embedding> find_embedding(const LabelledGraph& pattern,
                                               const LabelledGraph& host,
                                               bool respect_labels = false) {
    const int np = pattern.size(), nh = host.size();
    if (np == 0) return Embedding{{}};
    if (np > nh) return std::nullopt;
    if (respect_labels && (!pattern.labelled() || !host.labelled()))
        throw std::invalid_argument("label-respecting search needs labels on both graphs");

    // level 0 candidates: degree and label screens
    std::vector<std::vector<Bitset>> cand(size_t(np) + 1,
                                          std::vector<Bitset>(size_t(np), Bitset(nh)));
    for (int v = 0; v < np; ++v)
        for (int h = 0; h < nh; ++h) {
            if (host.degree(h) < pattern.degree(v)) continue;
            if (respect_labels && pattern.label(v) != host.label(h)) continue;
            cand[0][size_t(v)].set(h);
        }

    std::vector<int> map(size_t(np), -1);
    std::vector<char> assigned(size_t(np), 0);

    std::function<bool(size_t)> assign = [&](size_t depth) -> bool {
        if (depth == size_t(np)) return true;
        const auto& cur = cand[depth];
        int v = -1, best = nh + 1;
        for (int u = 0; u < np; ++u) {
            if (assigned[size_t(u)]) continue;
            int c = cur[size_t(u)].count();
            if (c < best) {
                best = c;
                v = u;
            }
        }
        if (best == 0) return false;
        assigned[size_t(v)] = 1;
        for (int h = cur[size_t(v)].find_first(); h >= 0; h = cur[size_t(v)].find_next(h)) {
            map[size_t(v)] = h;
            auto& next = cand[depth + 1];
            bool viable = true;
            for (int u = 0; u < np && viable; ++u) {
                if (assigned[size_t(u)]) continue;
                next[size_t(u)] = pattern.adjacent(u, v)
                                      ? [&] {
                                            Bitset b = cur[size_t(u)];
                                            b &= host.neighbours(h);
                                            return b;
                                        }()
                                      : cur[size_t(u)].and_not(host.neighbours(h));
                next[size_t(u)].reset(h);
                viable = next[size_t(u)].any();
            }
            if (viable && assign(depth + 1)) return true;
        }
        assigned[size_t(v)] = 0;
        map[size_t(v)] = -1;
        return false;
    };

    if (!assign(0)) return std::nullopt;
    return Embedding{map};
}

// Every vertex outside M sees all of M or none of it.
inline bool is_module(const LabelledGraph& g, const std::vector<int>& members) {
    Bitset m(g.size());
    for (int v : members) m.set(v);
    for (int z = 0; z < g.size(); ++z) {
        if (m.test(z)) continue;
        Bitset inter = g.neighbours(z);
        inter &= m;
        if (inter.any() && !m.is_subset_of(g.neighbours(z))) return false;
    }
    return true;
}

// Closure: keep absorbing outside vertices that are adjacent to part of the
// set but not all of it. The fixpoint is the smallest module containing
// {a, b}.
inline std::vector<int> minimal_module_containing(const LabelledGraph& g, int a, int b) {
    if (a == b) throw std::invalid_argument("needs two distinct vertices");
    Bitset m(g.size());
    m.set(a);
    m.set(b);
    bool grew = true;
    while (grew) {
        grew = false;
        for (int z = 0; z < g.size(); ++z) {
            if (m.test(z)) continue;
            Bitset inter = g.neighbours(z);
            inter &= m;
            if (inter.any() && !m.is_subset_of(g.neighbours(z))) {
                m.set(z);
                grew = true;
            }
        }
    }
    return m.to_vector();
}

struct PrimalityCheck {
    enum class Verdict { prime, non_prime, too_small };
    Verdict verdict;
    std::optional<std::vector<int>> witness;  // a nontrivial module when non_prime

    bool prime() const { return verdict == Verdict::prime; }
};

// Prime iff every pairwise closure is the whole vertex set. Graphs on at
// most three vertices are reported too_small, distinct from having a module
// witness.
inline PrimalityCheck is_prime(const LabelledGraph& g) {
    if (g.size() <= 3) return {PrimalityCheck::Verdict::too_small, std::nullopt};
    for (int a = 0; a < g.size(); ++a)
        for (int b = a + 1; b < g.size(); ++b) {
            auto m = minimal_module_containing(g, a, b);
            if (int(m.size()) < g.size())
                return {PrimalityCheck::Verdict::non_prime, std::move(m)};
        }
    return {PrimalityCheck::Verdict::prime, std::nullopt};
}

inline std::vector<std::vector<int>> connected_components(const LabelledGraph& g) {
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(size_t(g.size()), 0);
    for (int s = 0; s < g.size(); ++s) {
        if (seen[size_t(s)]) continue;
        std::vector<int> comp;
        std::deque<int> q{s};
        seen[size_t(s)] = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            comp.push_back(v);
            for (int w = g.neighbours(v).find_first(); w >= 0; w = g.neighbours(v).find_next(w))
                if (!seen[size_t(w)]) {
                    seen[size_t(w)] = 1;
                    q.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

struct PathForestCheck {
    bool is_path_forest;
    std::vector<int> component_lengths;  // sorted, edges per component
};

// A component is a path iff it is connected with max degree 2 and one fewer
// edge than vertices.
inline PathForestCheck is_disjoint_union_of_paths(const LabelledGraph& g) {
    PathForestCheck r{true, {}};
    for (const auto& comp : connected_components(g)) {
        long edges = 0;
        bool ok = true;
        for (int v : comp) {
            int d = g.degree(v);
            edges += d;
            if (d > 2) ok = false;
        }
        edges /= 2;
        if (!ok || edges != long(comp.size()) - 1) {
            r.is_path_forest = false;
            r.component_lengths.clear();
            return r;
        }
        r.component_lengths.push_back(int(comp.size()) - 1);
    }
    std::sort(r.component_lengths.begin(), r.component_lengths.end());
    return r;
}

// True iff the subgraph induced on A preserves all graphic distances of g,
// infinite ones included.
inline bool isometric_check(const LabelledGraph& g, const std::vector<int>& a) {
    LabelledGraph sub = induced_subgraph(g, a);
    for (size_t i = 0; i < a.size(); ++i) {
        auto din = bfs_distances(sub, {int(i)});
        auto dout = bfs_distances(g, {a[i]});
        for (size_t j = 0; j < a.size(); ++j)
            if (din[j] != dout[size_t(a[j])]) return false;
    }
    return true;
}

inline LabelledGraph path_graph(int n) {
    LabelledGraph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

inline LabelledGraph cycle_graph(int n) {
    LabelledGraph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

inline LabelledGraph complete_graph(int n) {
    LabelledGraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

inline LabelledGraph grid_graph(int rows, int cols) {
    LabelledGraph g(rows * cols);
    auto id = [cols](int r, int c) { return r * cols + c; };
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) g.add_edge(id(r, c), id(r, c + 1));
            if (r + 1 < rows) g.add_edge(id(r, c), id(r + 1, c));
        }
    return g;
}

}  // namespace lexpath
