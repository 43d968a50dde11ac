#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "lexpath/graph.hpp"

namespace lexpath {

// Finite poset stored as the strict relation, one bit row per element.
// Construction takes arbitrary strict pairs, closes transitively and
// rejects cycles.
class Poset {
public:
    Poset() = default;
    Poset(int n, const std::vector<std::pair<int, int>>& strict_pairs)
        : n_(n), above_(size_t(n), Bitset(n)) {
        for (auto [a, b] : strict_pairs) {
            if (a < 0 || b < 0 || a >= n || b >= n) throw std::out_of_range("pair out of range");
            if (a == b) throw std::invalid_argument("strict order is irreflexive");
            above_[size_t(a)].set(b);
        }
        bool grew = true;
        while (grew) {
            grew = false;
            for (int a = 0; a < n_; ++a)
                for (int b = above_[size_t(a)].find_first(); b >= 0;
                     b = above_[size_t(a)].find_next(b)) {
                    Bitset merged = above_[size_t(a)];
                    merged |= above_[size_t(b)];
                    if (!(merged == above_[size_t(a)])) {
                        above_[size_t(a)] = std::move(merged);
                        grew = true;
                    }
                }
        }
        for (int a = 0; a < n_; ++a) {
            if (above_[size_t(a)].test(a))
                throw std::invalid_argument("strict pairs close into a cycle");
            for (int b = above_[size_t(a)].find_first(); b >= 0;
                 b = above_[size_t(a)].find_next(b))
                if (above_[size_t(b)].test(a))
                    throw std::invalid_argument("strict pairs violate antisymmetry");
        }
    }

    int size() const { return n_; }
    bool less(int a, int b) const { return above_[size_t(a)].test(b); }
    bool comparable(int a, int b) const { return a != b && (less(a, b) || less(b, a)); }
    bool incomparable(int a, int b) const { return a != b && !comparable(a, b); }

    std::vector<std::pair<int, int>> strict_pairs() const {
        std::vector<std::pair<int, int>> ps;
        for (int a = 0; a < n_; ++a)
            for (int b = above_[size_t(a)].find_first(); b >= 0;
                 b = above_[size_t(a)].find_next(b))
                ps.emplace_back(a, b);
        return ps;
    }

    Poset dual() const {
        std::vector<std::pair<int, int>> ps;
        for (auto [a, b] : strict_pairs()) ps.emplace_back(b, a);
        return Poset(n_, ps);
    }

    // Subposet on `keep`, re-indexed by position.
    Poset restrict(const std::vector<int>& keep) const {
        std::map<int, int> pos;
        for (size_t i = 0; i < keep.size(); ++i) pos[keep[i]] = int(i);
        std::vector<std::pair<int, int>> ps;
        for (size_t i = 0; i < keep.size(); ++i)
            for (size_t j = 0; j < keep.size(); ++j)
                if (i != j && less(keep[i], keep[j])) ps.emplace_back(int(i), int(j));
        return Poset(int(keep.size()), ps);
    }

private:
    int n_ = 0;
    std::vector<Bitset> above_;
};

inline LabelledGraph incomparability_graph(const Poset& p) {
    LabelledGraph g(p.size());
    for (int a = 0; a < p.size(); ++a)
        for (int b = a + 1; b < p.size(); ++b)
            if (p.incomparable(a, b)) g.add_edge(a, b);
    return g;
}

inline LabelledGraph comparability_graph(const Poset& p) {
    LabelledGraph g(p.size());
    for (int a = 0; a < p.size(); ++a)
        for (int b = a + 1; b < p.size(); ++b)
            if (p.comparable(a, b)) g.add_edge(a, b);
    return g;
}

// Partition of V \ F by equal adjacency into F. Blocks are listed by their
// smallest member; the count can never exceed 2^|F|. Note that for an
// incomparability graph these blocks need not be order convex: two vertices
// on opposite sides of an anchor have the same (non-)adjacency to it. The
// direction-refined partition below restores convexity.
struct ConvexPartition {
    std::vector<std::vector<int>> blocks;
    std::vector<int> anchor;  // the F the blocks refine against
};

inline ConvexPartition tau_partition(const LabelledGraph& g, const std::vector<int>& f) {
    for (int v : f)
        if (v < 0 || v >= g.size()) throw std::out_of_range("anchor vertex out of range");
    Bitset in_f(g.size());
    for (int v : f) in_f.set(v);
    std::map<std::vector<char>, std::vector<int>> classes;
    for (int v = 0; v < g.size(); ++v) {
        if (in_f.test(v)) continue;
        std::vector<char> pattern;
        pattern.reserve(f.size());
        for (int x : f) pattern.push_back(g.adjacent(v, x) ? 1 : 0);
        classes[pattern].push_back(v);
    }
    ConvexPartition t;
    t.anchor = f;
    for (auto& [pat, block] : classes) t.blocks.push_back(std::move(block));
    std::sort(t.blocks.begin(), t.blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    if (f.size() < 30 && t.blocks.size() > (size_t(1) << f.size()))
        throw std::logic_error("block count exceeded 2^|F|");
    return t;
}

// For a tau block B, F splits into the vertices adjacent to all of B and
// those adjacent to none; the first part makes a complete sum with B, the
// second a direct sum. Throws when B is not actually a block.
inline std::pair<std::vector<int>, std::vector<int>> block_bipartition(
    const LabelledGraph& g, const std::vector<int>& f, const std::vector<int>& b) {
    std::vector<int> all, none;
    for (int x : f) {
        size_t deg = 0;
        for (int v : b)
            if (g.adjacent(x, v)) ++deg;
        if (deg == b.size())
            all.push_back(x);
        else if (deg == 0)
            none.push_back(x);
        else
            throw std::invalid_argument("set is not a tau block of F");
    }
    return {all, none};
}

enum class PathOrderCheck { holds, fails, inapplicable };

namespace detail {
// The bare order condition, no hypothesis validation. Split out so negative
// controls can feed deliberately corrupted pairings.
inline bool distant_pairs_increase(const Poset& p, const std::vector<int>& path) {
    for (size_t i = 0; i < path.size(); ++i)
        for (size_t j = i + 2; j < path.size(); ++j)
            if (!p.less(path[i], path[j])) return false;
    return true;
}
}  // namespace detail

// Along an induced incomparability path with comparable endpoints, once two
// indices are at distance >= 2 the earlier element lies strictly below the
// later (after orienting the path from its smaller endpoint).
inline PathOrderCheck check_inc_path_monotone(const Poset& p, std::vector<int> path) {
    if (path.size() < 2) return PathOrderCheck::holds;
    LabelledGraph inc = incomparability_graph(p);
    if (!is_induced_path(inc, path))
        throw std::invalid_argument("not an induced path of the incomparability graph");
    int x = path.front(), y = path.back();
    // a single edge has incomparable endpoints, so the hypothesis is unmet;
    // for three or more vertices the endpoints are comparable automatically
    if (!p.comparable(x, y)) return PathOrderCheck::inapplicable;
    if (p.less(y, x)) std::reverse(path.begin(), path.end());
    return detail::distant_pairs_increase(p, path) ? PathOrderCheck::holds
                                                   : PathOrderCheck::fails;
}

inline bool is_convex(const Poset& p, const std::vector<int>& s) {
    Bitset in_s(p.size());
    for (int v : s) in_s.set(v);
    for (int a : s)
        for (int b : s) {
            if (!p.less(a, b)) continue;
            for (int z = 0; z < p.size(); ++z)
                if (!in_s.test(z) && p.less(a, z) && p.less(z, b)) return false;
        }
    return true;
}

// Vertices classified per anchor as incomparable, below, or above. Each
// block is the intersection of sets of the forms Inc(f), D(f), U(f), all of
// them order convex, so the blocks are convex; there are at most 3^|F|.
// The adjacency-pattern partition above is the coarsening that forgets the
// below/above distinction, and that coarsening can lose convexity (smallest
// example: a three-element chain anchored at its middle).
inline ConvexPartition directed_tau_partition(const Poset& p, const std::vector<int>& f) {
    std::map<std::vector<char>, std::vector<int>> classes;
    Bitset in_f(p.size());
    for (int v : f) in_f.set(v);
    for (int v = 0; v < p.size(); ++v) {
        if (in_f.test(v)) continue;
        std::vector<char> pattern;
        pattern.reserve(f.size());
        for (int x : f)
            pattern.push_back(p.incomparable(v, x) ? 0 : (p.less(v, x) ? 1 : 2));
        classes[pattern].push_back(v);
    }
    ConvexPartition t;
    t.anchor = f;
    for (auto& [pat, block] : classes) t.blocks.push_back(std::move(block));
    std::sort(t.blocks.begin(), t.blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    for (const auto& block : t.blocks)
        if (!is_convex(p, block)) throw std::logic_error("refined block not convex");
    return t;
}

// The interval [min, max] of two comparable elements.
inline std::vector<int> interval_hull(const Poset& p, int a, int b) {
    if (p.less(b, a)) std::swap(a, b);
    if (!(a == b || p.less(a, b))) throw std::invalid_argument("hull needs comparable elements");
    std::vector<int> out;
    for (int z = 0; z < p.size(); ++z)
        if (z == a || z == b || (p.less(a, z) && p.less(z, b))) out.push_back(z);
    return out;
}

// Middle of an induced incomparability path whose endpoints lie in a convex
// set: dropping two vertices from each end leaves a path inside the set, so
// an input of length n+4 yields an induced subpath of length n. Verifies
// its own hypotheses and conclusion.
inline InducedPath convex_subpath(const Poset& p, const std::vector<int>& c,
                                  const InducedPath& path) {
    if (path.length() < 4)
        throw std::invalid_argument("convex_subpath needs a path of length >= 4");
    LabelledGraph inc = incomparability_graph(p);
    if (!is_induced_path(inc, path.vertices))
        throw std::invalid_argument("not an induced path of the incomparability graph");
    Bitset in_c(p.size());
    for (int v : c) in_c.set(v);
    if (!in_c.test(path.vertices.front()) || !in_c.test(path.vertices.back()))
        throw std::invalid_argument("path endpoints must lie in the convex set");
    if (!is_convex(p, c)) throw std::invalid_argument("set is not convex");
    std::vector<int> mid(path.vertices.begin() + 2, path.vertices.end() - 2);
    for (int v : mid)
        if (!in_c.test(v)) throw std::logic_error("middle subpath escaped the convex set");
    return InducedPath{mid};
}

inline long cover_subpath_length(long k, long n) {
    if (k < 1 || n < 0) throw std::invalid_argument("needs k >= 1, n >= 0");
    return k * (n + 4);
}

// Pigeonhole witness: on a path of length m coloured with k colours there
// are two same-coloured vertices at index distance >= floor(m/k). Returns
// the lexicographically first such pair.
inline std::pair<int, int> same_color_spread(const std::vector<int>& colors, int k) {
    const int m = int(colors.size()) - 1;
    if (m < 0 || k < 1) throw std::invalid_argument("needs a path and k >= 1");
    const int spread = m / k;
    for (int i = 0; i + spread <= m; ++i)
        for (int j = i + spread; j <= m; ++j)
            if (colors[size_t(i)] == colors[size_t(j)]) return {i, j};
    throw std::logic_error("no same-coloured pair at the pigeonhole distance");
}

// One step of the uniform-block extraction: an induced incomparability path
// of length n plus a disjoint convex block that is uniformly adjacent or
// uniformly nonadjacent to it, the block chosen to carry the longest
// residual paths. Works inside `domain` (original vertex ids).
struct UniformBlock {
    InducedPath path;        // length n, original ids
    std::vector<int> block;  // the residual convex block, original ids
    bool adjacent = false;   // true: complete-sum side; false: direct-sum side
    bool vacuous = false;    // block empty: both modes hold vacuously
};

namespace detail {
inline int longest_induced_path_length(const LabelledGraph& g) { return detour(g); }
}  // namespace detail

inline std::optional<UniformBlock> extract_uniform_block(const Poset& p,
                                                         const std::vector<int>& domain,
                                                         int n) {
    if (n < 0) throw std::invalid_argument("target length must be >= 0");
    // A carrier of length 3(n+4) makes the three-colour pigeonhole below
    // certain; 2(n+4) is the floor, and often enough in practice, so take
    // the longest carrier available between the two.
    const int floor_len = int(cover_subpath_length(2, n));
    const int cap_len = int(cover_subpath_length(3, n));
    Poset sub = p.restrict(domain);
    LabelledGraph inc = incomparability_graph(sub);

    std::optional<InducedPath> carrier;
    for (int len = cap_len; len >= floor_len && !carrier; --len)
        carrier = first_induced_path(inc, len);
    if (!carrier) return std::nullopt;
    const std::vector<int>& cpath = carrier->vertices;

    ConvexPartition tau = directed_tau_partition(sub, cpath);
    if (tau.blocks.empty()) {
        // the carrier consumed the whole domain; the uniformity condition is
        // vacuous, so any subpath of the requested length serves
        UniformBlock ub;
        ub.vacuous = true;
        for (int i = 0; i <= n; ++i) ub.path.vertices.push_back(domain[size_t(cpath[size_t(i)])]);
        return ub;
    }

    // pick the block with the longest induced path; ties to the earlier block
    int best = -1, best_len = -1;
    for (size_t i = 0; i < tau.blocks.size(); ++i) {
        int len = detail::longest_induced_path_length(induced_subgraph(inc, tau.blocks[i]));
        if (len > best_len) {
            best_len = len;
            best = int(i);
        }
    }
    const std::vector<int>& vprime = tau.blocks[size_t(best)];

    // Each carrier vertex sees all of the block or none of it, and in the
    // latter case sits uniformly below or uniformly above it because the
    // block is convex. That yields three colours, each an intersection of
    // convex sets.
    auto [all_side, none_side] = block_bipartition(inc, cpath, vprime);
    (void)none_side;
    Bitset sees_all(sub.size());
    for (int v : all_side) sees_all.set(v);
    std::vector<int> colors;
    colors.reserve(cpath.size());
    for (int v : cpath) {
        if (sees_all.test(v)) {
            colors.push_back(0);
        } else {
            const bool below = sub.less(v, vprime.front());
            for (int w : vprime)
                if (sub.less(v, w) != below || sub.less(w, v) == below)
                    throw std::logic_error("carrier vertex not uniformly ordered vs block");
            colors.push_back(below ? 1 : 2);
        }
    }

    // two same-coloured carrier vertices far enough apart; guaranteed when
    // the carrier reached 3(n+4)
    const int m = int(colors.size()) - 1;
    int ci = -1;
    for (int i = 0; i <= m && ci < 0; ++i)
        for (int j = i + n + 4; j <= m; ++j)
            if (colors[size_t(i)] == colors[size_t(j)]) {
                ci = i;
                break;
            }
    if (ci < 0) {
        if (m >= cap_len) throw std::logic_error("pigeonhole failed on a full carrier");
        return std::nullopt;  // carrier too short for this domain
    }

    std::vector<int> mid(cpath.begin() + ci + 2, cpath.begin() + ci + n + 3);
    const bool adjacent_mode = colors[size_t(ci)] == 0;

    // verify before translating back
    if (!is_induced_path(inc, mid)) throw std::logic_error("extracted block path not induced");
    for (int v : mid)
        for (int w : vprime)
            if (inc.adjacent(v, w) != adjacent_mode)
                throw std::logic_error("extracted pair is not uniform");
    if (!is_convex(sub, vprime)) throw std::logic_error("extracted block is not convex");

    UniformBlock ub;
    ub.adjacent = adjacent_mode;
    for (int v : mid) ub.path.vertices.push_back(domain[size_t(v)]);
    for (int v : vprime) ub.block.push_back(domain[size_t(v)]);
    return ub;
}

inline std::optional<UniformBlock> extract_uniform_block(const Poset& p, int n) {
    std::vector<int> all(size_t(p.size()));
    for (int v = 0; v < p.size(); ++v) all[size_t(v)] = v;
    return extract_uniform_block(p, all, n);
}

// Iterated extraction: peel off uniform (path, block) pairs, assigning each
// path to the direct or complete side by the adjacency mode of its stage,
// until one side has all the requested lengths. Later paths live inside
// every earlier block, so cross-pairs inherit the earlier stage's mode.
struct PathSumExtraction {
    bool achieved = false;
    std::optional<bool> complete_mode;  // set when achieved: true = complete sum
    std::vector<InducedPath> paths;     // the winning side's paths, largest target first
    int direct_stages = 0;
    int complete_stages = 0;
};

inline PathSumExtraction extract_path_sum(const Poset& p, std::vector<int> targets) {
    if (targets.empty()) throw std::invalid_argument("needs at least one target length");
    for (int t : targets)
        if (t < 0) throw std::invalid_argument("target lengths must be >= 0");
    std::sort(targets.rbegin(), targets.rend());

    PathSumExtraction out;
    std::vector<int> want_direct = targets, want_complete = targets;
    std::vector<InducedPath> got_direct, got_complete;
    std::vector<int> domain(size_t(p.size()));
    for (int v = 0; v < p.size(); ++v) domain[size_t(v)] = v;

    while (!want_direct.empty() && !want_complete.empty()) {
        const int hi = std::max(want_direct.front(), want_complete.front());
        const int lo = std::min(want_direct.front(), want_complete.front());
        auto ub = extract_uniform_block(p, domain, hi);
        if (!ub && lo != hi) ub = extract_uniform_block(p, domain, lo);
        if (!ub) break;
        if (ub->vacuous) {
            // nothing left beyond the carrier: both modes hold vacuously, so
            // serve the side this stage can finish, if any
            auto finishes = [&](const std::vector<int>& want) {
                return want.size() == 1 && want.front() <= ub->path.length();
            };
            ub->adjacent = finishes(want_complete) && !finishes(want_direct);
        }
        auto& want = ub->adjacent ? want_complete : want_direct;
        auto& got = ub->adjacent ? got_complete : got_direct;
        (ub->adjacent ? out.complete_stages : out.direct_stages)++;
        // serve the largest still-wanted target that fits this stage's path
        auto it = std::find_if(want.begin(), want.end(),
                               [&](int t) { return t <= ub->path.length(); });
        if (it != want.end()) {
            const int t = *it;
            want.erase(it);
            InducedPath trimmed;
            trimmed.vertices.assign(ub->path.vertices.begin(),
                                    ub->path.vertices.begin() + t + 1);
            got.push_back(std::move(trimmed));
        }
        domain = ub->block;
        if (domain.empty()) break;
    }

    if (want_direct.empty()) {
        out.achieved = true;
        out.complete_mode = false;
        out.paths = std::move(got_direct);
    } else if (want_complete.empty()) {
        out.achieved = true;
        out.complete_mode = true;
        out.paths = std::move(got_complete);
    } else {
        // report the deeper side reached
        out.paths = got_direct.size() >= got_complete.size() ? std::move(got_direct)
                                                             : std::move(got_complete);
    }

    // independent verification of the returned family
    LabelledGraph inc = incomparability_graph(p);
    for (const auto& path : out.paths)
        if (!is_induced_path(inc, path.vertices))
            throw std::logic_error("extracted path is not induced");
    if (out.achieved) {
        for (size_t a = 0; a < out.paths.size(); ++a)
            for (size_t b = a + 1; b < out.paths.size(); ++b)
                for (int v : out.paths[a].vertices)
                    for (int w : out.paths[b].vertices)
                        if (inc.adjacent(v, w) != *out.complete_mode)
                            throw std::logic_error("cross-pair adjacency is not uniform");
    }
    return out;
}

// Greedy isometric extraction: each new path is a clipped geodesic between
// a farthest pair lying outside the ball of radius target+1 around what was
// already taken, which keeps it isometric in the whole graph and at
// distance >= 2 from the earlier paths.
struct IsometricExtraction {
    bool achieved = false;
    std::vector<InducedPath> paths;  // largest target first
};

inline IsometricExtraction extract_isometric_path_sum(const LabelledGraph& g,
                                                      std::vector<int> targets) {
    if (targets.empty()) throw std::invalid_argument("needs at least one target length");
    for (int t : targets)
        if (t < 1) throw std::invalid_argument("target lengths must be >= 1");
    std::sort(targets.rbegin(), targets.rend());

    IsometricExtraction out;
    std::vector<int> taken;
    for (int t : targets) {
        Bitset blocked(g.size());
        if (!taken.empty())
            for (int v : ball(g, taken, t + 1)) blocked.set(v);
        int bx = -1, by = -1, bd = -1;
        for (int x = 0; x < g.size(); ++x) {
            if (blocked.test(x)) continue;
            auto d = bfs_distances(g, {x});
            for (int y = 0; y < g.size(); ++y) {
                if (blocked.test(y) || d[size_t(y)] == kUnreachable) continue;
                if (d[size_t(y)] > bd) {
                    bd = d[size_t(y)];
                    bx = x;
                    by = y;
                }
            }
        }
        if (bd < t) return out;  // not enough room left: report the achieved prefix

        // geodesic by parent-walk from the far end, smallest parent first
        auto dist = bfs_distances(g, {bx});
        std::vector<int> geo{by};
        while (geo.back() != bx) {
            int cur = geo.back();
            int next = -1;
            for (int w = g.neighbours(cur).find_first(); w >= 0;
                 w = g.neighbours(cur).find_next(w))
                if (dist[size_t(w)] == dist[size_t(cur)] - 1) {
                    next = w;
                    break;
                }
            geo.push_back(next);
        }
        std::reverse(geo.begin(), geo.end());  // bx .. by
        geo.resize(size_t(t) + 1);             // prefix of a geodesic is a geodesic

        if (!isometric_check(g, geo)) throw std::logic_error("clipped geodesic not isometric");
        for (int v : geo) taken.push_back(v);
        out.paths.push_back(InducedPath{geo});
    }
    out.achieved = true;
    return out;
}

// Random poset: sample pairs oriented by a random linear order, close
// transitively. Deterministic in the seed.
inline Poset random_poset(int n, double density, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<int> order(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) order[size_t(i)] = i;
    std::shuffle(order.begin(), order.end(), rng);
    std::bernoulli_distribution flip(density);
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (flip(rng)) pairs.emplace_back(order[size_t(i)], order[size_t(j)]);
    return Poset(n, pairs);
}

}  // namespace lexpath
