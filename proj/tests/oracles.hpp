#pragma once

// Test-only oracles. Everything here recomputes expected values through an
// independent route (morphism fixed points, exact rational slopes, brute
// force over subsets/injections) and must stay decoupled from the library
// implementations it checks.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lexpath/graph.hpp"
#include "lexpath/poset.hpp"

namespace oracles {

// Fixed point of 0 -> 01, 1 -> 0.
inline std::string morphism_word(long n) {
    std::string s = "0";
    while (long(s.size()) < n) {
        std::string t;
        t.reserve(s.size() * 2);
        for (char c : s) t += (c == '0') ? "01" : "0";
        s = std::move(t);
    }
    return s.substr(0, size_t(n));
}

// Characteristic word of the rational slope p/q: c(n) = floor((n+2)p/q) -
// floor((n+1)p/q). Valid as a prefix oracle while n + 2 < q.
inline std::string characteristic_by_slope(long long p, long long q, long n) {
    std::string s;
    for (long k = 0; k < n; ++k)
        s.push_back(char('0' + ((k + 2) * p / q - (k + 1) * p / q)));
    return s;
}

// Exact value p/q of the finite continued fraction [0; b1, b2, ..., bm],
// via the standard convergent recurrence for [b1; b2, ..., bm] = h/k.
inline std::pair<long long, long long> convergent(const std::vector<int>& b) {
    long long h = b.front(), hm = 1, k = 1, km = 0;
    for (size_t i = 1; i < b.size(); ++i) {
        long long hn = b[i] * h + hm, kn = b[i] * k + km;
        hm = h;
        h = hn;
        km = k;
        k = kn;
    }
    return {k, h};
}

// Exhaustive subsequence check by bitmask, |u| <= 20.
inline bool subsequence_brute(const std::string& v, const std::string& u) {
    const int n = int(u.size());
    for (uint32_t mask = 0; mask < (uint32_t(1) << n); ++mask) {
        if (__builtin_popcount(mask) != int(v.size())) continue;
        std::string picked;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1) picked.push_back(u[size_t(i)]);
        if (picked == v) return true;
    }
    return v.empty();
}

// All-injections induced-embedding oracle (pattern small, host <= ~10).
inline bool embedding_exists_brute(const lexpath::LabelledGraph& pattern,
                                   const lexpath::LabelledGraph& host, bool labels) {
    const int np = pattern.size(), nh = host.size();
    if (np > nh) return false;
    std::vector<int> map(size_t(np), -1);
    std::vector<char> used(size_t(nh), 0);
    std::function<bool(int)> rec = [&](int v) -> bool {
        if (v == np) return true;
        for (int h = 0; h < nh; ++h) {
            if (used[size_t(h)]) continue;
            if (labels && pattern.label(v) != host.label(h)) continue;
            bool ok = true;
            for (int q = 0; q < v && ok; ++q)
                ok = pattern.adjacent(v, q) == host.adjacent(h, map[size_t(q)]);
            if (!ok) continue;
            used[size_t(h)] = 1;
            map[size_t(v)] = h;
            if (rec(v + 1)) return true;
            used[size_t(h)] = 0;
        }
        return false;
    };
    return rec(0);
}

// Longest induced path by brute force over vertex subsets (n <= ~15).
inline int detour_brute(const lexpath::LabelledGraph& g) {
    const int n = g.size();
    int best = 0;
    for (uint32_t mask = 1; mask < (uint32_t(1) << n); ++mask) {
        std::vector<int> vs;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1) vs.push_back(i);
        std::sort(vs.begin(), vs.end());
        do {
            if (lexpath::is_induced_path(g, vs)) {
                best = std::max(best, int(vs.size()) - 1);
                break;
            }
        } while (std::next_permutation(vs.begin(), vs.end()));
    }
    return best;
}

// Count induced paths with exactly `len` edges by subset + permutation brute
// force, counting each undirected path once.
inline long count_induced_paths_brute(const lexpath::LabelledGraph& g, int len) {
    const int n = g.size();
    long count = 0;
    std::vector<int> vs;
    std::function<void(int)> pick = [&](int from) {
        if (int(vs.size()) == len + 1) {
            std::vector<int> perm = vs;
            std::sort(perm.begin(), perm.end());
            do {
                if (perm.front() < perm.back() && lexpath::is_induced_path(g, perm)) ++count;
            } while (std::next_permutation(perm.begin(), perm.end()));
            return;
        }
        for (int v = from; v < n; ++v) {
            vs.push_back(v);
            pick(v + 1);
            vs.pop_back();
        }
    };
    pick(0);
    return count;
}

// No proper subset of M containing {a, b} is a module (brute force, |M| <= 20).
inline bool pair_module_is_minimal_brute(const lexpath::LabelledGraph& g,
                                         const std::vector<int>& m, int a, int b) {
    const int k = int(m.size());
    if (k > 20) return true;  // out of brute-force range, caller decides
    for (uint32_t mask = 0; mask < (uint32_t(1) << k); ++mask) {
        if (__builtin_popcount(mask) == k || __builtin_popcount(mask) < 2) continue;
        std::vector<int> sub;
        bool has_a = false, has_b = false;
        for (int i = 0; i < k; ++i)
            if (mask >> i & 1) {
                sub.push_back(m[size_t(i)]);
                has_a |= m[size_t(i)] == a;
                has_b |= m[size_t(i)] == b;
            }
        if (has_a && has_b && lexpath::is_module(g, sub)) return false;
    }
    return true;
}

// All posets on n elements up to isomorphism: grow by adding a maximal
// element over every down-set, dedupe by the minimum strict-matrix code over
// all permutations. Counts for n = 1..7: 1, 2, 5, 16, 63, 318, 2045.
inline uint64_t poset_code(const lexpath::Poset& p) {
    const int n = p.size();
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    uint64_t best = ~uint64_t{0};
    do {
        uint64_t code = 0;
        int bit = 0;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                if (a == b) continue;
                if (p.less(perm[size_t(a)], perm[size_t(b)])) code |= uint64_t{1} << bit;
                ++bit;
            }
        best = std::min(best, code);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

inline std::vector<lexpath::Poset> poset_catalog(int max_n) {
    std::vector<lexpath::Poset> out;
    std::vector<lexpath::Poset> level = {lexpath::Poset(1, {})};
    out.push_back(level.front());
    for (int n = 2; n <= max_n; ++n) {
        std::set<uint64_t> seen;
        std::vector<lexpath::Poset> next;
        for (const auto& p : level) {
            const int m = p.size();
            for (uint32_t mask = 0; mask < (uint32_t(1) << m); ++mask) {
                // the new maximal element sits above a down-closed set
                bool down_closed = true;
                for (int b = 0; b < m && down_closed; ++b) {
                    if (!(mask >> b & 1)) continue;
                    for (int a = 0; a < m && down_closed; ++a)
                        if (p.less(a, b) && !(mask >> a & 1)) down_closed = false;
                }
                if (!down_closed) continue;
                auto pairs = p.strict_pairs();
                for (int a = 0; a < m; ++a)
                    if (mask >> a & 1) pairs.emplace_back(a, m);
                lexpath::Poset q(m + 1, pairs);
                if (seen.insert(poset_code(q)).second) next.push_back(std::move(q));
            }
        }
        for (const auto& q : next) out.push_back(q);
        level = std::move(next);
    }
    return out;
}

// Ordinal stack of "path posets": summand s has inc-path length L_s (on
// L_s + 1 elements ordered by i < j iff j >= i + 2), and every element of an
// earlier summand lies below every element of a later one. Its
// incomparability graph is the disjoint union of the paths.
inline lexpath::Poset ordinal_path_stack(const std::vector<int>& inc_path_lengths) {
    std::vector<std::pair<int, int>> pairs;
    std::vector<std::pair<int, int>> ranges;
    int off = 0;
    for (int len : inc_path_lengths) {
        const int sz = len + 1;
        for (int i = 0; i < sz; ++i)
            for (int j = i + 2; j < sz; ++j) pairs.emplace_back(off + i, off + j);
        ranges.emplace_back(off, off + sz);
        off += sz;
    }
    for (size_t s = 0; s < ranges.size(); ++s)
        for (size_t t = s + 1; t < ranges.size(); ++t)
            for (int a = ranges[s].first; a < ranges[s].second; ++a)
                for (int b = ranges[t].first; b < ranges[t].second; ++b)
                    pairs.emplace_back(a, b);
    return lexpath::Poset(off, pairs);
}

// Parallel (side-by-side) version: incomparability graph is the complete sum
// of the paths.
inline lexpath::Poset parallel_path_stack(const std::vector<int>& inc_path_lengths) {
    std::vector<std::pair<int, int>> pairs;
    int off = 0;
    for (int len : inc_path_lengths) {
        const int sz = len + 1;
        for (int i = 0; i < sz; ++i)
            for (int j = i + 2; j < sz; ++j) pairs.emplace_back(off + i, off + j);
        off += sz;
    }
    return lexpath::Poset(off, pairs);
}

}  // namespace oracles
