#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "lexpath/star.hpp"

namespace lexpath {

// A finite block of symbols over {0..k-1} plus a record of how it was made.
// Values are immutable once built; every operation takes them by const ref.
struct Word {
    std::vector<uint8_t> symbols;
    int alphabet_size = 2;
    std::string provenance;

    long size() const { return long(symbols.size()); }
    uint8_t operator[](long i) const { return symbols[size_t(i)]; }

    bool is_binary() const { return alphabet_size == 2; }
    bool is_constant() const {
        return std::adjacent_find(symbols.begin(), symbols.end(),
                                  std::not_equal_to<>()) == symbols.end();
    }

    // digit rendering caps the alphabet at ten letters
    std::string to_string() const {
        if (alphabet_size > 10)
            throw std::invalid_argument("digit rendering needs alphabet_size <= 10");
        std::string s;
        s.reserve(symbols.size());
        for (auto c : symbols) s.push_back(char('0' + c));
        return s;
    }

    bool operator==(const Word& o) const {
        return symbols == o.symbols && alphabet_size == o.alphabet_size;
    }
};

inline Word make_word(const std::string& digits, int alphabet_size = 0,
                      std::string provenance = "explicit") {
    if (digits.empty()) throw std::invalid_argument("word must be non-empty");
    Word w;
    w.provenance = std::move(provenance);
    int top = 0;
    for (char c : digits) {
        if (c < '0' || c > '9') throw std::invalid_argument("word digits must be 0-9");
        w.symbols.push_back(uint8_t(c - '0'));
        top = std::max(top, c - '0');
    }
    w.alphabet_size = alphabet_size > 0 ? alphabet_size : std::max(2, top + 1);
    if (top >= w.alphabet_size) throw std::invalid_argument("symbol exceeds alphabet size");
    return w;
}

// symbols[n] = n mod k
inline Word periodic_word(int k, long length) {
    if (k < 2) throw std::invalid_argument("periodic word needs k >= 2");
    if (length < 1) throw std::invalid_argument("length must be >= 1");
    Word w;
    w.alphabet_size = k;
    w.provenance = "periodic:k=" + std::to_string(k);
    w.symbols.resize(size_t(length));
    for (long n = 0; n < length; ++n) w.symbols[size_t(n)] = uint8_t(n % k);
    return w;
}

struct SturmianDirective {
    std::vector<int> partial_quotients;  // a_1, a_2, ...; all >= 1
};

namespace detail {
// Standard-word recursion s_{-1} = 1, s_0 = 0, s_n = s_{n-1}^{a_n} s_{n-2}.
// Each s_n is a prefix of the next, so a prefix is independent of how the
// directive would continue. Integer-only on purpose: a floating-point slope
// drifts on long prefixes.
inline std::string standard_word(const SturmianDirective& d, long min_length,
                                 bool stop_at_exhaustion) {
    if (d.partial_quotients.empty())
        throw std::invalid_argument("sturmian directive must be non-empty");
    for (int a : d.partial_quotients)
        if (a < 1) throw std::invalid_argument("sturmian directive entries must be >= 1");
    std::string prev = "1", cur = "0";
    size_t used = 0;
    while (long(cur.size()) < min_length) {
        if (used == d.partial_quotients.size()) {
            if (stop_at_exhaustion) break;
            throw std::invalid_argument(
                "sturmian directive exhausted at length " + std::to_string(cur.size()) +
                "; extend the continued-fraction directive to reach length " +
                std::to_string(min_length));
        }
        int a = d.partial_quotients[used++];
        std::string next;
        next.reserve(cur.size() * size_t(a) + prev.size());
        for (int i = 0; i < a; ++i) next += cur;
        next += prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

inline std::string sturmian_spec(const SturmianDirective& d) {
    std::string spec = "sturmian:cf=";
    for (size_t i = 0; i < d.partial_quotients.size(); ++i) {
        if (i) spec += ',';
        spec += std::to_string(d.partial_quotients[i]);
    }
    return spec;
}
}  // namespace detail

inline Word sturmian_word(const SturmianDirective& d, long min_length) {
    if (min_length < 1) throw std::invalid_argument("min_length must be >= 1");
    std::string s = detail::standard_word(d, min_length, false);
    return make_word(s.substr(0, size_t(min_length)), 2, detail::sturmian_spec(d));
}

// The longest prefix the directive can pin down, capped. Used where a
// generous prefix is wanted but the directive's reach is acceptable.
inline Word sturmian_word_longest(const SturmianDirective& d, long cap) {
    std::string s = detail::standard_word(d, cap, true);
    if (long(s.size()) > cap) s.resize(size_t(cap));
    return make_word(s, 2, detail::sturmian_spec(d));
}

inline Word complement(const Word& u) {
    if (!u.is_binary()) throw std::invalid_argument("complement needs a binary word");
    Word w = u;
    for (auto& c : w.symbols) c ^= 1;
    w.provenance = "complemented(" + u.provenance + ")";
    return w;
}

inline Word reversed(const Word& u) {
    Word w = u;
    std::reverse(w.symbols.begin(), w.symbols.end());
    w.provenance = "reversed(" + u.provenance + ")";
    return w;
}

// Longest runs (l0, l1) of the two letters in a binary non-constant word.
// Computed on the given prefix, so they are lower bounds for the runs of the
// generating infinite word.
inline std::pair<int, int> run_lengths(const Word& u) {
    if (!u.is_binary()) throw std::invalid_argument("run_lengths needs a binary word");
    if (u.is_constant())
        throw std::invalid_argument("run_lengths is undefined for constant words");
    int best[2] = {0, 0};
    long i = 0;
    while (i < u.size()) {
        long j = i;
        while (j < u.size() && u[j] == u[i]) ++j;
        best[u[i]] = std::max(best[u[i]], int(j - i));
        i = j;
    }
    return {best[0], best[1]};
}

// Path-locality threshold: 2(l+1)+1 with l the longest run, except 6 for the
// alternating word (no 00 and no 11 in the prefix).
inline int locality_threshold(const Word& u) {
    auto [l0, l1] = run_lengths(u);
    if (l0 == 1 && l1 == 1) return 6;
    return 2 * (std::max(l0, l1) + 1) + 1;
}

struct FactorSet {
    int max_len = 0;
    long source_length = 0;
    std::vector<std::set<std::string>> levels;  // levels[n-1] = distinct length-n blocks

    const std::set<std::string>& level(int n) const { return levels[size_t(n - 1)]; }
};

inline FactorSet factor_set(const Word& u, int max_len) {
    if (max_len < 1 || long(max_len) > u.size())
        throw std::invalid_argument("factor length must be in 1..|u|");
    FactorSet f;
    f.max_len = max_len;
    f.source_length = u.size();
    f.levels.resize(size_t(max_len));
    const std::string s = u.to_string();
    for (int n = 1; n <= max_len; ++n)
        for (size_t i = 0; i + size_t(n) <= s.size(); ++i)
            f.levels[size_t(n - 1)].insert(s.substr(i, size_t(n)));
    return f;
}

// Contiguous occurrence; the empty word is a factor of everything.
inline bool is_factor(const Word& v, const Word& u) {
    if (v.symbols.empty()) return true;
    if (v.alphabet_size != u.alphabet_size)
        throw std::invalid_argument("is_factor needs matching alphabets");
    return std::search(u.symbols.begin(), u.symbols.end(),
                       v.symbols.begin(), v.symbols.end()) != u.symbols.end();
}

// Subsequence embedding with equal letters (Higman's subword order over a
// trivially ordered alphabet). Greedy matching is exact for this order.
inline bool is_subword(const Word& v, const Word& u) {
    if (v.alphabet_size != u.alphabet_size)
        throw std::invalid_argument("is_subword needs matching alphabets");
    size_t i = 0;
    for (size_t j = 0; j < u.symbols.size() && i < v.symbols.size(); ++j)
        if (u.symbols[j] == v.symbols[i]) ++i;
    return i == v.symbols.size();
}

// Smallest m <= |u|/2 such that every length-n factor of u occurs in every
// length-m window of u; nullopt when no such m exists in the scanned prefix.
// For each factor, the binding constraints are its first occurrence, the
// largest gap between consecutive occurrences, and the tail after the last.
inline std::optional<long> recurrence_bound(const Word& u, int n) {
    if (n < 1) throw std::invalid_argument("recurrence_bound needs n >= 1");
    if (long(n) > u.size() / 4)
        throw std::invalid_argument("recurrence_bound needs n <= |u|/4");
    const std::string s = u.to_string();
    std::set<std::string> factors;
    for (size_t i = 0; i + size_t(n) <= s.size(); ++i) factors.insert(s.substr(i, size_t(n)));
    long needed = n;
    for (const auto& f : factors) {
        std::vector<long> occ;
        for (size_t i = 0; i + f.size() <= s.size(); ++i)
            if (s.compare(i, f.size(), f) == 0) occ.push_back(long(i));
        long m = occ.front() + n;  // window starting at 0
        for (size_t i = 1; i < occ.size(); ++i)
            m = std::max(m, occ[i] - occ[i - 1] + n - 1);  // windows in the gap
        m = std::max(m, u.size() - occ.back());  // window ending at |u|
        needed = std::max(needed, m);
    }
    if (needed > u.size() / 2) return std::nullopt;
    return needed;
}

namespace detail {
inline std::set<std::string> reversed_level(const std::set<std::string>& lv) {
    std::set<std::string> r;
    for (auto w : lv) {
        std::reverse(w.begin(), w.end());
        r.insert(std::move(w));
    }
    return r;
}
inline std::set<std::string> complemented_level(const std::set<std::string>& lv) {
    std::set<std::string> r;
    for (auto w : lv) {
        for (auto& c : w) c = (c == '0' ? '1' : '0');
        r.insert(std::move(w));
    }
    return r;
}
}  // namespace detail

// Level-by-level equality of A with one of B, B reversed, B complemented,
// B reversed-and-complemented. Binary only; a prefix-level verdict, not a
// statement about infinite ages.
inline bool ages_equivalent(const FactorSet& a, const FactorSet& b) {
    if (a.max_len != b.max_len)
        throw std::invalid_argument("ages_equivalent needs equal max_len");
    for (const FactorSet* f : {&a, &b})
        for (const auto& w : f->level(1))
            if (w != "0" && w != "1")
                throw std::invalid_argument("ages_equivalent is defined for binary words");
    auto matches = [&](auto transform) {
        for (int n = 1; n <= a.max_len; ++n)
            if (a.level(n) != transform(b.level(n))) return false;
        return true;
    };
    auto id = [](const std::set<std::string>& lv) { return lv; };
    return matches(id) || matches(detail::reversed_level) ||
           matches(detail::complemented_level) ||
           matches([](const std::set<std::string>& lv) {
               return detail::complemented_level(detail::reversed_level(lv));
           });
}

// All words readable as the cross-row adjacency trace of an external vertex
// along a component path: { i * w }, { w * i } for factors w and letters i,
// closed under reversal (a path can be traversed either way).
inline FactorSet trace_language(const Word& u, const StarTable& star, int max_len) {
    if (u.alphabet_size != star.k)
        throw std::invalid_argument("trace_language needs word and star on the same alphabet");
    FactorSet base = factor_set(u, max_len);
    FactorSet out;
    out.max_len = max_len;
    out.source_length = u.size();
    out.levels.resize(size_t(max_len));
    for (int n = 1; n <= max_len; ++n) {
        auto& lv = out.levels[size_t(n - 1)];
        for (const auto& w : base.level(n)) {
            for (int i = 0; i < star.k; ++i) {
                std::string left(w.size(), '0'), right(w.size(), '0');
                for (size_t p = 0; p < w.size(); ++p) {
                    left[p] = char('0' + star.op(i, w[p] - '0'));
                    right[p] = char('0' + star.op(w[p] - '0', i));
                }
                std::string left_r(left.rbegin(), left.rend());
                std::string right_r(right.rbegin(), right.rend());
                lv.insert(std::move(left));
                lv.insert(std::move(right));
                lv.insert(std::move(left_r));
                lv.insert(std::move(right_r));
            }
        }
    }
    return out;
}

inline SturmianDirective parse_sturmian_directive(const std::string& spec) {
    SturmianDirective d;
    std::string v = spec.substr(12);
    size_t start = 0;
    while (start <= v.size()) {
        size_t comma = v.find(',', start);
        std::string part = v.substr(start, comma == std::string::npos ? comma : comma - start);
        if (part.empty()) throw std::invalid_argument("bad word spec: " + spec);
        d.partial_quotients.push_back(std::stoi(part));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return d;
}

// periodic:k=K | sturmian:cf=A1,A2,... | explicit:DIGITS
inline Word parse_word_spec(const std::string& spec, long min_length) {
    if (spec.rfind("periodic:k=", 0) == 0) {
        size_t pos = 0;
        std::string v = spec.substr(11);
        long k = std::stol(v, &pos);
        if (pos != v.size()) throw std::invalid_argument("bad word spec: " + spec);
        return periodic_word(int(k), min_length);
    }
    if (spec.rfind("sturmian:cf=", 0) == 0)
        return sturmian_word(parse_sturmian_directive(spec), min_length);
    if (spec.rfind("explicit:", 0) == 0) {
        Word w = make_word(spec.substr(9), 0, spec);
        if (w.size() < min_length)
            throw std::invalid_argument("explicit word shorter than the requested length");
        return w;
    }
    throw std::invalid_argument("unknown word spec: " + spec);
}

// Threshold computed from a prefix long enough for the runs to have
// stabilised, taken here as at least 16 * l(u). One period decides a
// periodic word exactly; a sturmian directive is stretched to its longest
// reachable prefix (capped) before the margin check.
inline int stable_locality_threshold(const std::string& word_spec) {
    Word u = [&]() {
        if (word_spec.rfind("periodic:k=", 0) == 0) return parse_word_spec(word_spec, 64);
        if (word_spec.rfind("sturmian:cf=", 0) == 0)
            return sturmian_word_longest(parse_sturmian_directive(word_spec), 4096);
        return parse_word_spec(word_spec, 1);
    }();
    if (word_spec.rfind("periodic:k=", 0) == 0) return locality_threshold(u);
    int l = std::max(run_lengths(u).first, run_lengths(u).second);
    if (16L * l > u.size())
        throw std::invalid_argument("prefix too short for stable runs; extend " + word_spec);
    return locality_threshold(u);
}

}  // namespace lexpath
