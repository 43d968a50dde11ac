#pragma once

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace lexpath {

// A k-by-k table over {0,1} deciding cross-row adjacency: two vertices in
// different rows with labels i (lower row) and j (higher row) are adjacent
// iff op(i, j) == 1.
struct StarTable {
    int k = 2;
    std::vector<uint8_t> t;  // row-major, k*k entries in {0,1}

    uint8_t op(int i, int j) const { return t[i * k + j]; }

    bool operator==(const StarTable& o) const = default;
};

inline StarTable make_star(int k, std::vector<uint8_t> entries) {
    if (k < 1 || entries.size() != size_t(k) * size_t(k))
        throw std::invalid_argument("star table must have k*k entries");
    for (auto e : entries)
        if (e > 1) throw std::invalid_argument("star table entries must be 0 or 1");
    return StarTable{k, std::move(entries)};
}

inline StarTable boolean_sum_table() { return make_star(2, {0, 1, 1, 0}); }

enum class Projection { First, Second };

inline StarTable projection_table(Projection which) {
    return which == Projection::First ? make_star(2, {0, 0, 1, 1})
                                      : make_star(2, {0, 1, 0, 1});
}

// Zero diagonal, one elsewhere: adjacency across rows iff labels differ.
inline StarTable congruence_table(int k) {
    if (k < 2) throw std::invalid_argument("congruence table needs k >= 2");
    std::vector<uint8_t> t(size_t(k) * k, 1);
    for (int i = 0; i < k; ++i) t[i * k + i] = 0;
    return StarTable{k, std::move(t)};
}

inline StarTable constant_table(int k, int v) {
    if (v != 0 && v != 1) throw std::invalid_argument("constant table value must be 0 or 1");
    return StarTable{k, std::vector<uint8_t>(size_t(k) * k, uint8_t(v))};
}

// Transpose: (i, j) -> op(j, i).
inline StarTable dual_table(const StarTable& s) {
    StarTable r{s.k, std::vector<uint8_t>(s.t.size())};
    for (int i = 0; i < s.k; ++i)
        for (int j = 0; j < s.k; ++j) r.t[i * s.k + j] = s.op(j, i);
    return r;
}

// Binary only: (i, j) -> op(1-i, 1-j).
inline StarTable conjugate_table(const StarTable& s) {
    if (s.k != 2) throw std::invalid_argument("conjugate table is defined for binary alphabets");
    StarTable r{2, std::vector<uint8_t>(4)};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r.t[i * 2 + j] = s.op(1 - i, 1 - j);
    return r;
}

// The path-locality bound applies to the boolean sum and to anything that
// turns into the second projection under dual/conjugate. Everything else is
// reported as experimental.
inline bool covered_by_locality_bound(const StarTable& s) {
    if (s.k != 2) return false;
    if (s == boolean_sum_table()) return true;
    const StarTable p2 = projection_table(Projection::Second);
    for (const StarTable& v : {s, dual_table(s), conjugate_table(s),
                               dual_table(conjugate_table(s))})
        if (v == p2) return true;
    return false;
}

// Spec strings: boolean_sum | proj1 | proj2 | congruence:K | zero:K | one:K |
// table:BITS (row-major, k inferred from the length).
inline StarTable parse_star_spec(const std::string& spec) {
    if (spec == "boolean_sum") return boolean_sum_table();
    if (spec == "proj1") return projection_table(Projection::First);
    if (spec == "proj2") return projection_table(Projection::Second);
    auto num_after = [&](const std::string& prefix) -> long {
        std::string v = spec.substr(prefix.size());
        size_t pos = 0;
        long n = std::stol(v, &pos);
        if (pos != v.size()) throw std::invalid_argument("bad star spec: " + spec);
        return n;
    };
    if (spec.rfind("congruence:", 0) == 0) return congruence_table(int(num_after("congruence:")));
    if (spec.rfind("zero:", 0) == 0) return constant_table(int(num_after("zero:")), 0);
    if (spec.rfind("one:", 0) == 0) return constant_table(int(num_after("one:")), 1);
    if (spec.rfind("table:", 0) == 0) {
        std::string bits = spec.substr(6);
        int k = 1;
        while (k * k < int(bits.size())) ++k;
        if (k * k != int(bits.size()))
            throw std::invalid_argument("table spec length must be a perfect square");
        std::vector<uint8_t> t;
        for (char c : bits) {
            if (c != '0' && c != '1') throw std::invalid_argument("table spec must be 0/1 digits");
            t.push_back(uint8_t(c - '0'));
        }
        return make_star(k, std::move(t));
    }
    throw std::invalid_argument("unknown star spec: " + spec);
}

inline std::string star_spec_string(const StarTable& s) {
    if (s == boolean_sum_table()) return "boolean_sum";
    if (s.k == 2 && s == projection_table(Projection::First)) return "proj1";
    if (s.k == 2 && s == projection_table(Projection::Second)) return "proj2";
    if (s.k >= 2 && s == congruence_table(s.k)) return "congruence:" + std::to_string(s.k);
    if (s == constant_table(s.k, 0)) return "zero:" + std::to_string(s.k);
    if (s == constant_table(s.k, 1)) return "one:" + std::to_string(s.k);
    std::ostringstream os;
    os << "table:";
    for (auto e : s.t) os << int(e);
    return os.str();
}

}  // namespace lexpath
