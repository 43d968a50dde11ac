#pragma once

#include <cstdint>
#include <vector>

namespace lexpath {

// Word-packed bit vector sized at construction. Used for adjacency rows and
// the banned-sets of the path/embedding searches.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int n) : n_(n), w_((n + 63) / 64, 0) {}

    int size() const { return n_; }
    void set(int i) { w_[i >> 6] |= uint64_t{1} << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    void clear() { for (auto& w : w_) w = 0; }

    Bitset& operator|=(const Bitset& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    Bitset& operator&=(const Bitset& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    Bitset and_not(const Bitset& o) const {
        Bitset r(n_);
        for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] & ~o.w_[i];
        return r;
    }

    int count() const {
        int c = 0;
        for (auto w : w_) c += __builtin_popcountll(w);
        return c;
    }
    bool any() const {
        for (auto w : w_) if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    bool is_subset_of(const Bitset& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    // -1 when exhausted
    int find_first() const { return find_from(0); }
    int find_next(int i) const { return find_from(i + 1); }

    std::vector<int> to_vector() const {
        std::vector<int> v;
        for (int i = find_first(); i >= 0; i = find_next(i)) v.push_back(i);
        return v;
    }

    bool operator==(const Bitset& o) const = default;

private:
    int find_from(int i) const {
        if (i >= n_) return -1;
        size_t blk = i >> 6;
        uint64_t w = w_[blk] >> (i & 63);
        if (w) return i + __builtin_ctzll(w);
        for (++blk; blk < w_.size(); ++blk)
            if (w_[blk]) return int(blk << 6) + __builtin_ctzll(w_[blk]);
        return -1;
    }

    int n_ = 0;
    std::vector<uint64_t> w_;
};

}  // namespace lexpath
