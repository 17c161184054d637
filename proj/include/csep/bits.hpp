#pragma once

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace csep {

// Fixed-size bitset over 64-bit words; size is chosen at construction.
class Bits {
public:
    Bits() = default;
    explicit Bits(int n) : n_(n), w_((n + 63) / 64, 0) {}

    int size() const { return n_; }

    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(int i) { w_[i >> 6] |= uint64_t(1) << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }
    void clear() { std::fill(w_.begin(), w_.end(), uint64_t(0)); }

    void set_all() {
        std::fill(w_.begin(), w_.end(), ~uint64_t(0));
        trim();
    }

    int count() const {
        int c = 0;
        for (uint64_t x : w_) c += std::popcount(x);
        return c;
    }

    bool any() const {
        for (uint64_t x : w_)
            if (x) return true;
        return false;
    }
    bool none() const { return !any(); }

    bool subset_of(const Bits& o) const {
        assert(n_ == o.n_);
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    bool intersects(const Bits& o) const {
        assert(n_ == o.n_);
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    Bits& operator&=(const Bits& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    Bits& operator|=(const Bits& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    // this \ o
    Bits& andnot(const Bits& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }

    friend Bits operator&(Bits a, const Bits& b) { return a &= b; }
    friend Bits operator|(Bits a, const Bits& b) { return a |= b; }
    friend Bits minus(Bits a, const Bits& b) { return a.andnot(b); }

    Bits complemented() const {
        Bits r(*this);
        for (auto& x : r.w_) x = ~x;
        r.trim();
        return r;
    }

    bool operator==(const Bits&) const = default;

    // index of first set bit, -1 if none
    int first() const { return next(-1); }

    // first set index > i, -1 if none
    int next(int i) const {
        ++i;
        if (i >= n_) return -1;
        size_t word = i >> 6;
        uint64_t x = w_[word] >> (i & 63);
        if (x) return i + std::countr_zero(x);
        for (++word; word < w_.size(); ++word)
            if (w_[word]) return int(word * 64) + std::countr_zero(w_[word]);
        return -1;
    }

    template <class F>
    void for_each(F f) const {
        for (int i = first(); i >= 0; i = next(i)) f(i);
    }

private:
    void trim() {
        if (n_ & 63) w_.back() &= (uint64_t(1) << (n_ & 63)) - 1;
    }

    int n_ = 0;
    std::vector<uint64_t> w_;
};

}  // namespace csep
