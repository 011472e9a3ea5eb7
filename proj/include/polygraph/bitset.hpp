#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace polygraph {

// Dynamic bitset over 0..size-1. Small and value-comparable so it can key maps.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    std::size_t size() const { return n_; }

    void set(std::size_t i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1U; }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : w_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool none() const {
        for (auto w : w_)
            if (w) return false;
        return true;
    }
    bool any() const { return !none(); }

    bool is_subset_of(const Bitset& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }
    bool intersects(const Bitset& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    Bitset& operator&=(const Bitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    Bitset& subtract(const Bitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }
    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

    // first set bit >= from, or size() if none
    std::size_t next(std::size_t from) const {
        if (from >= n_) return n_;
        std::size_t wi = from >> 6;
        std::uint64_t w = w_[wi] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (w) {
                std::size_t r = (wi << 6) + static_cast<std::size_t>(std::countr_zero(w));
                return r < n_ ? r : n_;
            }
            if (++wi >= w_.size()) return n_;
            w = w_[wi];
        }
    }
    std::size_t first() const { return next(0); }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < w_.size(); ++i) {
            std::uint64_t w = w_[i];
            while (w) {
                f((i << 6) + static_cast<std::size_t>(std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for_each([&](std::size_t i) { out.push_back(static_cast<int>(i)); });
        return out;
    }

    template <class It>
    static Bitset of(std::size_t n, It first, It last) {
        Bitset b(n);
        for (; first != last; ++first) b.set(static_cast<std::size_t>(*first));
        return b;
    }
    template <class C>
    static Bitset of(std::size_t n, const C& c) {
        return of(n, std::begin(c), std::end(c));
    }

    bool operator==(const Bitset& o) const = default;
    // total order: the set holding the lowest differing element sorts first
    bool operator<(const Bitset& o) const {
        for (std::size_t i = 0; i < w_.size() && i < o.w_.size(); ++i) {
            if (w_[i] == o.w_[i]) continue;
            std::uint64_t diff = w_[i] ^ o.w_[i];
            std::uint64_t low = diff & (~diff + 1);
            return (w_[i] & low) != 0;
        }
        return w_.size() < o.w_.size();
    }

    std::size_t hash() const {
        std::size_t h = n_;
        for (auto w : w_) h = h * 0x9E3779B97F4A7C15ULL + std::hash<std::uint64_t>{}(w);
        return h;
    }

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

struct BitsetHash {
    std::size_t operator()(const Bitset& b) const { return b.hash(); }
};

}  // namespace polygraph
