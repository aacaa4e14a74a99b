#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>

namespace chromaroot {

// Fixed-capacity vertex set backed by three 64-bit words (192 vertices is
// plenty for everything this library enumerates or constructs).
struct VSet {
    static constexpr int kCapacity = 192;
    static constexpr int kWords = 3;

    std::array<std::uint64_t, kWords> w{};

    static VSet single(int v) {
        VSet s;
        s.set(v);
        return s;
    }

    // {0, 1, ..., n-1}
    static VSet first_n(int n) {
        VSet s;
        for (int i = 0; i < kWords; ++i) {
            int lo = i * 64;
            if (n <= lo) break;
            int bits = n - lo >= 64 ? 64 : n - lo;
            s.w[i] = bits == 64 ? ~std::uint64_t(0) : ((std::uint64_t(1) << bits) - 1);
        }
        return s;
    }

    bool test(int v) const { return (w[v >> 6] >> (v & 63)) & 1; }
    void set(int v) { w[v >> 6] |= std::uint64_t(1) << (v & 63); }
    void reset(int v) { w[v >> 6] &= ~(std::uint64_t(1) << (v & 63)); }

    bool empty() const { return (w[0] | w[1] | w[2]) == 0; }

    int count() const {
        return std::popcount(w[0]) + std::popcount(w[1]) + std::popcount(w[2]);
    }

    // Smallest element, or -1 if empty.
    int first() const {
        for (int i = 0; i < kWords; ++i)
            if (w[i]) return i * 64 + std::countr_zero(w[i]);
        return -1;
    }

    // Smallest element > v, or -1 if none.
    int next(int v) const {
        ++v;
        int i = v >> 6;
        if (i >= kWords) return -1;
        std::uint64_t word = w[i] & (~std::uint64_t(0) << (v & 63));
        while (true) {
            if (word) return i * 64 + std::countr_zero(word);
            if (++i >= kWords) return -1;
            word = w[i];
        }
    }

    VSet operator&(const VSet& o) const {
        VSet s;
        for (int i = 0; i < kWords; ++i) s.w[i] = w[i] & o.w[i];
        return s;
    }
    VSet operator|(const VSet& o) const {
        VSet s;
        for (int i = 0; i < kWords; ++i) s.w[i] = w[i] | o.w[i];
        return s;
    }
    // Set difference.
    VSet minus(const VSet& o) const {
        VSet s;
        for (int i = 0; i < kWords; ++i) s.w[i] = w[i] & ~o.w[i];
        return s;
    }
    VSet& operator|=(const VSet& o) {
        for (int i = 0; i < kWords; ++i) w[i] |= o.w[i];
        return *this;
    }
    VSet& operator&=(const VSet& o) {
        for (int i = 0; i < kWords; ++i) w[i] &= o.w[i];
        return *this;
    }

    bool intersects(const VSet& o) const {
        return ((w[0] & o.w[0]) | (w[1] & o.w[1]) | (w[2] & o.w[2])) != 0;
    }
    bool subset_of(const VSet& o) const {
        return (w[0] & ~o.w[0]) == 0 && (w[1] & ~o.w[1]) == 0 && (w[2] & ~o.w[2]) == 0;
    }

    auto operator<=>(const VSet&) const = default;
};

}  // namespace chromaroot
