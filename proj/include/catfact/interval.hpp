// interval.hpp
// Prime intervals with exact rational bounds, optionally under a k-th root.
// All membership decisions are pure integer arithmetic (cross-multiplication);
// floating point never enters a verdict. Doubles are for display only.
//
// Supported range: indexes n <= 10^8, prime powers p^k < 2n. Every exact
// comparison is then bounded by (2*10^8)^2 = 4*10^16, well inside uint64_t.
// Comparisons that would wrap are detected and reported instead.

#pragma once

#include <cstdint>
#include <stdexcept>

namespace catfact {

using u64 = std::uint64_t;

// Largest Catalan index the exact-arithmetic envelope is guaranteed for.
inline constexpr u64 kMaxIndex = 100'000'000;

inline u64 checked_mul(u64 a, u64 b) {
    u64 r = 0;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("catfact: exact comparison exceeds 64-bit range");
    return r;
}

inline u64 checked_pow(u64 m, unsigned k) {
    u64 r = 1;
    for (unsigned i = 0; i < k; ++i) r = checked_mul(r, m);
    return r;
}

// One endpoint of a prime interval: the value num/den, included when closed.
// No reduction to lowest terms is done or needed; comparisons cross-multiply.
// den == 0 encodes +infinity and is only meaningful as an upper bound.
struct RationalBound {
    u64 num = 0;
    u64 den = 1;
    bool closed = false;

    static constexpr RationalBound open(u64 num, u64 den = 1) { return {num, den, false}; }
    static constexpr RationalBound closed_at(u64 num, u64 den = 1) { return {num, den, true}; }
    static constexpr RationalBound infinite() { return {1, 0, false}; }

    bool is_infinite() const { return den == 0; }

    bool operator==(const RationalBound&) const = default;
};

// A P-interval: the set of primes between two real bounds. The real bounds
// are the root-th roots of the stored rationals (root = 1 for plain
// intervals). Inverted or empty intervals are ordinary values; they simply
// contain nothing.
struct PInterval {
    RationalBound lower;
    RationalBound upper;
    unsigned root = 1;

    // True once the rational lower reaches or passes the rational upper
    // (roots preserve order, so this is root-independent).
    bool bounds_crossed() const {
        if (upper.is_infinite()) return false;
        return checked_mul(lower.num, upper.den) >= checked_mul(upper.num, lower.den);
    }

    bool operator==(const PInterval&) const = default;
};

namespace detail {

inline bool inside_lower(const PInterval& iv, u64 mk) {
    const u64 lhs = checked_mul(mk, iv.lower.den);
    return iv.lower.closed ? lhs >= iv.lower.num : lhs > iv.lower.num;
}

inline bool inside_upper(const PInterval& iv, u64 mk) {
    if (iv.upper.is_infinite()) return true;
    const u64 lhs = checked_mul(mk, iv.upper.den);
    return iv.upper.closed ? lhs <= iv.upper.num : lhs < iv.upper.num;
}

} // namespace detail

// Exact membership: does the real number m lie within the interval's bounds?
// m >= 1. Decided by comparing m^root against each bound by cross-
// multiplication; throws std::overflow_error if that product cannot be
// formed exactly (signals n or p outside the supported range).
inline bool contains_integer(const PInterval& iv, u64 m) {
    const u64 mk = checked_pow(m, iv.root);
    return detail::inside_lower(iv, mk) && detail::inside_upper(iv, mk);
}

// Greatest r with r^k <= x, by binary search. Integer-only.
inline u64 kth_root_floor(u64 x, unsigned k) {
    if (k == 0) throw std::invalid_argument("kth_root_floor: k must be >= 1");
    if (k == 1 || x <= 1) return x;

    auto pow_leq = [](u64 r, unsigned kk, u64 limit) {
        u64 acc = 1;
        for (unsigned i = 0; i < kk; ++i) {
            if (r != 0 && acc > limit / r) return false;
            acc *= r;
        }
        return acc <= limit;
    };

    u64 hi = 1;
    while (pow_leq(hi * 2, k, x)) hi *= 2;
    u64 lo = hi;        // invariant: lo^k <= x < (2*hi)^k
    hi = hi * 2;
    while (lo + 1 < hi) {
        const u64 mid = lo + (hi - lo) / 2;
        if (pow_leq(mid, k, x)) lo = mid; else hi = mid;
    }
    return lo;
}

} // namespace catfact
