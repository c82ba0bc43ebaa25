// primes.hpp
// Prime generation: a plain base sieve, a segmented odd-only sieve over
// arbitrary windows, and enumeration of the primes inside a PInterval.
//
// Even numbers are never stored in sieve windows; 2 is handled explicitly
// where an interval actually contains it.

#pragma once

#include <cstdint>
#include <vector>

#include "catfact/interval.hpp"

namespace catfact {

// Memory-budget ceilings, not mathematical limits.
inline constexpr u64 kMaxBaseLimit = u64{1} << 31;
inline constexpr u64 kMaxSieveTarget = u64{1} << 31;
inline constexpr u64 kMaxWindowSpan = u64{1} << 26;
inline constexpr u64 kDefaultWindow = u64{1} << 22;

// All primes <= limit, ascending. Classic sieve of Eratosthenes.
inline std::vector<u64> base_primes(u64 limit) {
    if (limit > kMaxBaseLimit)
        throw std::length_error("base_primes: limit exceeds memory budget");
    std::vector<u64> out;
    if (limit < 2) return out;
    std::vector<bool> composite(limit + 1, false);
    for (u64 i = 2; i * i <= limit; ++i)
        if (!composite[i])
            for (u64 j = i * i; j <= limit; j += i) composite[j] = true;
    for (u64 i = 2; i <= limit; ++i)
        if (!composite[i]) out.push_back(i);
    return out;
}

// Deterministic primality by trial division (2, 3, then 6k+-1).
// Sufficient for the whole engine: every query in scope is < 2*10^8,
// and the guarantee extends to 4*10^16.
inline bool is_prime(u64 m) {
    if (m > u64{40'000'000'000'000'000})
        throw std::domain_error("is_prime: argument beyond supported range");
    if (m < 2) return false;
    if (m < 4) return true;
    if (m % 2 == 0 || m % 3 == 0) return false;
    for (u64 i = 5; i * i <= m; i += 6)
        if (m % i == 0 || m % (i + 2) == 0) return false;
    return true;
}

// One segment [lo, hi] of a segmented sieve. Stores a composite mark per odd
// position; after sieve() with all base primes <= sqrt(hi), the unmarked odd
// positions >= 3 are exactly the odd primes in the window.
class SieveWindow {
public:
    SieveWindow(u64 lo, u64 hi) : lo_(lo), hi_(hi) {
        if (hi < lo) throw std::invalid_argument("SieveWindow: hi < lo");
        if (hi - lo > kMaxWindowSpan)
            throw std::length_error("SieveWindow: span exceeds window budget");
        first_odd_ = lo | 1;
        n_odds_ = (hi >= first_odd_) ? (hi - first_odd_) / 2 + 1 : 0;
        composite_.assign(n_odds_, false);
        if (first_odd_ == 1 && n_odds_ > 0) composite_[0] = true;
    }

    void sieve(const std::vector<u64>& base) {
        for (u64 p : base) {
            if (p == 2) continue;
            if (p * p > hi_) break;
            u64 start = ((lo_ + p - 1) / p) * p;
            if (start < p * p) start = p * p;
            if (start % 2 == 0) start += p;
            for (u64 m = start; m <= hi_; m += 2 * p) composite_[(m - first_odd_) / 2] = true;
        }
    }

    template <typename Fn>
    void for_each_odd_prime(Fn&& fn) const {
        for (u64 i = 0; i < n_odds_; ++i)
            if (!composite_[i]) {
                const u64 m = first_odd_ + 2 * i;
                if (m >= 3) fn(m);
            }
    }

    u64 lo() const { return lo_; }
    u64 hi() const { return hi_; }

private:
    u64 lo_, hi_, first_odd_, n_odds_;
    std::vector<bool> composite_;
};

// Calls fn(p) for every prime in [lo, hi], ascending, sieving one window at
// a time. base must contain every prime <= sqrt(hi); building it as
// base_primes(kth_root_floor(hi, 2) + 1) always satisfies that.
template <typename Fn>
void for_each_prime_in_range(u64 lo, u64 hi, const std::vector<u64>& base, Fn&& fn,
                             u64 window = kDefaultWindow) {
    if (hi < lo) return;
    if (hi > kMaxSieveTarget)
        throw std::length_error("for_each_prime_in_range: range exceeds sieve budget");
    if (lo <= 2 && 2 <= hi) fn(u64{2});
    if (window < 2) window = 2;
    for (u64 wlo = lo; wlo <= hi; ) {
        const u64 whi = (hi - wlo < window - 1) ? hi : wlo + window - 1;
        SieveWindow w(wlo, whi);
        w.sieve(base);
        w.for_each_odd_prime(fn);
        if (whi == hi) break;
        wlo = whi + 1;
    }
}

namespace detail {

// Smallest integer m >= 1 strictly/weakly inside the lower bound.
inline u64 first_integer_inside_lower(const PInterval& iv) {
    if (iv.lower.is_infinite())
        throw std::domain_error("primes_in: lower bound must be finite");
    u64 m = kth_root_floor(iv.lower.num / iv.lower.den, iv.root);
    if (m < 1) m = 1;
    while (!inside_lower(iv, checked_pow(m, iv.root))) ++m;
    return m;
}

// Largest integer inside the upper bound, or 0 if there is none.
inline u64 last_integer_inside_upper(const PInterval& iv) {
    const u64 q = iv.upper.num / iv.upper.den + (iv.upper.num % iv.upper.den != 0);
    u64 m = kth_root_floor(q, iv.root) + 1;
    while (m > 0 && !inside_upper(iv, checked_pow(m, iv.root))) --m;
    return m;
}

} // namespace detail

// Exactly the primes p with contains_integer(iv, p), ascending. The integer
// span of the interval is located by exact root/boundary search, sieved, and
// every candidate re-checked against the exact membership predicate.
inline std::vector<u64> primes_in(const PInterval& iv, const std::vector<u64>& base) {
    std::vector<u64> out;
    if (iv.upper.is_infinite())
        throw std::domain_error("primes_in: interval is unbounded above");
    const u64 lo = detail::first_integer_inside_lower(iv);
    const u64 hi = detail::last_integer_inside_upper(iv);
    if (hi < lo) return out;
    for_each_prime_in_range(lo, hi, base, [&](u64 p) {
        if (contains_integer(iv, p)) out.push_back(p);
    });
    return out;
}

inline std::vector<u64> primes_in(const PInterval& iv) {
    if (iv.upper.is_infinite())
        throw std::domain_error("primes_in: interval is unbounded above");
    const u64 hi = detail::last_integer_inside_upper(iv);
    return primes_in(iv, base_primes(kth_root_floor(hi, 2) + 1));
}

} // namespace catfact
