// factorizer.hpp
// Full factorization of Cat(n): the 2-part from the binary weight of n+1,
// odd primes up to the crossover by a per-prime scan over all layers, and
// the large range (C, 2n) by a segmented sieve sweep.
//
// Three interchangeable sweep strategies produce bit-identical output:
//   Hybrid       sieve windows over (C, 2n), one modular test per prime
//   SegmentsOnly sieve exactly the segment spans; membership by geometry,
//                no modular test (cross-validation mode)
//   KummerOnly   no crossover at all: every odd prime < 2n gets the full
//                per-layer scan
//
// Window work is distributed over a small worker pool; each worker owns its
// windows exclusively and results are merged in window order, so output is
// identical for any worker count.

#pragma once

#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

#include "catfact/layers.hpp"

namespace catfact {

struct Factor {
    u64 prime = 0;
    unsigned exponent = 0;
    bool operator==(const Factor&) const = default;
};

struct Factorization {
    u64 n = 0;
    std::vector<Factor> factors;    // strictly ascending by prime

    std::size_t omega() const { return factors.size(); }
    u64 big_omega() const {
        u64 s = 0;
        for (const auto& f : factors) s += f.exponent;
        return s;
    }
    bool operator==(const Factorization&) const = default;
};

enum class Strategy { Hybrid, SegmentsOnly, KummerOnly };

struct FactorConfig {
    u64 crossover = 0;              // 0 = auto: max(floor(sqrt(2n-1)) + 1, 100)
    u64 window = kDefaultWindow;
    unsigned workers = 1;
    Strategy strategy = Strategy::Hybrid;
    std::optional<u64> t_max{};     // caps the SegmentsOnly sweep (exploration only)
};

// Effective crossover for index n. Primes above sqrt(2n) can only sit in
// layer 1, so the floor of the legal range is kth_root_floor(2n-1, 2).
inline u64 resolved_crossover(u64 n, const FactorConfig& cfg) {
    const u64 floor_c = (n >= 1) ? kth_root_floor(2 * n - 1, 2) : 1;
    if (cfg.crossover == 0) {
        const u64 c = floor_c + 1;
        return c < 100 ? 100 : c;
    }
    if (cfg.crossover < floor_c)
        throw std::invalid_argument("FactorConfig: crossover below sqrt(2n)");
    return cfg.crossover;
}

namespace detail {

// Runs fn over [lo, hi] cut into cfg-sized windows; returns the per-window
// results in window order regardless of scheduling. A throw from any window
// is rethrown on the calling thread after the pool drains.
template <typename T, typename Fn>
std::vector<std::vector<T>> parallel_windows(u64 lo, u64 hi, u64 window, unsigned workers,
                                             Fn&& fn) {
    std::vector<std::vector<T>> results;
    if (hi < lo) return results;
    if (window < 2 || window > kMaxWindowSpan)
        throw std::invalid_argument("FactorConfig: window size outside supported range");
    const u64 count = (hi - lo) / window + 1;
    results.resize(count);
    auto run = [&](u64 i) {
        const u64 wlo = lo + i * window;
        const u64 whi = (i + 1 == count) ? hi : wlo + window - 1;
        results[i] = fn(wlo, whi);
    };
    if (workers <= 1 || count <= 1) {
        for (u64 i = 0; i < count; ++i) run(i);
        return results;
    }
    std::atomic<u64> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        try {
            for (;;) {
                const u64 i = next.fetch_add(1);
                if (i >= count) return;
                run(i);
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(failure_mutex);
            if (!failure) failure = std::current_exception();
        }
    };
    const unsigned nthreads = workers < count ? workers : static_cast<unsigned>(count);
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (unsigned i = 0; i < nthreads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
    return results;
}

} // namespace detail

// All primes in (C, 2n) dividing Cat(n), ascending. Above sqrt(2n) only
// layer 1 is possible, so each such prime has exponent exactly 1.
inline std::vector<u64> sweep_large_primes(u64 n, const FactorConfig& cfg) {
    detail::require_index(n);
    std::vector<u64> out;
    if (n < 2) return out;
    const u64 c = resolved_crossover(n, cfg);
    if (c >= 2 * n - 1) return out;

    if (cfg.strategy == Strategy::SegmentsOnly) {
        const auto base = base_primes(kth_root_floor(2 * n, 2) + 1);
        std::vector<std::vector<u64>> per_t;
        for (u64 t = 1; !cfg.t_max || t <= *cfg.t_max; ++t) {
            if ((n + 1) * (2 * t - 1) >= 2 * n * t) break;  // segments exhausted
            if (2 * n <= c * (2 * t - 1)) break;            // upper bound fell to C
            std::vector<u64> ps = primes_in(segment_bounds(n, 1, t), base);
            std::erase_if(ps, [c](u64 p) { return p <= c; });
            per_t.push_back(std::move(ps));
        }
        for (auto it = per_t.rbegin(); it != per_t.rend(); ++it)
            out.insert(out.end(), it->begin(), it->end());
        return out;
    }

    const auto base = base_primes(kth_root_floor(2 * n - 1, 2) + 1);
    auto windows = detail::parallel_windows<u64>(
        c + 1, 2 * n - 1, cfg.window, cfg.workers, [&](u64 wlo, u64 whi) {
            std::vector<u64> found;
            SieveWindow w(wlo, whi);
            w.sieve(base);
            w.for_each_odd_prime([&](u64 p) {
                if (kummer_member(n, p, 1)) found.push_back(p);
            });
            return found;
        });
    for (auto& w : windows) out.insert(out.end(), w.begin(), w.end());
    return out;
}

// Exponents of the odd primes p <= C: for each, the count of layers k with
// p^k < 2n that contain p. Primes with exponent 0 are omitted.
inline std::vector<Factor> scan_small_primes(u64 n, const FactorConfig& cfg) {
    detail::require_index(n);
    std::vector<Factor> out;
    if (n < 2) return out;
    const u64 c = resolved_crossover(n, cfg);
    for (u64 p : base_primes(c)) {
        if (p == 2) continue;
        if (const unsigned e = vp_catalan(n, p)) out.push_back({p, e});
    }
    return out;
}

// The exact multiset of prime factors of Cat(n), ascending, the 2-part
// first. Deterministic for every strategy, worker count and legal crossover.
inline Factorization factor_catalan(u64 n, const FactorConfig& cfg = {}) {
    if (n > kMaxIndex)
        throw std::out_of_range("factor_catalan: n exceeds supported range (10^8)");
    Factorization out{n, {}};
    if (n < 2) return out;  // Cat(0) = Cat(1) = 1

    if (const unsigned v2 = v2_catalan(n)) out.factors.push_back({2, v2});

    if (cfg.strategy == Strategy::KummerOnly) {
        (void)resolved_crossover(n, cfg);  // still validate the config
        const auto base = base_primes(kth_root_floor(2 * n - 1, 2) + 1);
        auto windows = detail::parallel_windows<Factor>(
            3, 2 * n - 1, cfg.window, cfg.workers, [&](u64 wlo, u64 whi) {
                std::vector<Factor> found;
                SieveWindow w(wlo, whi);
                w.sieve(base);
                w.for_each_odd_prime([&](u64 p) {
                    if (const unsigned e = vp_catalan(n, p)) found.push_back({p, e});
                });
                return found;
            });
        for (auto& w : windows) out.factors.insert(out.factors.end(), w.begin(), w.end());
        return out;
    }

    for (const Factor& f : scan_small_primes(n, cfg)) out.factors.push_back(f);
    for (u64 p : sweep_large_primes(n, cfg)) out.factors.push_back({p, 1});
    return out;
}

} // namespace catfact
