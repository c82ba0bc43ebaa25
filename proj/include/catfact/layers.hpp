// layers.hpp
// The layer machinery behind Catalan factorization. For an odd prime p and
// layer k, p contributes +1 to v_p(Cat(n)) exactly when p falls inside one
// of the layer's segments
//
//     S_t(n) = ( ((n+1)/t)^(1/k) ; (2n/(2t-1))^(1/k) ),   t = 1, 2, ...
//
// or, equivalently, when n mod p^k lies strictly between p^k/2 and p^k - 1.
// Both routes are implemented: locate() walks the segment/hole geometry,
// kummer_member() is the O(1) modular test. They are property-tested against
// each other and the factorizer uses the modular form.
//
// The prime 2 never takes part in this machinery; its exponent comes from
// the binary digit weight of n+1 (v2_catalan).

#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include "catfact/interval.hpp"
#include "catfact/primes.hpp"

namespace catfact {

enum class RegionKind { Segment, Hole };

// Coordinates of one segment or hole: layer k, index t, for Catalan index n.
struct SegmentRef {
    u64 n = 0;
    unsigned layer = 1;
    u64 index = 1;
    RegionKind kind = RegionKind::Segment;
};

namespace detail {

inline void require_index(u64 n) {
    if (n > kMaxIndex)
        throw std::out_of_range("catfact: index exceeds supported range (10^8)");
}

inline void require_odd(u64 p) {
    if (p < 3 || p % 2 == 0)
        throw std::invalid_argument("catfact: prime argument must be odd (2 is handled separately)");
}

inline void require_layer(unsigned k) {
    if (k == 0) throw std::invalid_argument("catfact: layer must be >= 1");
}

} // namespace detail

// S_t at layer k: both bounds open, under a k-th root. May come out empty
// or inverted; that is an ordinary value.
inline PInterval segment_bounds(u64 n, unsigned k, u64 t) {
    detail::require_index(n);
    detail::require_layer(k);
    if (t < 1) throw std::invalid_argument("segment_bounds: t must be >= 1");
    return {RationalBound::open(n + 1, t), RationalBound::open(2 * n, 2 * t - 1), k};
}

// H_t at layer k: both bounds closed; t = 0 is the degenerate hole above the
// first segment, unbounded above.
inline PInterval hole_bounds(u64 n, unsigned k, u64 t) {
    detail::require_index(n);
    detail::require_layer(k);
    RationalBound up = (t == 0) ? RationalBound::infinite() : RationalBound::closed_at(n + 1, t);
    return {RationalBound::closed_at(2 * n, 2 * t + 1), up, k};
}

inline PInterval region_bounds(const SegmentRef& ref) {
    return ref.kind == RegionKind::Segment ? segment_bounds(ref.n, ref.layer, ref.index)
                                           : hole_bounds(ref.n, ref.layer, ref.index);
}

// Greatest k with 3^k < 2n: deeper layers cannot hold any odd prime.
inline unsigned max_layer(u64 n) {
    detail::require_index(n);
    unsigned k = 0;
    for (u64 pk = 3; pk < 2 * n; pk *= 3) ++k;
    return k;
}

// Modular membership test: odd prime p is in layer k iff
// n mod p^k lies in (p^k/2, p^k - 1). The first comparison is exact since
// p^k is odd. Trivially false once p^k >= 2n.
inline bool kummer_member(u64 n, u64 p, unsigned k) {
    detail::require_index(n);
    detail::require_odd(p);
    detail::require_layer(k);
    const u64 pk = checked_pow(p, k);
    if (pk >= 2 * n) return false;
    const u64 r = n % pk;
    return 2 * r > pk && r + 1 < pk;
}

// Outcome of the segment-walking location algorithm, with the deciding
// comparison kept for diagnostics.
struct Location {
    unsigned layer = 1;
    RegionKind kind = RegionKind::Hole;
    u64 index = 0;          // t of the region that holds the prime
    u64 u = 0;              // ceil((n+1)/p^k), the candidate segment

    enum class Branch {
        DividesSucc,        // p^k divides n+1  ->  hole H_u
        BelowUpper,         // p^k (2u-1) < 2n  ->  segment S_u
        AboveUpper,         // otherwise        ->  hole H_{u-1}
    } branch = Branch::AboveUpper;

    bool in_segment() const { return kind == RegionKind::Segment; }

    // The region the verdict names, as coordinates for region_bounds().
    SegmentRef region(u64 n) const { return {n, layer, index, kind}; }
};

// Locates odd prime p within layer k of index n. Requires p^k < 2n.
// Step 1 picks the segment whose lower boundary sits closest below p,
// u = ceil((n+1)/p^k); steps 2 and 3 decide among H_u, S_u, H_{u-1}.
inline Location locate(u64 n, u64 p, unsigned k) {
    detail::require_index(n);
    detail::require_odd(p);
    detail::require_layer(k);
    const u64 pk = checked_pow(p, k);
    if (pk >= 2 * n)
        throw std::domain_error("locate: p^k must be below 2n");
    const u64 u = (n + 1 + pk - 1) / pk;
    if ((n + 1) % pk == 0)
        return {k, RegionKind::Hole, u, u, Location::Branch::DividesSucc};
    if (pk * (2 * u - 1) < 2 * n)
        return {k, RegionKind::Segment, u, u, Location::Branch::BelowUpper};
    return {k, RegionKind::Hole, u - 1, u, Location::Branch::AboveUpper};
}

// v2(Cat(n)) = (number of one-bits of n+1) - 1.
inline unsigned v2_catalan(u64 n) {
    detail::require_index(n);
    return static_cast<unsigned>(std::popcount(n + 1)) - 1;
}

// v_p(Cat(n)) for odd prime p: the number of layers containing p.
inline unsigned vp_catalan(u64 n, u64 p) {
    detail::require_index(n);
    detail::require_odd(p);
    unsigned count = 0;
    for (unsigned k = 1; checked_pow(p, k) < 2 * n; ++k)
        if (kummer_member(n, p, k)) ++count;
    return count;
}

// One non-empty segment of a layer listing.
struct LayerSegment {
    u64 t = 0;
    PInterval bounds;
    std::vector<u64> primes;    // ascending odd primes inside
};

// Per-layer listing of non-empty segments with their odd-prime contents.
struct LayerReport {
    u64 n = 0;
    unsigned layer = 1;
    std::vector<LayerSegment> segments;

    u64 total() const {
        u64 s = 0;
        for (const auto& seg : segments) s += seg.primes.size();
        return s;
    }
};

// Enumerates segments t = 1, 2, ... until the bounds cross (or t_max),
// listing each non-empty segment's odd primes. The layer's candidate range
// is open at 2, so the integer 2 is never part of a layer even when a deep
// segment happens to straddle it.
inline LayerReport layer_segments(u64 n, unsigned k, std::optional<u64> t_max,
                                  const std::vector<u64>& base) {
    detail::require_index(n);
    detail::require_layer(k);
    LayerReport rep{n, k, {}};
    if (n < 1) return rep;  // Cat(0) = 1, nothing to list
    for (u64 t = 1; !t_max || t <= *t_max; ++t) {
        if ((n + 1) * (2 * t - 1) >= 2 * n * t) break;  // bounds crossed
        PInterval iv = segment_bounds(n, k, t);
        std::vector<u64> ps = primes_in(iv, base);
        if (!ps.empty() && ps.front() == 2) ps.erase(ps.begin());
        if (!ps.empty()) rep.segments.push_back({t, iv, std::move(ps)});
    }
    return rep;
}

inline LayerReport layer_segments(u64 n, unsigned k, std::optional<u64> t_max = {}) {
    detail::require_index(n);
    return layer_segments(n, k, t_max, base_primes(kth_root_floor(2 * n, 2) + 1));
}

} // namespace catfact
