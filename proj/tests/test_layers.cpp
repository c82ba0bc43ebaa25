#include <catch2/catch_amalgamated.hpp>

#include "catfact/layers.hpp"

using namespace catfact;

namespace {

// floor-division Legendre term, the direct form of the valuation sum.
unsigned legendre_term(u64 n, u64 pk) {
    return static_cast<unsigned>(2 * n / pk - n / pk - (n + 1) / pk);
}

} // namespace

TEST_CASE("segment_bounds: pinned shapes") {
    const PInterval s1 = segment_bounds(9999, 1, 1);
    CHECK(s1.lower == RationalBound::open(10000, 1));
    CHECK(s1.upper == RationalBound::open(19998, 1));
    CHECK(s1.root == 1);

    // S_2 at layer 2 covers (sqrt(5000); sqrt(6666)) and holds 71, 73, 79
    const PInterval s22 = segment_bounds(9999, 2, 2);
    CHECK(s22.lower == RationalBound::open(10000, 2));
    CHECK(s22.upper == RationalBound::open(19998, 3));
    CHECK(s22.root == 2);
    CHECK(primes_in(s22) == std::vector<u64>{71, 73, 79});

    // at t = (n+1)/2 the bounds meet: (2; 2), empty
    const PInterval last = segment_bounds(9999, 1, 5000);
    CHECK(last.bounds_crossed());
    CHECK_FALSE(contains_integer(last, 2));
}

TEST_CASE("hole_bounds: pinned membership") {
    CHECK(contains_integer(hole_bounds(9999, 1, 909), 11));   // 11 >= 19998/1819
    CHECK(contains_integer(hole_bounds(9999, 1, 2000), 5));   // 5 divides 10000
    CHECK_FALSE(contains_integer(hole_bounds(9999, 1, 909), 13));

    // t = 0: everything from 2n upward
    const PInterval h0 = hole_bounds(9999, 1, 0);
    CHECK(h0.upper.is_infinite());
    CHECK(contains_integer(h0, 19998));
    CHECK_FALSE(contains_integer(h0, 19997));

    // region coordinates dispatch to the same formulas
    CHECK(region_bounds({9999, 1, 909, RegionKind::Hole}) == hole_bounds(9999, 1, 909));
    CHECK(region_bounds({9999, 2, 4, RegionKind::Segment}) == segment_bounds(9999, 2, 4));
}

TEST_CASE("hole and segment boundaries coincide exactly") {
    for (u64 n : {5, 100, 9999, 12345}) {
        for (unsigned k : {1u, 2u, 3u}) {
            for (u64 t : {1, 2, 7, 50}) {
                const PInterval h = hole_bounds(n, k, t);
                const PInterval s = segment_bounds(n, k, t);
                const PInterval s_next = segment_bounds(n, k, t + 1);
                // hole upper == segment lower (same rational)
                CHECK(h.upper.num * s.lower.den == s.lower.num * h.upper.den);
                // hole lower == next segment upper
                CHECK(h.lower.num * s_next.upper.den == s_next.upper.num * h.lower.den);
            }
        }
    }
}

TEST_CASE("max_layer: pinned values") {
    CHECK(max_layer(9999) == 9);
    CHECK(max_layer(2) == 1);
    CHECK(max_layer(100000000) == 17);  // 3^17 < 2*10^8 <= 3^18
    CHECK(max_layer(14) == 3);          // 27 < 28
}

TEST_CASE("kummer_member: pinned verdicts from index 10^8") {
    CHECK(kummer_member(100000000, 3, 7));        // residue 1612
    CHECK_FALSE(kummer_member(100000000, 5, 7));  // residue 0
    CHECK_FALSE(kummer_member(100000000, 7, 7));
    CHECK_FALSE(kummer_member(100000000, 11, 7));
    CHECK(kummer_member(100000000, 13, 7));       // residue 37251483
    CHECK(kummer_member(100000000, 13, 1));       // residue 9 in (6.5; 12)
    CHECK(kummer_member(100000000, 13, 2));       // residue 165 in (84.5; 168)
    // p^k >= 2n is trivially out
    CHECK_FALSE(kummer_member(10, 23, 1));
    CHECK_THROWS_AS(kummer_member(100, 2, 1), std::invalid_argument);
}

TEST_CASE("small-prime layer-1 rules, exhaustively to 10^4") {
    u64 bad = 0;
    for (u64 n = 2; n <= 10000; ++n) {
        if (kummer_member(n, 3, 1)) ++bad;
        if (kummer_member(n, 5, 1) != (n % 5 == 3)) ++bad;
        if (kummer_member(n, 7, 1) != (n % 7 == 4 || n % 7 == 5)) ++bad;
    }
    REQUIRE(bad == 0);
    for (u64 i = 0; i <= 20; ++i) CHECK(kummer_member(5 * i + 3, 5, 1));
}

TEST_CASE("locate: pinned verdicts for index 9999") {
    const Location l23 = locate(9999, 23, 1);
    CHECK(l23.in_segment());
    CHECK(l23.index == 435);
    CHECK(l23.u == 435);

    const Location l29 = locate(9999, 29, 1);
    CHECK(l29.in_segment());
    CHECK(l29.index == 345);

    const Location l11 = locate(9999, 11, 1);
    CHECK_FALSE(l11.in_segment());
    CHECK(l11.index == 909);
    CHECK(l11.u == 910);
    CHECK(l11.branch == Location::Branch::AboveUpper);

    const Location l5 = locate(9999, 5, 1);
    CHECK_FALSE(l5.in_segment());
    CHECK(l5.index == 2000);
    CHECK(l5.branch == Location::Branch::DividesSucc);

    const Location big = locate(100000000, 13, 1);
    CHECK(big.in_segment());
    CHECK(big.index == 7692308);

    CHECK_THROWS_AS(locate(10, 23, 1), std::domain_error);   // p^k >= 2n
    CHECK_THROWS_AS(locate(9999, 2, 1), std::invalid_argument);
}

TEST_CASE("v2_catalan: binary weight of n+1, minus one") {
    CHECK(v2_catalan(9999) == 4);
    CHECK(v2_catalan(3) == 0);   // Cat(3) = 5, odd
    CHECK(v2_catalan(4) == 1);   // Cat(4) = 14
    CHECK(v2_catalan(0) == 0);
    CHECK(v2_catalan(1) == 0);
    CHECK(v2_catalan(7) == 0);
}

TEST_CASE("v2 equals n minus the 2-adic valuation of (n+1)!") {
    u64 bad = 0;
    for (u64 n = 0; n <= 2000; ++n) {
        u64 legendre = 0;
        for (u64 pk = 2; pk <= n + 1; pk *= 2) legendre += (n + 1) / pk;
        if (v2_catalan(n) != n - legendre) ++bad;
    }
    REQUIRE(bad == 0);
}

TEST_CASE("vp_catalan: pinned exponents") {
    CHECK(vp_catalan(9999, 3) == 4);       // layers 6..9
    CHECK(vp_catalan(9999, 10007) == 1);
    CHECK(vp_catalan(9999, 3343) == 1);
    CHECK(vp_catalan(9999, 3331) == 0);    // sits in the second hole
    CHECK(vp_catalan(9999, 11) == 3);      // layers 2, 3, 4
    CHECK(vp_catalan(100000000, 13) == 5);
    CHECK(vp_catalan(0, 3) == 0);
    CHECK(vp_catalan(1, 3) == 0);
}

TEST_CASE("layer_segments: layer 1 of 9999, first 15 segments") {
    const LayerReport rep = layer_segments(9999, 1, 15);
    const std::vector<std::size_t> want = {1033, 190, 80, 47, 28, 19, 17, 13, 7, 9, 6, 5, 3, 4, 3};
    REQUIRE(rep.segments.size() == want.size());
    for (std::size_t i = 0; i < want.size(); ++i) {
        CHECK(rep.segments[i].t == i + 1);
        CHECK(rep.segments[i].primes.size() == want[i]);
    }
    CHECK(rep.total() == 1464);
}

TEST_CASE("layer_segments: layer 3 of 9999") {
    const LayerReport rep = layer_segments(9999, 3);
    REQUIRE(rep.segments.size() == 3);
    CHECK(rep.segments[0].t == 1);
    CHECK(rep.segments[0].primes == std::vector<u64>{23});
    CHECK(rep.segments[1].t == 5);
    CHECK(rep.segments[1].primes == std::vector<u64>{13});
    CHECK(rep.segments[2].t == 8);
    CHECK(rep.segments[2].primes == std::vector<u64>{11});
}

TEST_CASE("layer_segments: layer 2 of 9999 holds 22 primes; segment 4 is {53}") {
    // 51 = 3 * 17 is composite, so segment 4 contains the single prime 53.
    const LayerReport rep = layer_segments(9999, 2);
    REQUIRE(rep.segments.size() == 11);
    CHECK(rep.total() == 22);
    const auto& s4 = rep.segments[3];
    CHECK(s4.t == 4);
    CHECK(s4.primes == std::vector<u64>{53});
    CHECK(rep.segments[0].primes.size() == 9);   // 101 .. 139
    CHECK(rep.segments.back().t == 83);
    CHECK(rep.segments.back().primes == std::vector<u64>{11});
}

TEST_CASE("layer_segments never lists the even prime") {
    // At layer 9 of 9999, segment t = 20 straddles the integer 2; the layer
    // domain is open at 2, so only t = 1 (holding 3) is reported.
    const LayerReport rep = layer_segments(9999, 9);
    REQUIRE(rep.segments.size() == 1);
    CHECK(rep.segments[0].t == 1);
    CHECK(rep.segments[0].primes == std::vector<u64>{3});
}

TEST_CASE("locate and kummer_member agree everywhere in range") {
    const auto primes = base_primes(4000);
    u64 bad = 0, pairs = 0;
    for (u64 n = 2; n <= 2000; ++n) {
        for (u64 p : primes) {
            if (p == 2) continue;
            if (p >= 2 * n) break;
            for (unsigned k = 1; checked_pow(p, k) < 2 * n; ++k) {
                ++pairs;
                if (locate(n, p, k).in_segment() != kummer_member(n, p, k)) ++bad;
            }
        }
    }
    REQUIRE(bad == 0);
    CHECK(pairs > 500000);
}

TEST_CASE("each layer-k term of the valuation sum matches the membership bit") {
    const auto primes = base_primes(1000);
    u64 bad = 0;
    for (u64 n = 2; n <= 500; ++n)
        for (u64 p : primes) {
            if (p == 2) continue;
            if (p >= 2 * n) break;
            for (unsigned k = 1; checked_pow(p, k) < 2 * n; ++k) {
                const u64 pk = checked_pow(p, k);
                const unsigned term = legendre_term(n, pk);
                if (term > 1) ++bad;
                if (term != (kummer_member(n, p, k) ? 1u : 0u)) ++bad;
                if ((n + 1) % pk == 0 && term != 0) ++bad;
            }
        }
    REQUIRE(bad == 0);
}

TEST_CASE("segments and holes tile the odd primes below 2n exactly once") {
    const auto primes = base_primes(1000);
    u64 bad = 0;
    for (u64 n = 2; n <= 400; ++n) {
        for (u64 p : primes) {
            if (p == 2) continue;
            if (p >= 2 * n) break;
            unsigned in_segments = 0, in_holes = 0;
            for (u64 t = 1; t <= n + 1; ++t)
                if (contains_integer(segment_bounds(n, 1, t), p)) ++in_segments;
            for (u64 t = 0; t <= n + 1; ++t)
                if (contains_integer(hole_bounds(n, 1, t), p)) ++in_holes;
            if (in_segments + in_holes != 1) ++bad;
            const Location loc = locate(n, p, 1);
            if (!contains_integer(region_bounds(loc.region(n)), p)) ++bad;
        }
    }
    REQUIRE(bad == 0);
}

TEST_CASE("every prime of the main segment divides exactly once") {
    const auto base = base_primes(100);
    u64 bad = 0;
    for (u64 n = 2; n <= 2000; ++n) {
        PInterval main{RationalBound::open(n + 1), RationalBound::open(2 * n), 1};
        for (u64 p : primes_in(main, base))
            if (vp_catalan(n, p) != 1) ++bad;
    }
    REQUIRE(bad == 0);
}

TEST_CASE("segments at t >= (n+1)/2 are empty or inverted") {
    u64 bad = 0;
    for (u64 n = 2; n <= 2000; ++n) {
        const u64 t0 = (n + 1 + 1) / 2;  // ceil((n+1)/2)
        for (u64 t = t0; t < t0 + 25; ++t)
            if (!segment_bounds(n, 1, t).bounds_crossed()) ++bad;
        if (!segment_bounds(n, 1, t0 + 100000).bounds_crossed()) ++bad;
    }
    REQUIRE(bad == 0);
}
