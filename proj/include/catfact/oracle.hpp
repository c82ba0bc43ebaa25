// oracle.hpp
// Independent ground truth at desk scale: exact big-integer Catalan values,
// factorization of those values by plain trial division, and the direct
// Legendre valuation sum
//
//     v_p(Cat(n)) = sum_k  floor(2n/p^k) - floor(n/p^k) - floor((n+1)/p^k).
//
// Nothing here shares a code path with the production factorizer; that is
// the point. Correctness scaffolding, not a performance path.

#pragma once

#include <cstdint>
#include <sstream>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "catfact/factorizer.hpp"

namespace catfact {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr u64 kDefaultOracleLimit = 5000;

struct BigCatalan {
    u64 n = 0;
    BigInt value = 1;
};

// Exact Cat(n) via Cat(m+1) = Cat(m) * 2(2m+1) / (m+2), each division exact.
inline BigCatalan catalan_bigint(u64 n, u64 limit = kDefaultOracleLimit) {
    if (n > limit)
        throw std::out_of_range("catalan_bigint: n beyond the oracle limit");
    BigCatalan c{n, 1};
    BigInt v = 1;
    for (u64 m = 0; m < n; ++m) {
        v *= 2 * (2 * m + 1);
        BigInt q, r;
        boost::multiprecision::divide_qr(v, BigInt(m + 2), q, r);
        if (r != 0) throw std::logic_error("catalan_bigint: recurrence division not exact");
        v = q;
    }
    c.value = v;
    return c;
}

// Factorization of Cat(n) by trial division over the primes below 2n.
// The cofactor after all divisions must be 1; anything else would falsify
// the factor-base bound and aborts loudly.
inline Factorization trial_factor_catalan(u64 n, u64 limit = kDefaultOracleLimit) {
    BigInt v = catalan_bigint(n, limit).value;
    Factorization out{n, {}};
    if (n < 2) return out;
    for (u64 p : base_primes(2 * n)) {
        unsigned e = 0;
        while (v % p == 0) {
            v /= p;
            ++e;
        }
        if (e) out.factors.push_back({p, e});
        if (v == 1) break;
    }
    if (v != 1)
        throw std::logic_error("trial_factor_catalan: cofactor is not 1; factor base violated");
    return out;
}

// The Legendre sum itself, term by term. p = 2 is allowed here.
inline unsigned vp_legendre_sum(u64 n, u64 p) {
    if (p < 2) throw std::invalid_argument("vp_legendre_sum: p must be prime");
    unsigned s = 0;
    for (u64 pk = p; pk <= 2 * n; ) {
        s += static_cast<unsigned>(2 * n / pk - n / pk - (n + 1) / pk);
        if (pk > 2 * n / p) break;
        pk *= p;
    }
    return s;
}

struct VerifyReport {
    u64 n = 0;
    bool ok = false;
    std::string detail;
};

// Cross-checks factor_catalan(n, cfg) against trial division, against the
// Legendre sums for every prime below 2n, and against the big-integer
// product of its own factors. Mismatches are report content, not errors.
inline VerifyReport verify(u64 n, const FactorConfig& cfg = {},
                           u64 limit = kDefaultOracleLimit) {
    VerifyReport rep{n, false, {}};
    const Factorization got = factor_catalan(n, cfg);
    const Factorization want = trial_factor_catalan(n, limit);

    auto mismatch = [&](u64 p, u64 want_e, u64 got_e, const char* source) {
        std::ostringstream os;
        os << "p=" << p << ": expected exponent " << want_e << " (" << source
           << "), engine produced " << got_e;
        rep.detail = os.str();
        return rep;
    };

    auto exponent_of = [](const Factorization& f, u64 p) -> u64 {
        for (const auto& fac : f.factors)
            if (fac.prime == p) return fac.exponent;
        return 0;
    };

    for (const auto& f : want.factors)
        if (exponent_of(got, f.prime) != f.exponent)
            return mismatch(f.prime, f.exponent, exponent_of(got, f.prime), "trial division");
    for (const auto& f : got.factors)
        if (exponent_of(want, f.prime) != f.exponent)
            return mismatch(f.prime, exponent_of(want, f.prime), f.exponent, "trial division");

    if (n >= 1)
        for (u64 p : base_primes(2 * n > 2 ? 2 * n - 1 : 2)) {
            const unsigned e = vp_legendre_sum(n, p);
            if (exponent_of(got, p) != e)
                return mismatch(p, e, exponent_of(got, p), "Legendre sum");
        }

    BigInt prod = 1;
    for (const auto& f : got.factors)
        for (unsigned i = 0; i < f.exponent; ++i) prod *= f.prime;
    if (prod != catalan_bigint(n, limit).value) {
        rep.detail = "product of factors does not reconstruct Cat(n)";
        return rep;
    }

    rep.ok = true;
    std::ostringstream os;
    os << "factors: " << got.omega() << ", total exponents: " << got.big_omega()
       << "; trial division, Legendre sums and product reconstruction agree";
    rep.detail = os.str();
    return rep;
}

} // namespace catfact
