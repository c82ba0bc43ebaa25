// format.hpp
// Human-readable rendering of bounds, intervals and factorizations.
// Bounds are shown with 6 significant digits, rounded toward zero for upper
// bounds and away from zero for lower bounds, so a displayed interval never
// appears to contain a number the exact predicate excludes. The rounding
// itself is computed exactly (big integers), not with floating point.

#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "catfact/factorizer.hpp"

namespace catfact {

namespace detail {

using BigIntFmt = boost::multiprecision::cpp_int;

inline BigIntFmt big_kth_root_floor(const BigIntFmt& x, unsigned k) {
    if (k == 1 || x <= 1) return x;
    const unsigned bits = boost::multiprecision::msb(x) + 1;
    BigIntFmt lo = 0, hi = BigIntFmt(1) << (bits / k + 2);
    while (lo + 1 < hi) {
        BigIntFmt mid = lo + (hi - lo) / 2;
        if (boost::multiprecision::pow(mid, k) <= x) lo = mid; else hi = mid;
    }
    return lo;
}

inline BigIntFmt big_pow10(unsigned e) {
    BigIntFmt r = 1;
    for (unsigned i = 0; i < e; ++i) r *= 10;
    return r;
}

} // namespace detail

inline constexpr unsigned kDisplayDigits = 6;

// (num/den)^(1/root) as a decimal string with at least kDisplayDigits
// significant digits. round_up selects away-from-zero rounding.
inline std::string format_bound(const RationalBound& b, unsigned root, bool round_up) {
    using detail::BigIntFmt;
    if (b.is_infinite()) return "inf";
    if (b.num == 0) return "0";

    // Exact integer bounds print plain.
    if (b.num % b.den == 0) {
        const u64 q = b.num / b.den;
        const u64 r = kth_root_floor(q, root);
        if (checked_pow(r, root) == q) return std::to_string(r);
    }

    const u64 ipart = kth_root_floor(b.num / b.den, root);
    const unsigned idigits = static_cast<unsigned>(std::to_string(ipart).size());
    const unsigned s = idigits >= kDisplayDigits ? 1 : kDisplayDigits - idigits;

    // floor(value * 10^s), exactly: scale num by 10^(root*s) first.
    const BigIntFmt scaled = BigIntFmt(b.num) * detail::big_pow10(root * s);
    const BigIntFmt q = scaled / b.den;
    BigIntFmt d = detail::big_kth_root_floor(q, root);
    const bool exact =
        (scaled % b.den == 0) && (boost::multiprecision::pow(d, root) == q);
    if (round_up && !exact) ++d;

    std::string digits = d.str();
    if (digits.size() <= s) digits.insert(0, s + 1 - digits.size(), '0');
    digits.insert(digits.size() - s, ".");
    return digits;
}

// "(10000; 19998)", "[4.99825; 5]", brackets by open/closed flags.
inline std::string format_interval(const PInterval& iv) {
    std::string s;
    s += iv.lower.closed ? '[' : '(';
    s += format_bound(iv.lower, iv.root, /*round_up=*/true);
    s += "; ";
    s += format_bound(iv.upper, iv.root, /*round_up=*/false);
    s += iv.upper.closed ? ']' : ')';
    return s;
}

// "2^4 · 3^4 · 5^1"; the empty factorization prints as "1".
inline std::string format_factorization(const Factorization& f) {
    if (f.factors.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < f.factors.size(); ++i) {
        if (i) s += " · ";
        s += std::to_string(f.factors[i].prime);
        s += '^';
        s += std::to_string(f.factors[i].exponent);
    }
    return s;
}

} // namespace catfact
