#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "lacuna/error.hpp"

// Exact arithmetic substrate. Every certified quantity in this library is an
// arbitrary-precision integer or a rational in lowest terms with positive
// denominator; floating point appears only at the reporting boundary.

namespace lacuna {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

/// p/q as a canonical rational (lowest terms, den > 0).
/// Throws "zero-denominator" when q == 0.
inline Rat normalize_rational(Int p, Int q) {
    if (q == 0)
        throw Error("zero-denominator", "rational with denominator 0");
    if (q < 0) {
        p = -p;
        q = -q;
    }
    return Rat(std::move(p), std::move(q));
}

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

/// Largest integer <= r. cpp_int division truncates toward zero, so
/// negative non-integers need the -1 adjustment.
inline Int rat_floor(const Rat& r) {
    Int q = numerator(r) / denominator(r);
    if (numerator(r) < 0 && q * denominator(r) != numerator(r))
        --q;
    return q;
}

inline bool is_odd(const Int& n) { return (n & 1) != 0; }

/// 2^k as an exact integer.
inline Int pow2(unsigned k) { return Int(1) << k; }

/// r reduced mod 2 into [0, 2).
inline Rat mod2(const Rat& r) {
    return r - Rat(2) * Rat(rat_floor(r / 2));
}

} // namespace lacuna
