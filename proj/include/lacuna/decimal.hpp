#pragma once

#include <string>

#include "lacuna/rational.hpp"

namespace lacuna {

namespace detail {

inline int digits10(const Int& n) {
    Int a = n < 0 ? Int(-n) : n;
    return static_cast<int>(a.str().size());
}

/// 10^k for k >= 0.
inline Int pow10(int k) {
    Int p = 1;
    for (int i = 0; i < k; ++i)
        p *= 10;
    return p;
}

} // namespace detail

/// Correctly-rounded (round-half-even) plain decimal expansion of r with
/// `digits` significant digits. No scientific notation; zero renders as
/// "0.00"-style with digits-1 places.
inline std::string decimal_string(const Rat& r, int digits) {
    if (digits < 1)
        throw Error("bad-digits", "significant digit count must be >= 1");
    Int n = numerator(r);
    const Int& d = denominator(r);
    const bool negative = n < 0;
    if (negative)
        n = -n;

    if (n == 0) {
        std::string out = "0";
        if (digits > 1)
            out += "." + std::string(static_cast<std::size_t>(digits - 1), '0');
        return out;
    }

    // Decimal exponent e with |r| in [10^e, 10^{e+1}).
    int e = detail::digits10(n) - detail::digits10(d);
    auto less_than_pow10 = [&](int k) {
        return k >= 0 ? n < d * detail::pow10(k) : n * detail::pow10(-k) < d;
    };
    while (less_than_pow10(e))
        --e;
    while (!less_than_pow10(e + 1))
        ++e;

    // Significand: round n/d * 10^(digits-1-e) to an integer, half to even.
    int k = digits - 1 - e;
    Int num2 = k >= 0 ? n * detail::pow10(k) : n;
    Int den2 = k >= 0 ? d : d * detail::pow10(-k);
    Int q = num2 / den2;
    Int rem2 = (num2 - q * den2) * 2;
    if (rem2 > den2 || (rem2 == den2 && is_odd(q)))
        ++q;
    if (q == detail::pow10(digits)) { // rounding carried into a new digit
        q = detail::pow10(digits - 1);
        ++e;
    }

    std::string s = q.str();
    std::string out;
    if (e >= digits - 1)
        out = s + std::string(static_cast<std::size_t>(e - digits + 1), '0');
    else if (e >= 0)
        out = s.substr(0, static_cast<std::size_t>(e + 1)) + "." +
              s.substr(static_cast<std::size_t>(e + 1));
    else
        out = "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + s;
    return negative ? "-" + out : out;
}

} // namespace lacuna
