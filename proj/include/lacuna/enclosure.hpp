#pragma once

#include <algorithm>

#include "lacuna/rational.hpp"

namespace lacuna {

/// Closed rational interval [lo, hi] certifying where a constructed real lies.
struct Enclosure {
    Rat lo;
    Rat hi;

    bool operator==(const Enclosure&) const = default;
};

/// Throws "inverted-enclosure" when lo > hi.
inline Enclosure make_enclosure(Rat lo, Rat hi) {
    if (lo > hi)
        throw Error("inverted-enclosure", "enclosure with lo > hi");
    return Enclosure{std::move(lo), std::move(hi)};
}

inline Rat width(const Enclosure& e) { return e.hi - e.lo; }

inline bool contains(const Enclosure& e, const Rat& r) {
    return e.lo <= r && r <= e.hi;
}

inline bool subset_of(const Enclosure& inner, const Enclosure& outer) {
    return outer.lo <= inner.lo && inner.hi <= outer.hi;
}

/// Exact image under x -> f*x. A negative factor swaps the endpoints.
inline Enclosure scaled(const Enclosure& e, const Rat& f) {
    Rat a = e.lo * f;
    Rat b = e.hi * f;
    if (a > b)
        std::swap(a, b);
    return Enclosure{std::move(a), std::move(b)};
}

inline Enclosure shifted(const Enclosure& e, const Rat& d) {
    return Enclosure{e.lo + d, e.hi + d};
}

/// Exact image under x -> |x|.
inline Enclosure abs_image(const Enclosure& e) {
    if (e.lo >= 0)
        return e;
    if (e.hi <= 0)
        return Enclosure{-e.hi, -e.lo};
    return Enclosure{Rat(0), std::max(Rat(-e.lo), e.hi)};
}

} // namespace lacuna
