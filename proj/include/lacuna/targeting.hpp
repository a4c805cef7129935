#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lacuna/omega.hpp"

// Steering Omega into a prescribed subinterval of [0, 2]: divide [0, 2]
// into 2*nu equal parts and hit the mu-th one. The chain is seeded from a
// sequence member nu_1 > 6*nu with an odd whose ratio lands in the middle
// third of the target; the middle third leaves margin 1/(3*nu) on both
// sides, which strictly exceeds the certified drift of the remaining chain.

namespace lacuna {

/// The mu-th of 2*nu equal subdivisions of [0, 2], i.e. [(mu-1)/nu, mu/nu].
struct TargetSpec {
    Int mu;
    Int nu;
};

inline TargetSpec make_target_spec(Int mu, Int nu) {
    if (nu < 1 || mu < 1 || mu > 2 * nu)
        throw Error("bad-target", "target requires 1 <= mu <= 2*nu, nu >= 1; got mu = " +
                                      mu.str() + ", nu = " + nu.str());
    return TargetSpec{std::move(mu), std::move(nu)};
}

inline Enclosure target_interval(const TargetSpec& spec) {
    return Enclosure{Rat(spec.mu - 1, spec.nu), Rat(spec.mu, spec.nu)};
}

/// [(3mu-2)/(3nu), (3mu-1)/(3nu)]: width 1/(3nu), centered in the target.
inline Enclosure middle_third(const TargetSpec& spec) {
    if (spec.nu < 1 || spec.mu < 1 || spec.mu > 2 * spec.nu)
        throw Error("bad-target", "invalid target spec");
    return Enclosure{Rat(3 * spec.mu - 2, 3 * spec.nu), Rat(3 * spec.mu - 1, 3 * spec.nu)};
}

struct Nu1 {
    std::size_t index = 0; // 1-based position in the sequence
    Int value;
};

/// First sequence member strictly greater than 6*nu.
inline Nu1 find_nu1(const LacunarySequence& seq, const Int& nu) {
    Int threshold = 6 * nu;
    for (std::size_t k = 1; k <= seq.size(); ++k)
        if (seq.term(k) > threshold)
            return Nu1{k, seq.term(k)};
    throw Error("prefix-too-short",
                "no sequence member exceeds 6*nu = " + threshold.str());
}

/// Smallest odd o with o/nu1 inside the middle third (closed, exact).
/// Always exists when nu1 > 6*nu: odd multiples of 1/nu1 are spaced
/// 2/nu1 < 1/(3nu) apart.
inline Int base_odd_in_third(const Int& nu1, const TargetSpec& spec) {
    Enclosure third = middle_third(spec);
    Rat lo_bound = third.lo * Rat(nu1); // o must be >= this
    Int o = rat_floor(lo_bound);
    if (Rat(o) < lo_bound)
        ++o;
    if (!is_odd(o))
        ++o;
    if (Rat(o, nu1) <= third.hi)
        return o;
    throw Error("no-odd-in-third",
                "no odd multiple of 1/" + nu1.str() + " in the middle third");
}

/// Lemma-style targeted construction: chain data plus a certified enclosure
/// exactly contained in the target interval.
struct TargetedOmega {
    TargetSpec spec;
    std::size_t start_index = 0;   // 1-based index of nu_1 in the input sequence
    std::vector<Int> nu_chain;     // consecutive members from nu_1 to the end
    std::vector<Int> odd_chain;    // 2*mu_k + 1, aligned with nu_chain
    std::vector<Rat> xi_chain;     // xi_k = odd_k / nu_k
    Enclosure enclosure;
    Rat center;
    Rat radius;
};

/// Builds the chain along consecutive members after nu_1 and certifies the
/// enclosure is exactly inside [(mu-1)/nu, mu/nu]. The radius reuses the
/// tail majorant at the original index of the last member used.
inline TargetedOmega targeted_omega(const LacunarySequence& seq, const TargetSpec& spec) {
    if (spec.nu < 1 || spec.mu < 1 || spec.mu > 2 * spec.nu)
        throw Error("bad-target", "invalid target spec");
    Nu1 base = find_nu1(seq, spec.nu);

    TargetedOmega out;
    out.spec = spec;
    out.start_index = base.index;
    const std::size_t K = seq.size();
    out.nu_chain.reserve(K - base.index + 1);
    out.odd_chain.reserve(K - base.index + 1);
    out.xi_chain.reserve(K - base.index + 1);

    out.nu_chain.push_back(base.value);
    out.odd_chain.push_back(base_odd_in_third(base.value, spec));
    out.xi_chain.push_back(Rat(out.odd_chain.back(), base.value));
    for (std::size_t k = base.index + 1; k <= K; ++k) {
        out.nu_chain.push_back(seq.term(k));
        out.odd_chain.push_back(select_next_odd(out.odd_chain.back(), seq.term(k - 1), seq.term(k)));
        out.xi_chain.push_back(Rat(out.odd_chain.back(), seq.term(k)));
    }

    out.center = out.xi_chain.back();
    out.radius = Rat(1, pow2(static_cast<unsigned>(K)) * seq.term(K));
    out.enclosure = Enclosure{out.center - out.radius, out.center + out.radius};

    if (!subset_of(out.enclosure, target_interval(spec)))
        throw Error("insufficient-depth",
                    "enclosure not certifiably inside the target at depth " + std::to_string(K));
    return out;
}

} // namespace lacuna
