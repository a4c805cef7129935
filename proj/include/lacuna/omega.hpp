#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lacuna/enclosure.hpp"
#include "lacuna/lacunary.hpp"

// Construction of the resonant number Omega: a chain of odd integers is
// selected along the sequence so that the rationals q_k = odd_{k-1}/n_k
// telescope with |q_{k-1} - q_k| <= 1/n_k. The limit Omega then satisfies
// n_s * Omega = odd + Theta with a certified residual Theta < 2^-s.
// Everything here is exact; no floating point.

namespace lacuna {

namespace detail {

/// Odd integer closest to t; when t is an even integer both neighbours are
/// at distance exactly 1 and the smaller one is returned.
inline Int nearest_odd(const Rat& t) {
    Int f = rat_floor(t);
    Int lo = is_odd(f) ? f : f - 1;       // greatest odd <= t (or t-1 at even integers)
    Int hi = lo + 2;
    Rat dlo = t - Rat(lo);
    Rat dhi = Rat(hi) - t;
    return dlo <= dhi ? lo : hi;
}

} // namespace detail

/// Base case of the odd-chain selection: the odd o with |o - n2/n1| <= 1,
/// ties resolved toward the smaller candidate.
inline Int select_base_odd(const Int& n1, const Int& n2) {
    return detail::nearest_odd(Rat(n2, n1));
}

/// Recursion step: the odd o with |o - prev * nk1/nk| <= 1, ties toward
/// the smaller candidate.
inline Int select_next_odd(const Int& prev, const Int& nk, const Int& nk1) {
    return detail::nearest_odd(Rat(prev * nk1, nk));
}

/// Odd chain and rational approximants for a sequence prefix.
/// odds[i] pairs with term i+2, so odds.size() == K-1;
/// q[0] = 1/n_1 and q[i] = odds[i-1]/n_{i+1} for i >= 1.
struct ApproximantChain {
    std::vector<Int> odds;
    std::vector<Rat> q;
};

inline ApproximantChain approximants(const LacunarySequence& seq) {
    ApproximantChain chain;
    const std::size_t K = seq.size();
    chain.q.reserve(K);
    chain.q.push_back(Rat(1, seq.term(1)));
    if (K < 2)
        return chain;
    chain.odds.reserve(K - 1);
    chain.odds.push_back(select_base_odd(seq.term(1), seq.term(2)));
    chain.q.push_back(Rat(chain.odds[0], seq.term(2)));
    for (std::size_t k = 3; k <= K; ++k) {
        chain.odds.push_back(select_next_odd(chain.odds.back(), seq.term(k - 1), seq.term(k)));
        chain.q.push_back(Rat(chain.odds.back(), seq.term(k)));
    }
    return chain;
}

/// Certified enclosure of Omega: center q_K, radius 1/(2^K n_K).
/// The radius majorizes the tail sum over every admissible extension of
/// the prefix, so the enclosure contains the limit of any such extension.
struct OmegaEnclosure {
    Enclosure enclosure;
    std::size_t depth = 0;
    Rat center;
    Rat radius;
};

inline OmegaEnclosure omega_enclosure(const LacunarySequence& seq) {
    const std::size_t K = seq.size();
    if (K < 2)
        throw Error("insufficient-depth", "omega enclosure needs depth >= 2");
    ApproximantChain chain = approximants(seq);
    OmegaEnclosure out;
    out.depth = K;
    out.center = chain.q.back();
    out.radius = Rat(1, pow2(static_cast<unsigned>(K)) * seq.term(K));
    out.enclosure = Enclosure{out.center - out.radius, out.center + out.radius};
    return out;
}

/// Residual Theta_{n_s} = |n_s * Omega - (2z+1)| with 2z+1 the s-th chain
/// odd (z = m_{s-1}). bounds is the exact image of n_s * enclosure shifted
/// by -(2z+1) and absolute-valued; its upper end is certified < 2^-s.
struct ThetaResidual {
    std::size_t s = 0;
    Int z;
    Enclosure bounds;
};

inline ThetaResidual theta(const LacunarySequence& seq, std::size_t s) {
    const std::size_t K = seq.size();
    if (s < 2 || s + 2 > K)
        throw Error("insufficient-depth-for-s",
                    "theta requires 2 <= s <= K-2; got s = " + std::to_string(s) +
                        " at depth " + std::to_string(K));
    ApproximantChain chain = approximants(seq);
    OmegaEnclosure omega = omega_enclosure(seq);

    const Int& odd = chain.odds[s - 2]; // 2z+1 pairs with n_s
    ThetaResidual out;
    out.s = s;
    out.z = (odd - 1) / 2;
    out.bounds =
        abs_image(shifted(scaled(omega.enclosure, Rat(seq.term(s))), Rat(-odd)));
    if (!(out.bounds.hi < Rat(1, pow2(static_cast<unsigned>(s)))))
        throw Error("theta-not-certified",
                    "residual bound " + out.bounds.hi.str() + " not < 2^-" + std::to_string(s));
    return out;
}

} // namespace lacuna
