#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "lacuna/rational.hpp"

namespace lacuna {

/// Finite prefix n_1..n_K of a super-lacunary sequence: positive integers
/// with n_k > 2^k * n_{k-1} for every k >= 2 (exponent = 1-based index of
/// the later term; n_1 only needs to be >= 1). The growth law makes the
/// tail sum over any valid extension majorized by a geometric series,
/// which is what every enclosure radius in this library rests on.
class LacunarySequence {
public:
    /// Throws "empty-sequence", "nonpositive-term", or "growth-violation"
    /// (the latter carries the failing index k and both sides of the
    /// comparison in its message).
    static LacunarySequence validate(std::vector<Int> terms) {
        if (terms.empty())
            throw Error("empty-sequence", "lacunary sequence must be nonempty");
        for (std::size_t i = 0; i < terms.size(); ++i) {
            if (terms[i] < 1)
                throw Error("nonpositive-term",
                            "term " + std::to_string(i + 1) + " = " + terms[i].str() +
                                " is not a positive integer");
            if (i >= 1) {
                Int bound = pow2(static_cast<unsigned>(i + 1)) * terms[i - 1];
                if (terms[i] <= bound)
                    throw Error("growth-violation",
                                "growth law fails at k = " + std::to_string(i + 1) + ": n_k = " +
                                    terms[i].str() + " is not > 2^k * n_{k-1} = " + bound.str());
            }
        }
        return LacunarySequence(std::move(terms));
    }

    /// Canonical witness of the growth law: n_1 = seed, n_k = 2^k * n_{k-1} + 1.
    static LacunarySequence generate(std::size_t depth, const Int& seed) {
        if (depth < 1)
            throw Error("empty-sequence", "depth must be >= 1");
        if (seed < 1)
            throw Error("nonpositive-term", "seed must be >= 1");
        std::vector<Int> terms;
        terms.reserve(depth);
        terms.push_back(seed);
        for (std::size_t k = 2; k <= depth; ++k)
            terms.push_back(pow2(static_cast<unsigned>(k)) * terms.back() + 1);
        return LacunarySequence(std::move(terms));
    }

    std::size_t size() const { return terms_.size(); }

    /// 1-based access: term(k) is n_k.
    const Int& term(std::size_t k) const { return terms_.at(k - 1); }

    const std::vector<Int>& terms() const { return terms_; }

private:
    explicit LacunarySequence(std::vector<Int> terms) : terms_(std::move(terms)) {}

    std::vector<Int> terms_;
};

} // namespace lacuna
