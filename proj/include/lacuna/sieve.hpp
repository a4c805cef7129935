#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lacuna/rational.hpp"

// Deletion sieve over a finite prefix of a sequence of sizes: pass k
// removes every remaining member strictly bigger than ladder level k.
// Finite prefixes cannot decide limits, so the sieve reports exact finite
// behaviour only; "consistent up to level L" is the strongest verdict.

namespace lacuna {

/// Finite list of sizes (positive rationals), 1-indexed in all reports.
class SizeSequence {
public:
    static SizeSequence from(std::vector<Rat> values) {
        for (std::size_t i = 0; i < values.size(); ++i)
            if (values[i] <= 0)
                throw Error("bad-size", "size at index " + std::to_string(i + 1) +
                                            " is not positive");
        return SizeSequence(std::move(values));
    }

    std::size_t size() const { return values_.size(); }
    const Rat& at(std::size_t i) const { return values_.at(i - 1); } // 1-based
    const std::vector<Rat>& values() const { return values_; }

private:
    explicit SizeSequence(std::vector<Rat> values) : values_(std::move(values)) {}
    std::vector<Rat> values_;
};

/// Strictly decreasing positive levels Delta_1 > Delta_2 > ...
/// The default ladder is 1/k and never runs out; an explicit ladder is
/// validated up front and exhausts after its last level.
class Ladder {
public:
    Ladder() = default; // harmonic default

    static Ladder explicit_levels(std::vector<Rat> levels) {
        for (std::size_t i = 0; i < levels.size(); ++i) {
            if (levels[i] <= 0)
                throw Error("bad-ladder", "ladder level " + std::to_string(i + 1) +
                                              " is not positive");
            if (i >= 1 && !(levels[i] < levels[i - 1]))
                throw Error("bad-ladder",
                            "ladder not strictly decreasing at level " + std::to_string(i + 1));
        }
        Ladder l;
        l.levels_ = std::move(levels);
        return l;
    }

    bool has_level(std::size_t k) const {
        return k >= 1 && (!levels_ || k <= levels_->size());
    }

    Rat level(std::size_t k) const {
        if (!has_level(k))
            throw Error("ladder-exhausted", "ladder has no level " + std::to_string(k));
        return levels_ ? (*levels_)[k - 1] : Rat(1, Int(k));
    }

private:
    std::optional<std::vector<Rat>> levels_; // nullopt = harmonic 1/k
};

struct SieveLevel {
    std::size_t level = 0;
    Rat delta;
    std::vector<std::size_t> deleted;        // 1-based indices removed this pass
    std::optional<std::size_t> last_deleted; // none when the pass deleted nothing
    std::optional<Rat> residual_max;         // max of survivors; none when empty
};

struct SieveReport {
    std::vector<SieveLevel> levels;
    std::vector<std::size_t> survivors; // indices still present after the last pass
};

/// Runs `levels` sequential deletion passes. Pass k removes every remaining
/// value strictly greater than Delta_k; boundary values equal to Delta_k
/// survive.
inline SieveReport sieve(const SizeSequence& seq, const Ladder& ladder, std::size_t levels) {
    std::vector<std::size_t> alive;
    alive.reserve(seq.size());
    for (std::size_t i = 1; i <= seq.size(); ++i)
        alive.push_back(i);

    SieveReport report;
    report.levels.reserve(levels);
    for (std::size_t k = 1; k <= levels; ++k) {
        SieveLevel pass;
        pass.level = k;
        pass.delta = ladder.level(k);

        std::vector<std::size_t> next;
        next.reserve(alive.size());
        for (std::size_t idx : alive) {
            if (seq.at(idx) > pass.delta)
                pass.deleted.push_back(idx);
            else
                next.push_back(idx);
        }
        if (!pass.deleted.empty())
            pass.last_deleted = pass.deleted.back();
        alive = std::move(next);
        if (!alive.empty()) {
            Rat m = seq.at(alive.front());
            for (std::size_t idx : alive)
                if (seq.at(idx) > m)
                    m = seq.at(idx);
            pass.residual_max = std::move(m);
        }
        report.levels.push_back(std::move(pass));
    }
    report.survivors = std::move(alive);
    return report;
}

/// Smallest index i such that every value at index >= i is < delta;
/// nullopt when the last value is >= delta. Empty input yields 1 (vacuous).
inline std::optional<std::size_t> eventually_below(const SizeSequence& seq, const Rat& delta) {
    if (delta <= 0)
        throw Error("bad-size", "delta must be positive");
    std::size_t i = seq.size();
    while (i >= 1 && seq.at(i) < delta)
        --i;
    if (i == seq.size() && !seq.values().empty())
        return std::nullopt;
    return i + 1;
}

/// Probes a subsequence (given by a strictly increasing 1-based selector)
/// for a member < delta. Returns the first witness index into the base
/// sequence, or nullopt when none qualifies.
inline std::optional<std::size_t> subsequence_min_check(const SizeSequence& seq,
                                                        const std::vector<std::size_t>& selector,
                                                        const Rat& delta) {
    if (delta <= 0)
        throw Error("bad-size", "delta must be positive");
    for (std::size_t i = 0; i < selector.size(); ++i) {
        if (selector[i] < 1 || selector[i] > seq.size())
            throw Error("bad-selector",
                        "selector index " + std::to_string(selector[i]) + " out of range");
        if (i >= 1 && selector[i] <= selector[i - 1])
            throw Error("bad-selector", "selector not strictly increasing");
    }
    for (std::size_t idx : selector)
        if (seq.at(idx) < delta)
            return idx;
    return std::nullopt;
}

} // namespace lacuna
