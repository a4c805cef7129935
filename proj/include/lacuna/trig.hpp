#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include "lacuna/omega.hpp"

// Amplitude-phase machinery and the resonance demonstrator. Floating point
// enters the library only here, and only after exact argument reduction:
// cos(n*pi*Omega) is rewritten as -cos(pi*Theta) with Theta the exact
// rational residual to the targeted odd integer, so the trig function is
// only ever evaluated at a small argument. Feeding n*pi*Omega to cos()
// directly is forbidden for large n (catastrophic precision loss).

namespace lacuna {

/// One series term a*sin(nx) + b*cos(nx).
struct CoefficientPair {
    std::uint64_t n = 1;
    double a = 0.0;
    double b = 0.0;
};

/// Amplitude-phase form rho*cos(phi - nx), phi in [0, 2pi).
struct PolarTerm {
    double rho = 0.0;
    double phi = 0.0;
};

/// rho = sqrt(a^2 + b^2); phi is the unique angle in [0, 2pi) with
/// a = rho*sin(phi), b = rho*cos(phi). Zero amplitude maps to phi = 0.
inline PolarTerm to_polar(double a, double b) {
    PolarTerm t;
    t.rho = std::hypot(a, b);
    if (t.rho == 0.0)
        return t;
    constexpr double two_pi = 2.0 * std::numbers::pi;
    t.phi = std::atan2(a, b);
    if (t.phi < 0.0)
        t.phi += two_pi;
    if (t.phi >= two_pi)
        t.phi -= two_pi;
    if (t.phi == 0.0)
        t.phi = 0.0; // normalize -0.0
    return t;
}

inline double term_value(const CoefficientPair& p, double x) {
    double nx = static_cast<double>(p.n) * x;
    return p.a * std::sin(nx) + p.b * std::cos(nx);
}

inline double polar_term_value(std::uint64_t n, const PolarTerm& t, double x) {
    return t.rho * std::cos(t.phi - static_cast<double>(n) * x);
}

/// Truncated series value. Summation order is fixed (ascending frequency)
/// so results are reproducible regardless of input order.
inline double partial_sum(std::vector<CoefficientPair> series, double x) {
    std::sort(series.begin(), series.end(),
              [](const CoefficientPair& l, const CoefficientPair& r) { return l.n < r.n; });
    double sum = 0.0;
    for (std::size_t i = 0; i < series.size(); ++i) {
        if (i >= 1 && series[i].n == series[i - 1].n)
            throw Error("duplicate-frequency",
                        "frequency " + std::to_string(series[i].n) + " appears twice");
        sum += term_value(series[i], x);
    }
    return sum;
}

/// Certificate that cos(n_s * pi * Omega) is pinned near -1 at the
/// resonance point x* = pi * Omega. theta_hi comes from exact enclosure
/// arithmetic; cos_bound = (pi*theta_hi)^2/2 dominates |cos(n_s pi Omega)+1|;
/// midpoint_value evaluates the same quantity in floating point at the
/// enclosure center after exact reduction mod the targeted odd.
struct ResonanceCertificate {
    std::size_t s = 0;
    Int n_s;
    Int odd; // 2z+1
    Rat theta_hi;
    Rat theta_mid;
    Rat two_pow_neg_s;
    double cos_bound = 0.0;
    double midpoint_value = 0.0;
    double x_star = 0.0;
};

inline ResonanceCertificate resonance_point(const OmegaEnclosure& omega,
                                            const LacunarySequence& seq, std::size_t s) {
    if (omega.depth != seq.size())
        throw Error("depth-mismatch", "enclosure depth does not match the sequence");
    if (s < 2 || s + 2 > seq.size())
        throw Error("insufficient-depth-for-s",
                    "resonance certificate requires 2 <= s <= K-2; got s = " + std::to_string(s));

    ApproximantChain chain = approximants(seq);
    ResonanceCertificate cert;
    cert.s = s;
    cert.n_s = seq.term(s);
    cert.odd = chain.odds[s - 2];
    cert.theta_mid = rat_abs(Rat(cert.n_s) * omega.center - Rat(cert.odd));
    cert.theta_hi =
        abs_image(shifted(scaled(omega.enclosure, Rat(cert.n_s)), Rat(-cert.odd))).hi;
    cert.two_pow_neg_s = Rat(1, pow2(static_cast<unsigned>(s)));

    double pi_theta_hi = std::numbers::pi * cert.theta_hi.convert_to<double>();
    cert.cos_bound = pi_theta_hi * pi_theta_hi / 2.0;
    // cos(n_s*pi*Omega) = cos(pi*(odd +- theta)) = -cos(pi*theta), so the
    // float evaluation only ever sees the small residual.
    cert.midpoint_value = 1.0 - std::cos(std::numbers::pi * cert.theta_mid.convert_to<double>());
    cert.x_star = std::numbers::pi * omega.center.convert_to<double>();
    return cert;
}

struct DecayRow {
    std::uint64_t n = 0;
    double rho = 0.0;
    double grid_sup = 0.0;
    bool flagged = false;
};

/// Evidence harness for coefficient decay on (alpha, beta): per frequency,
/// the amplitude rho_n against the grid supremum of |term_n|. A row is
/// flagged when rho_n > eps_rho yet the grid never sees |term_n| >= eps_term,
/// i.e. a large amplitude hiding below the term threshold on the whole
/// window. Finite data cannot decide limits, so flags mark rows worth
/// inspecting, not verdicts.
struct DecayReport {
    double alpha = 0.0;
    double beta = 0.0;
    std::size_t grid_points = 0;
    double eps_term = 0.0;
    double eps_rho = 0.0;
    std::vector<DecayRow> rows; // ascending frequency
};

inline DecayReport decay_check(std::vector<CoefficientPair> series, double alpha, double beta,
                               std::size_t grid_points, double eps_term, double eps_rho) {
    if (!(alpha < beta))
        throw Error("bad-interval", "decay check requires alpha < beta");
    std::sort(series.begin(), series.end(),
              [](const CoefficientPair& l, const CoefficientPair& r) { return l.n < r.n; });
    std::uint64_t max_n = 0;
    for (std::size_t i = 0; i < series.size(); ++i) {
        if (i >= 1 && series[i].n == series[i - 1].n)
            throw Error("duplicate-frequency",
                        "frequency " + std::to_string(series[i].n) + " appears twice");
        max_n = std::max(max_n, series[i].n);
    }
    // Anti-aliasing floor: at least 4 samples per period of the fastest term.
    double floor_pts =
        4.0 * static_cast<double>(max_n) * (beta - alpha) / (2.0 * std::numbers::pi);
    if (static_cast<double>(grid_points) < floor_pts)
        throw Error("grid-too-coarse", "grid of " + std::to_string(grid_points) +
                                           " points is below the anti-aliasing floor " +
                                           std::to_string(floor_pts));

    DecayReport report;
    report.alpha = alpha;
    report.beta = beta;
    report.grid_points = grid_points;
    report.eps_term = eps_term;
    report.eps_rho = eps_rho;
    report.rows.reserve(series.size());

    const double h = (beta - alpha) / static_cast<double>(grid_points);
    for (const CoefficientPair& p : series) {
        DecayRow row;
        row.n = p.n;
        row.rho = std::hypot(p.a, p.b);
        for (std::size_t i = 0; i < grid_points; ++i) {
            double x = alpha + (static_cast<double>(i) + 0.5) * h; // interior of (alpha, beta)
            row.grid_sup = std::max(row.grid_sup, std::abs(term_value(p, x)));
        }
        row.flagged = row.rho > eps_rho && row.grid_sup < eps_term;
        report.rows.push_back(row);
    }
    return report;
}

} // namespace lacuna
