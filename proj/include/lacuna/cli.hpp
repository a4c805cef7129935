#pragma once

#include <fstream>
#include <iostream>
#include <ostream>
#include <string>

#include "lacuna/report.hpp"
#include "lacuna/targeting.hpp"

// Subcommand dispatch shared by the CLI binary and the test suite.
// Exit-code contract: 0 success, 1 domain error (machine-readable error
// object on the error stream), 2 usage error.

namespace lacuna {

struct RunConfig {
    enum class Format { json, csv };

    std::string command;
    std::size_t depth = 0;
    Int seed = 1;
    Int mu = 1;
    Int nu = 1;
    bool theta_table = false;
    std::size_t s_lo = 0; // 0 = full certified range
    std::size_t s_hi = 0;
    std::size_t levels = 10;
    std::size_t grid = 0;
    double a = 0.0;
    double b = 0.0;
    double alpha = 0.0;
    double beta = 0.0;
    double eps_term = 1e-3;
    double eps_rho = 1e-3;
    std::string input_path;
    int digits = 12;
    Format format = Format::json;
};

namespace detail {

inline Json run_header(const RunConfig& cfg, Json params) {
    return Json{{"tool", kToolName},
                {"version", kToolVersion},
                {"command", cfg.command},
                {"params", std::move(params)}};
}

inline void emit(std::ostream& out, Json body) { out << body.dump(2) << "\n"; }

inline Json theta_row(const LacunarySequence& seq, std::size_t s, int digits) {
    ThetaResidual th = theta(seq, s);
    Rat bound(1, pow2(static_cast<unsigned>(s)));
    Int odd = 2 * th.z + 1;
    return Json{{"s", s},
                {"n", seq.term(s).str()},
                {"odd", odd.str()},
                {"theta_hi", rational_json(th.bounds.hi, digits)},
                {"bound", rational_json(bound, digits)},
                {"pass", th.bounds.hi < bound}};
}

inline void run_gen_seq(const RunConfig& cfg, std::ostream& out) {
    LacunarySequence seq = LacunarySequence::generate(cfg.depth, cfg.seed);
    Json terms = Json::array();
    for (const Int& t : seq.terms())
        terms.push_back(t.str());
    Json body{{"header", run_header(cfg, Json{{"depth", cfg.depth}, {"seed", cfg.seed.str()}})},
              {"sequence", std::move(terms)}};
    emit(out, std::move(body));
}

inline void run_omega(const RunConfig& cfg, std::ostream& out) {
    LacunarySequence seq = LacunarySequence::generate(cfg.depth, cfg.seed);
    ApproximantChain chain = approximants(seq);
    OmegaEnclosure om = omega_enclosure(seq);

    Json rows = Json::array();
    if (cfg.theta_table)
        for (std::size_t s = 2; s + 2 <= seq.size(); ++s)
            rows.push_back(theta_row(seq, s, cfg.digits));

    if (cfg.format == RunConfig::Format::csv) {
        out << "s,n,odd,theta_hi,theta_hi_approx,bound,bound_approx,pass\n";
        for (const Json& row : rows)
            out << row["s"] << "," << row["n"].get<std::string>() << ","
                << row["odd"].get<std::string>() << ","
                << row["theta_hi"]["num"].get<std::string>() << "/"
                << row["theta_hi"]["den"].get<std::string>() << ","
                << row["theta_hi"]["approx"].get<std::string>() << ","
                << row["bound"]["num"].get<std::string>() << "/"
                << row["bound"]["den"].get<std::string>() << ","
                << row["bound"]["approx"].get<std::string>() << ","
                << (row["pass"].get<bool>() ? "true" : "false") << "\n";
        return;
    }

    Json terms = Json::array(), odds = Json::array(), q = Json::array();
    for (const Int& t : seq.terms())
        terms.push_back(t.str());
    for (const Int& o : chain.odds)
        odds.push_back(o.str());
    for (const Rat& qk : chain.q)
        q.push_back(rational_json(qk, cfg.digits));

    Json body{{"header", run_header(cfg, Json{{"depth", cfg.depth},
                                              {"seed", cfg.seed.str()},
                                              {"theta_table", cfg.theta_table}})},
              {"sequence", std::move(terms)},
              {"odd_chain", std::move(odds)},
              {"q_chain", std::move(q)},
              {"enclosure", enclosure_json(om.enclosure, cfg.digits)},
              {"center", rational_json(om.center, cfg.digits)},
              {"radius", rational_json(om.radius, cfg.digits)}};
    if (cfg.theta_table)
        body["theta_table"] = std::move(rows);
    emit(out, std::move(body));
}

inline void run_target(const RunConfig& cfg, std::ostream& out) {
    TargetSpec spec = make_target_spec(cfg.mu, cfg.nu);
    LacunarySequence seq = LacunarySequence::generate(cfg.depth, cfg.seed);
    TargetedOmega t = targeted_omega(seq, spec);

    Json nu_chain = Json::array(), odd_chain = Json::array(), xi_chain = Json::array();
    for (const Int& v : t.nu_chain)
        nu_chain.push_back(v.str());
    for (const Int& o : t.odd_chain)
        odd_chain.push_back(o.str());
    for (const Rat& xi : t.xi_chain)
        xi_chain.push_back(rational_json(xi, cfg.digits));

    Json body{{"header", run_header(cfg, Json{{"mu", cfg.mu.str()},
                                              {"nu", cfg.nu.str()},
                                              {"depth", cfg.depth},
                                              {"seed", cfg.seed.str()}})},
              {"target", Json{{"mu", spec.mu.str()},
                              {"nu", spec.nu.str()},
                              {"interval", enclosure_json(target_interval(spec), cfg.digits)},
                              {"middle_third", enclosure_json(middle_third(spec), cfg.digits)}}},
              {"nu1", Json{{"index", t.start_index}, {"value", t.nu_chain.front().str()}}},
              {"nu_chain", std::move(nu_chain)},
              {"odd_chain", std::move(odd_chain)},
              {"xi_chain", std::move(xi_chain)},
              {"enclosure", enclosure_json(t.enclosure, cfg.digits)},
              {"contained", subset_of(t.enclosure, target_interval(spec))}};
    emit(out, std::move(body));
}

inline std::vector<Rat> read_sizes_input(const RunConfig& cfg) {
    if (cfg.input_path == "-")
        return read_sizes_csv(std::cin);
    std::ifstream file(cfg.input_path);
    if (!file)
        throw Error("io-error", "cannot open input file \"" + cfg.input_path + "\"");
    return read_sizes_csv(file);
}

inline void run_sieve(const RunConfig& cfg, std::ostream& out) {
    SizeSequence sizes = SizeSequence::from(read_sizes_input(cfg));
    SieveReport report = sieve(sizes, Ladder{}, cfg.levels);
    if (cfg.format == RunConfig::Format::csv) {
        sieve_report_csv(out, report, cfg.digits);
        return;
    }
    Json body{{"header", run_header(cfg, Json{{"input", cfg.input_path},
                                              {"levels", cfg.levels}})},
              {"input_count", sizes.size()}};
    Json report_json = sieve_report_json(report, cfg.digits);
    body["levels"] = std::move(report_json["levels"]);
    body["survivors"] = std::move(report_json["survivors"]);
    emit(out, std::move(body));
}

inline void run_polar(const RunConfig& cfg, std::ostream& out) {
    PolarTerm t = to_polar(cfg.a, cfg.b);
    Json body{{"header", run_header(cfg, Json{{"a", cfg.a}, {"b", cfg.b}})},
              {"a", cfg.a},
              {"b", cfg.b},
              {"rho", t.rho},
              {"phi", t.phi}};
    emit(out, std::move(body));
}

inline void run_resonance(const RunConfig& cfg, std::ostream& out) {
    LacunarySequence seq = LacunarySequence::generate(cfg.depth, cfg.seed);
    OmegaEnclosure om = omega_enclosure(seq);
    std::size_t lo = cfg.s_lo, hi = cfg.s_hi;
    if (lo == 0) { // default: full certified range
        if (seq.size() < 4)
            throw Error("insufficient-depth-for-s",
                        "no certified residual range at depth " + std::to_string(seq.size()));
        lo = 2;
        hi = seq.size() - 2;
    }
    if (hi < lo)
        throw Error("insufficient-depth-for-s", "empty s-range");

    Json rows = Json::array();
    for (std::size_t s = lo; s <= hi; ++s) {
        ResonanceCertificate cert = resonance_point(om, seq, s);
        rows.push_back(Json{{"s", s},
                            {"n", cert.n_s.str()},
                            {"odd", cert.odd.str()},
                            {"theta_hi", rational_json(cert.theta_hi, cfg.digits)},
                            {"theta_mid", rational_json(cert.theta_mid, cfg.digits)},
                            {"pow2_bound", rational_json(cert.two_pow_neg_s, cfg.digits)},
                            {"cos_bound", cert.cos_bound},
                            {"midpoint_value", cert.midpoint_value},
                            {"pass", cert.theta_hi < cert.two_pow_neg_s}});
    }

    Json body{{"header", run_header(cfg, Json{{"depth", cfg.depth},
                                              {"seed", cfg.seed.str()},
                                              {"s_lo", lo},
                                              {"s_hi", hi}})},
              {"enclosure", enclosure_json(om.enclosure, cfg.digits)},
              {"x_star", Json{{"description", "pi * Omega"},
                              {"approx", std::numbers::pi *
                                             om.center.convert_to<double>()}}},
              {"rows", std::move(rows)}};
    emit(out, std::move(body));
}

inline void run_decay_check(const RunConfig& cfg, std::ostream& out) {
    std::vector<CoefficientPair> series;
    if (cfg.input_path == "-") {
        series = read_series_csv(std::cin);
    } else {
        std::ifstream file(cfg.input_path);
        if (!file)
            throw Error("io-error", "cannot open series file \"" + cfg.input_path + "\"");
        series = read_series_csv(file);
    }
    DecayReport report =
        decay_check(std::move(series), cfg.alpha, cfg.beta, cfg.grid, cfg.eps_term, cfg.eps_rho);
    if (cfg.format == RunConfig::Format::csv) {
        decay_report_csv(out, report);
        return;
    }
    Json body{{"header", run_header(cfg, Json{{"series", cfg.input_path},
                                              {"alpha", cfg.alpha},
                                              {"beta", cfg.beta},
                                              {"grid", cfg.grid},
                                              {"eps_term", cfg.eps_term},
                                              {"eps_rho", cfg.eps_rho}})}};
    Json report_json = decay_report_json(report);
    for (auto& [key, value] : report_json.items())
        body[key] = std::move(value);
    emit(out, std::move(body));
}

} // namespace detail

/// Runs the configured subcommand. The report goes to `out`; domain
/// errors produce a machine-readable object on `err_out` and exit code 1.
inline int dispatch(const RunConfig& cfg, std::ostream& out, std::ostream& err_out) {
    try {
        if (cfg.command == "gen-seq")
            detail::run_gen_seq(cfg, out);
        else if (cfg.command == "omega")
            detail::run_omega(cfg, out);
        else if (cfg.command == "target")
            detail::run_target(cfg, out);
        else if (cfg.command == "sieve")
            detail::run_sieve(cfg, out);
        else if (cfg.command == "polar")
            detail::run_polar(cfg, out);
        else if (cfg.command == "resonance")
            detail::run_resonance(cfg, out);
        else if (cfg.command == "decay-check")
            detail::run_decay_check(cfg, out);
        else {
            err_out << "unknown subcommand \"" << cfg.command << "\"\n";
            return 2;
        }
    } catch (const Error& e) {
        err_out << error_json(e.id(), e.what()).dump(2) << "\n";
        return 1;
    }
    return 0;
}

} // namespace lacuna
