#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "lacuna/decimal.hpp"
#include "lacuna/enclosure.hpp"
#include "lacuna/sieve.hpp"
#include "lacuna/trig.hpp"

// Serialization boundary: exact rationals travel as decimal-string
// num/den pairs plus a caller-sized decimal approximation. JSON is the
// canonical report format; tables (theta, sieve, decay) also emit CSV.

namespace lacuna {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolName = "lacuna";
inline constexpr const char* kToolVersion = "0.1.0";

inline Json rational_json(const Rat& r, int digits) {
    return Json{{"num", numerator(r).str()},
                {"den", denominator(r).str()},
                {"approx", decimal_string(r, digits)}};
}

inline Json enclosure_json(const Enclosure& e, int digits) {
    return Json{{"lo", rational_json(e.lo, digits)},
                {"hi", rational_json(e.hi, digits)},
                {"width", rational_json(width(e), digits)}};
}

inline Json error_json(const std::string& id, const std::string& message) {
    return Json{{"error", Json{{"id", id}, {"message", message}}}};
}

/// Parses "p/q", a plain decimal ("-3.25"), or an integer, exactly.
inline Rat parse_rational(const std::string& text) {
    auto bad = [&]() -> Error {
        return Error("bad-rational", "cannot parse rational from \"" + text + "\"");
    };
    std::string s = text;
    // trim ASCII whitespace
    const char* ws = " \t\r\n";
    auto b = s.find_first_not_of(ws);
    auto e = s.find_last_not_of(ws);
    if (b == std::string::npos)
        throw bad();
    s = s.substr(b, e - b + 1);

    auto slash = s.find('/');
    if (slash != std::string::npos) {
        std::string ns = s.substr(0, slash), ds = s.substr(slash + 1);
        if (ns.empty() || ds.empty())
            throw bad();
        try {
            return normalize_rational(Int(ns), Int(ds));
        } catch (const Error&) {
            throw;
        } catch (const std::exception&) {
            throw bad();
        }
    }

    bool negative = false;
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        negative = s[i] == '-';
        ++i;
    }
    std::string int_part, frac_part;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9')
        int_part += s[i++];
    if (i < s.size() && s[i] == '.') {
        ++i;
        while (i < s.size() && s[i] >= '0' && s[i] <= '9')
            frac_part += s[i++];
    }
    if (i != s.size() || (int_part.empty() && frac_part.empty()))
        throw bad();
    Int num = Int(int_part.empty() ? "0" : int_part) * detail::pow10(static_cast<int>(frac_part.size()));
    if (!frac_part.empty())
        num += Int(frac_part);
    if (negative)
        num = -num;
    return normalize_rational(num, detail::pow10(static_cast<int>(frac_part.size())));
}

/// Sieve input: one positive rational per line ("p/q" or decimal).
/// Blank lines are skipped.
inline std::vector<Rat> read_sizes_csv(std::istream& in) {
    std::vector<Rat> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r\n") == std::string::npos)
            continue;
        try {
            out.push_back(parse_rational(line));
        } catch (const Error& err) {
            throw Error("bad-input", "line " + std::to_string(lineno) + ": " + err.what());
        }
    }
    return out;
}

/// Series input: header "n,a,b" then one term per line.
inline std::vector<CoefficientPair> read_series_csv(std::istream& in) {
    std::vector<CoefficientPair> out;
    std::string line;
    std::size_t lineno = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++lineno;
        std::string stripped;
        for (char c : line)
            if (c != ' ' && c != '\t' && c != '\r')
                stripped += c;
        if (stripped.empty())
            continue;
        if (!header_seen) {
            if (stripped != "n,a,b")
                throw Error("bad-input", "line " + std::to_string(lineno) +
                                             ": expected header \"n,a,b\"");
            header_seen = true;
            continue;
        }
        auto c1 = stripped.find(',');
        auto c2 = c1 == std::string::npos ? std::string::npos : stripped.find(',', c1 + 1);
        if (c2 == std::string::npos)
            throw Error("bad-input", "line " + std::to_string(lineno) + ": expected n,a,b");
        try {
            CoefficientPair p;
            p.n = std::stoull(stripped.substr(0, c1));
            p.a = std::stod(stripped.substr(c1 + 1, c2 - c1 - 1));
            p.b = std::stod(stripped.substr(c2 + 1));
            if (p.n < 1)
                throw Error("bad-input", "frequency must be >= 1");
            out.push_back(p);
        } catch (const Error&) {
            throw;
        } catch (const std::exception&) {
            throw Error("bad-input", "line " + std::to_string(lineno) + ": expected n,a,b");
        }
    }
    if (!header_seen && !out.empty())
        throw Error("bad-input", "missing header \"n,a,b\"");
    return out;
}

/// Shortest round-trip double rendering, identical to the JSON encoding.
inline std::string double_string(double v) { return Json(v).dump(); }

inline Json sieve_report_json(const SieveReport& report, int digits) {
    Json levels = Json::array();
    for (const SieveLevel& level : report.levels) {
        Json row{{"level", level.level},
                 {"delta", rational_json(level.delta, digits)},
                 {"deleted", level.deleted}};
        row["last_deleted"] =
            level.last_deleted ? Json(*level.last_deleted) : Json(nullptr);
        row["residual_max"] =
            level.residual_max ? rational_json(*level.residual_max, digits) : Json(nullptr);
        levels.push_back(std::move(row));
    }
    return Json{{"levels", std::move(levels)}, {"survivors", report.survivors}};
}

inline void sieve_report_csv(std::ostream& out, const SieveReport& report, int digits) {
    out << "level,delta,deleted,last_deleted,residual_max,residual_max_approx\n";
    for (const SieveLevel& level : report.levels) {
        out << level.level << "," << level.delta << ",";
        for (std::size_t i = 0; i < level.deleted.size(); ++i)
            out << (i ? ";" : "") << level.deleted[i];
        out << ",";
        if (level.last_deleted)
            out << *level.last_deleted;
        out << ",";
        if (level.residual_max)
            out << *level.residual_max << "," << decimal_string(*level.residual_max, digits);
        else
            out << ",";
        out << "\n";
    }
}

inline Json decay_report_json(const DecayReport& report) {
    Json rows = Json::array();
    Json flagged = Json::array();
    for (const DecayRow& row : report.rows) {
        rows.push_back(Json{{"n", row.n},
                            {"rho", row.rho},
                            {"grid_sup", row.grid_sup},
                            {"flagged", row.flagged}});
        if (row.flagged)
            flagged.push_back(row.n);
    }
    return Json{{"alpha", report.alpha},
                {"beta", report.beta},
                {"grid_points", report.grid_points},
                {"eps_term", report.eps_term},
                {"eps_rho", report.eps_rho},
                {"rows", std::move(rows)},
                {"flagged", std::move(flagged)}};
}

inline void decay_report_csv(std::ostream& out, const DecayReport& report) {
    out << "n,rho,grid_sup,flagged\n";
    for (const DecayRow& row : report.rows)
        out << row.n << "," << double_string(row.rho) << "," << double_string(row.grid_sup)
            << "," << (row.flagged ? "true" : "false") << "\n";
}

} // namespace lacuna
