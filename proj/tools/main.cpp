#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "lacuna/cli.hpp"

namespace {

lacuna::Int parse_int_arg(const std::string& text, const std::string& flag) {
    try {
        return lacuna::Int(text);
    } catch (const std::exception&) {
        throw CLI::ValidationError(flag, "expected an integer, got \"" + text + "\"");
    }
}

/// "LO..HI" -> (lo, hi).
std::pair<std::size_t, std::size_t> parse_s_range(const std::string& text) {
    auto dots = text.find("..");
    if (dots == std::string::npos)
        throw CLI::ValidationError("--s-range", "expected LO..HI, got \"" + text + "\"");
    try {
        std::size_t lo = std::stoull(text.substr(0, dots));
        std::size_t hi = std::stoull(text.substr(dots + 2));
        if (lo < 1 || hi < lo)
            throw CLI::ValidationError("--s-range", "need 1 <= LO <= HI");
        return {lo, hi};
    } catch (const CLI::ValidationError&) {
        throw;
    } catch (const std::exception&) {
        throw CLI::ValidationError("--s-range", "expected LO..HI, got \"" + text + "\"");
    }
}

std::filesystem::path resolve_out_path(const std::string& out) {
    std::filesystem::path p(out);
    if (const char* dir = std::getenv("LACUNA_OUT_DIR"); dir && p.is_relative())
        return std::filesystem::path(dir) / p;
    return p;
}

} // namespace

int main(int argc, char** argv) {
    using lacuna::RunConfig;

    CLI::App app{"lacuna: exact-arithmetic toolkit for resonant numbers on "
                 "super-lacunary sequences"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string seed_str = "1", mu_str = "1", nu_str = "1", s_range_str, format_str = "json",
                out_path;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--digits", cfg.digits, "significant digits for decimal approximations")
            ->default_val(12)
            ->check(CLI::PositiveNumber);
        sub->add_option("--out", out_path,
                        "write the report to this file instead of stdout (relative paths "
                        "resolve against $LACUNA_OUT_DIR when set)");
    };
    auto add_seq = [&](CLI::App* sub) {
        sub->add_option("--depth", cfg.depth, "prefix length K")->required();
        sub->add_option("--seed", seed_str, "first term n_1")->default_val("3");
    };

    CLI::App* gen = app.add_subcommand("gen-seq", "generate a super-lacunary sequence prefix");
    add_seq(gen);
    add_common(gen);

    CLI::App* omega = app.add_subcommand(
        "omega", "odd-approximant chain and certified enclosure of the resonant number");
    add_seq(omega);
    omega->add_flag("--theta-table", cfg.theta_table,
                    "include certified residual bounds for s = 2..K-2");
    omega->add_option("--format", format_str, "json or csv (csv needs --theta-table)")
        ->check(CLI::IsMember({"json", "csv"}));
    add_common(omega);

    CLI::App* target =
        app.add_subcommand("target", "steer the resonant number into [(mu-1)/nu, mu/nu]");
    target->add_option("--mu", mu_str, "target subinterval number (1..2*nu)")->required();
    target->add_option("--nu", nu_str, "number of length-1/nu subdivisions of [0,2]")->required();
    add_seq(target);
    add_common(target);

    CLI::App* sieve = app.add_subcommand("sieve", "run the deletion sieve over a size list");
    sieve->add_option("--input", cfg.input_path, "CSV of positive rationals, one per line (\"-\" = stdin)")
        ->required();
    sieve->add_option("--levels", cfg.levels, "number of ladder levels")->default_val(10);
    sieve->add_option("--format", format_str, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    add_common(sieve);

    CLI::App* polar = app.add_subcommand("polar", "amplitude-phase form of a*sin + b*cos");
    polar->add_option("--a", cfg.a, "sine coefficient")->required();
    polar->add_option("--b", cfg.b, "cosine coefficient")->required();
    add_common(polar);

    CLI::App* resonance = app.add_subcommand(
        "resonance", "certified near -1 pinning of cos(n_s * pi * Omega) at the resonance point");
    add_seq(resonance);
    resonance->add_option("--s-range", s_range_str, "certified index range LO..HI (default 2..K-2)");
    add_common(resonance);

    CLI::App* decay = app.add_subcommand("decay-check", "amplitude vs grid-sup decay harness");
    decay->add_option("--series", cfg.input_path, "CSV with header n,a,b (\"-\" = stdin)")
        ->required();
    decay->add_option("--alpha", cfg.alpha, "interval left endpoint")->required();
    decay->add_option("--beta", cfg.beta, "interval right endpoint")->required();
    decay->add_option("--grid", cfg.grid, "number of sample points")->required();
    decay->add_option("--eps-term", cfg.eps_term, "grid-sup threshold")->default_val(1e-3);
    decay->add_option("--eps-rho", cfg.eps_rho, "amplitude threshold")->default_val(1e-3);
    decay->add_option("--format", format_str, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    add_common(decay);

    try {
        app.parse(argc, argv);
        cfg.command = app.get_subcommands().front()->get_name();
        cfg.seed = parse_int_arg(seed_str, "--seed");
        cfg.mu = parse_int_arg(mu_str, "--mu");
        cfg.nu = parse_int_arg(nu_str, "--nu");
        if (!s_range_str.empty())
            std::tie(cfg.s_lo, cfg.s_hi) = parse_s_range(s_range_str);
        cfg.format = format_str == "csv" ? RunConfig::Format::csv : RunConfig::Format::json;
        if (cfg.format == RunConfig::Format::csv && cfg.command == "omega" && !cfg.theta_table)
            throw CLI::ValidationError("--format", "csv output for omega requires --theta-table");
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2; // help/version exit 0, any usage problem exits 2
    }

    if (!out_path.empty()) {
        std::ofstream file(resolve_out_path(out_path));
        if (!file) {
            std::cerr << lacuna::error_json("io-error", "cannot open output file \"" + out_path + "\"")
                             .dump(2)
                      << "\n";
            return 1;
        }
        return lacuna::dispatch(cfg, file, std::cout);
    }
    return lacuna::dispatch(cfg, std::cout, std::cout);
}
