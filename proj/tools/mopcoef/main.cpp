#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cli.hpp"
#include "mop/numerics.hpp"

namespace {

mop::Rational parse_rational(const std::string& text)
{
    try {
        return mop::Rational::parse(text);
    } catch (const std::exception&) {
        throw CLI::ValidationError("not a rational: '" + text + "'");
    }
}

} // namespace

int main(int argc, char** argv)
{
    using mopcoef::Command;
    mopcoef::JobConfig config;
    config.digits = mopcoef::default_precision();

    CLI::App app{"Recurrence coefficients of multiple orthogonal polynomials (r = 2 and general r)"};
    app.require_subcommand(1);

    std::string format = "json";
    std::string variant = "remark";
    std::string c00;
    std::string mu2;
    std::string alpha = "0";
    std::string nu = "0";

    auto common = [&](CLI::App* sub) {
        sub->add_option("-o,--out", config.output_dir, "Output directory");
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--digits", config.digits, "Significant digits of decimal columns (env MOPCOEF_DIGITS)")
            ->check(CLI::PositiveNumber);
        sub->add_option("-N,--max-len", config.max_len, "Grid length N (|n| <= N)")->check(CLI::NonNegativeNumber);
        sub->add_option("--variant", variant, "Update order inside a shift level")
            ->check(CLI::IsMember({"remark", "original"}));
    };

    CLI::App* forward = app.add_subcommand("forward", "step-line table -> nearest-neighbor grid + marginals");
    common(forward);
    forward->add_option("stepline", config.inputs, "Step-line table (.json or .csv)")->required()->check(CLI::ExistingFile);
    auto* c00_opt = forward->add_option("--c00", c00, "Free parameter c_0^(0,0) as p/q");
    auto* mu2_opt = forward->add_option("--mu2-moments", mu2, "m0,m1 of the second measure");
    c00_opt->excludes(mu2_opt);

    CLI::App* inverse = app.add_subcommand("inverse", "r marginal tables -> nearest-neighbor grid (+ step-line for r = 2)");
    common(inverse);
    inverse->add_option("marginals", config.inputs, "Marginal tables, one per measure")->required()->check(CLI::ExistingFile);

    CLI::App* roundtrip = app.add_subcommand("roundtrip", "measures -> inverse -> forward, report the discrepancy");
    common(roundtrip);
    roundtrip->add_option("measures", config.inputs, "Two measure files; a random pair when omitted")->check(CLI::ExistingFile);
    roundtrip->add_option("--seed", config.seed, "Seed of the random pair");
    roundtrip->add_option("--support", config.support, "Support size of random measures");

    CLI::App* bessel = app.add_subcommand("bessel", "Recurrence table of the first weight of the K_nu system");
    common(bessel);
    bessel->add_option("--alpha", alpha, "alpha as p/q");
    bessel->add_option("--nu", nu, "nu as p/q");
    bessel->add_option("--rows", config.rows, "Largest n printed")->check(CLI::NonNegativeNumber);

    CLI::App* verify = app.add_subcommand("verify", "Oracle and identity checks on random measure systems");
    common(verify);
    verify->add_option("--seed", config.seed, "First seed");
    verify->add_option("--seeds", config.seeds, "Number of seeds")->check(CLI::PositiveNumber);
    verify->add_option("-r", config.r, "Number of measures")->check(CLI::Range(2, 8));
    verify->add_option("--support", config.support, "Support size of random measures");
    verify->add_option("--threads", config.threads, "Worker threads (0 = hardware)");

    try {
        app.parse(argc, argv);
        config.format = format == "csv" ? mop::io::Format::csv : mop::io::Format::json;
        config.variant = variant == "original" ? mop::ShiftVariant::original : mop::ShiftVariant::remark;
        if (!c00.empty()) {
            config.c00 = parse_rational(c00);
        }
        if (!mu2.empty()) {
            const auto comma = mu2.find(',');
            if (comma == std::string::npos) {
                throw CLI::ValidationError("--mu2-moments expects m0,m1");
            }
            config.mu2_moments = {parse_rational(mu2.substr(0, comma)), parse_rational(mu2.substr(comma + 1))};
        }
        config.alpha = parse_rational(alpha);
        config.nu = parse_rational(nu);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : mopcoef::exit_parse;
    }

    if (forward->parsed()) {
        config.command = Command::forward;
    } else if (inverse->parsed()) {
        config.command = Command::inverse;
    } else if (roundtrip->parsed()) {
        config.command = Command::roundtrip;
    } else if (bessel->parsed()) {
        config.command = Command::bessel;
    } else {
        config.command = Command::verify;
    }
    return mopcoef::run(config, std::cout, std::cerr);
}
