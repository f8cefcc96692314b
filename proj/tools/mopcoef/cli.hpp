#ifndef MOPCOEF_CLI_HPP
#define MOPCOEF_CLI_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "mop/io.hpp"
#include "mop/numerics.hpp"
#include "mop/stepline.hpp"

namespace mopcoef {

enum class Command { forward, inverse, roundtrip, bessel, verify };

/// Exit codes of run().
enum ExitCode : int {
    exit_ok = 0,
    exit_failure = 1,
    exit_parse = 2,
    exit_normality = 3,
    exit_range = 4,
};

struct JobConfig {
    Command command = Command::bessel;
    std::vector<std::filesystem::path> inputs;
    /// Output directory; empty means the working directory (bessel then writes no file).
    std::filesystem::path output_dir;
    mop::io::Format format = mop::io::Format::json;

    /// Grid length N (|n| <= N); -1 lets the command pick from its inputs.
    int max_len = -1;
    int digits = mop::default_digits;
    mop::ShiftVariant variant = mop::ShiftVariant::remark;

    // free parameter of the forward pipeline, exactly one of the two
    std::optional<mop::Rational> c00;
    std::optional<std::pair<mop::Rational, mop::Rational>> mu2_moments;

    // bessel
    mop::Rational alpha = 0;
    mop::Rational nu = 0;
    int rows = 10;

    // roundtrip / verify
    std::uint64_t seed = 1;
    int seeds = 20;
    int r = 2;
    int support = 16;
    int threads = 0;
};

/// Throws std::invalid_argument when the configuration violates its invariants.
void validate(const JobConfig& config);

/// Precision from MOPCOEF_DIGITS, else the library default.
int default_precision();

/// Runs one job; diagnostics go to `err`, reports and tables to `out`.
int run(const JobConfig& config, std::ostream& out, std::ostream& err);

} // namespace mopcoef

#endif // MOPCOEF_CLI_HPP
