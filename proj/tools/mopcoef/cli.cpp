#include "cli.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <fstream>
#include <future>
#include <stdexcept>
#include <thread>

#include "mop/errors.hpp"
#include "mop/inverse_problem.hpp"
#include "mop/measures_catalog.hpp"
#include "mop/nearest_neighbor.hpp"
#include "mop/polynomial_oracle.hpp"

namespace mopcoef {

using namespace mop;
namespace fs = std::filesystem;

void validate(const JobConfig& config)
{
    if (config.digits < 1) {
        throw std::invalid_argument("precision must be at least 1 digit");
    }
    if (config.command == Command::forward) {
        if (config.c00.has_value() == config.mu2_moments.has_value()) {
            throw std::invalid_argument("forward needs exactly one of --c00 or --mu2-moments");
        }
        if (config.inputs.size() != 1) {
            throw std::invalid_argument("forward reads exactly one step-line table");
        }
    }
    if (config.command == Command::inverse && config.inputs.size() < 2) {
        throw std::invalid_argument("inverse needs at least two marginal tables");
    }
    if (config.command == Command::roundtrip && !config.inputs.empty() && config.inputs.size() != 2) {
        throw std::invalid_argument("roundtrip reads two measure files or none (random pair)");
    }
    if (config.command == Command::verify && (config.r < 2 || config.seeds < 1)) {
        throw std::invalid_argument("verify needs r >= 2 and at least one seed");
    }
    if (config.command == Command::bessel && config.rows < 0) {
        throw std::invalid_argument("bessel needs rows >= 0");
    }
}

int default_precision()
{
    if (const char* env = std::getenv("MOPCOEF_DIGITS")) {
        try {
            const int digits = std::stoi(env);
            if (digits >= 1) {
                return digits;
            }
        } catch (const std::exception&) {
        }
    }
    return default_digits;
}

namespace {

std::string extension(io::Format format)
{
    return format == io::Format::json ? ".json" : ".csv";
}

fs::path output_path(const JobConfig& config, const std::string& stem)
{
    const fs::path dir = config.output_dir.empty() ? fs::path(".") : config.output_dir;
    fs::create_directories(dir);
    return dir / (stem + extension(config.format));
}

template <class Write>
fs::path emit(const JobConfig& config, const std::string& stem, Write&& write)
{
    const fs::path path = output_path(config, stem);
    std::ofstream os(path);
    if (!os) {
        throw Error("cannot open '" + path.string() + "' for writing");
    }
    write(os, config.format);
    return path;
}

// ---------------------------------------------------------------------------

int run_forward(const JobConfig& config, std::ostream& out)
{
    const StepLineCoeffs stepline = io::load_stepline(config.inputs.front());
    const int n = config.max_len >= 0 ? config.max_len : (stepline.last_index() - 1) / 2;
    const FreeParameter seed = config.c00 ? FreeParameter::raw_seed(*config.c00)
                                          : FreeParameter::exact_mu2(config.mu2_moments->first,
                                                                     config.mu2_moments->second);
    const ForwardResult result = forward_pipeline(stepline, seed, n, config.variant);

    const fs::path grid = emit(config, "nn_grid", [&](std::ostream& os, io::Format f) {
        io::write_nn_grid(os, result.grid, f);
    });
    const fs::path mu1 = emit(config, "marginal_mu1", [&](std::ostream& os, io::Format f) {
        io::write_marginal(os, result.mu1, f, config.digits);
    });
    const fs::path mu2 = emit(config, "marginal_mu2", [&](std::ostream& os, io::Format f) {
        io::write_marginal(os, result.mu2, f, config.digits);
    });
    out << "forward: N = " << n << ", c00 = " << seed.resolve(stepline.beta.at(0)) << '\n'
        << "wrote " << grid.string() << '\n'
        << "wrote " << mu1.string() << '\n'
        << "wrote " << mu2.string() << '\n';
    return exit_ok;
}

int run_inverse(const JobConfig& config, std::ostream& out)
{
    std::vector<MarginalRecurrence> marginals;
    int n = config.max_len;
    for (std::size_t i = 0; i < config.inputs.size(); ++i) {
        marginals.push_back(io::load_marginal(config.inputs[i]));
        marginals.back().measure_id = static_cast<int>(i) + 1;
        if (config.max_len < 0) {
            n = n < 0 ? marginals.back().size() - 1 : std::min(n, marginals.back().size() - 1);
        }
    }
    if (marginals.size() == 2) {
        const NNGrid grid = nn_from_marginals_r2(marginals[0], marginals[1], n);
        const StepLineCoeffs stepline = stepline_from_nn(grid, n);
        const fs::path g = emit(config, "nn_grid", [&](std::ostream& os, io::Format f) {
            io::write_nn_grid(os, grid, f);
        });
        const fs::path s = emit(config, "stepline", [&](std::ostream& os, io::Format f) {
            io::write_stepline(os, stepline, f);
        });
        out << "inverse: r = 2, N = " << n << '\n' << "wrote " << g.string() << '\n' << "wrote " << s.string() << '\n';
        return exit_ok;
    }
    const NNGridR grid = nn_from_marginals_general_r(marginals, n);
    const fs::path g = emit(config, "nn_grid_r", [&](std::ostream& os, io::Format f) {
        io::write_nn_grid_r(os, grid, f);
    });
    out << "inverse: r = " << marginals.size() << ", N = " << n << '\n' << "wrote " << g.string() << '\n';
    return exit_ok;
}

Rational max_abs_difference(const std::vector<Rational>& x, const std::vector<Rational>& y, std::size_t count)
{
    Rational worst = 0;
    for (std::size_t i = 0; i < count; ++i) {
        worst = std::max(worst, abs(x.at(i) - y.at(i)));
    }
    return worst;
}

int run_roundtrip(const JobConfig& config, std::ostream& out)
{
    DiscreteMeasure mu1;
    DiscreteMeasure mu2;
    if (config.inputs.empty()) {
        std::tie(mu1, mu2) = random_pair(config.seed, config.support);
    } else {
        mu1 = io::load_measure(config.inputs[0]);
        mu2 = io::load_measure(config.inputs[1]);
    }
    const int n = config.max_len >= 0 ? config.max_len : 6;
    const int len = 2 * n + 1;
    const MarginalRecurrence rec1 = stieltjes_recurrence(mu1, len + 1, 1);
    const MarginalRecurrence rec2 = stieltjes_recurrence(mu2, len + 1, 2);

    const NNGrid inverse = nn_from_marginals_r2(rec1, rec2, len);
    const StepLineCoeffs stepline = stepline_from_nn(inverse, len);
    const Rational c00 = inverse.at(0, 0).d - stepline.beta.at(0);
    const ForwardResult fwd = forward_pipeline(stepline, FreeParameter::raw_seed(c00), n, config.variant);

    const auto count = static_cast<std::size_t>(n + 1);
    Rational worst = 0;
    worst = std::max(worst, max_abs_difference(fwd.mu1.b, rec1.b, count));
    worst = std::max(worst, max_abs_difference(fwd.mu1.a_sq, rec1.a_sq, count));
    worst = std::max(worst, max_abs_difference(fwd.mu2.b, rec2.b, count));
    worst = std::max(worst, max_abs_difference(fwd.mu2.a_sq, rec2.a_sq, count));
    for (int l = 0; l <= n; ++l) {
        for (int m = 0; m <= l; ++m) {
            const NNEntry& x = fwd.grid.at(l - m, m);
            const NNEntry& y = inverse.at(l - m, m);
            worst = std::max({worst, abs(x.a - y.a), abs(x.b - y.b), abs(x.c - y.c), abs(x.d - y.d)});
        }
    }
    const StepLineCoeffs back = stepline_from_nn(fwd.grid, n);
    for (int i = 0; i <= n; ++i) {
        worst = std::max({worst, abs(back.beta.at(i) - stepline.beta.at(i)),
                          abs(back.gamma.at(i) - stepline.gamma.at(i)),
                          abs(back.delta.at(i) - stepline.delta.at(i))});
    }

    out << "roundtrip: N = " << n;
    if (config.inputs.empty()) {
        out << ", seed = " << config.seed;
    }
    out << '\n' << "discrepancy: " << worst << '\n';
    return worst.is_zero() ? exit_ok : exit_failure;
}

std::string pad_left(const std::string& s, std::size_t width)
{
    return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

int run_bessel(const JobConfig& config, std::ostream& out)
{
    const int depth = config.rows;
    const StepLineCoeffs stepline = bessel_stepline(config.alpha, config.nu, 2 * depth + 1);
    const ShiftFamily e1 = build_e1_family(stepline, depth, config.variant);
    const MarginalRecurrence mu1 = marginal_mu1(e1, depth + 1);

    std::vector<std::array<std::string, 3>> rows;
    rows.push_back({"n", "a_n", "b_n"});
    for (int n = 0; n <= depth; ++n) {
        const auto s = static_cast<std::size_t>(n);
        rows.push_back({std::to_string(n), n == 0 ? std::string("--") : sqrt_real(mu1.a_sq[s], config.digits).to_string(),
                        render(mu1.b[s], config.digits)});
    }
    std::array<std::size_t, 3> width{};
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < 3; ++c) {
            width[c] = std::max(width[c], row[c].size());
        }
    }
    for (const auto& row : rows) {
        out << pad_left(row[0], width[0]) << "  " << pad_left(row[1], width[1]) << "  " << pad_left(row[2], width[2])
            << '\n';
    }
    if (!config.output_dir.empty()) {
        const fs::path p = emit(config, "bessel_mu1", [&](std::ostream& os, io::Format f) {
            io::write_marginal(os, mu1, f, config.digits);
        });
        const fs::path s = emit(config, "bessel_stepline", [&](std::ostream& os, io::Format f) {
            io::write_stepline(os, stepline, f);
        });
        out << "wrote " << p.string() << '\n' << "wrote " << s.string() << '\n';
    }
    return exit_ok;
}

// ---------------------------------------------------------------------------
// verify

enum class SeedStatus { pass, fail, skip };

struct SeedReport {
    std::uint64_t seed = 0;
    SeedStatus status = SeedStatus::pass;
    std::string detail;
};

bool commutes_everywhere(const NNGridR& grid, std::string& where)
{
    for (int len = 0; len + 1 <= grid.max_len(); ++len) {
        for (const MultiIndex& idx : multi_indices_of_length(grid.r(), len)) {
            for (int i = 0; i < grid.r(); ++i) {
                for (int j = i + 1; j < grid.r(); ++j) {
                    if (!compatibility_check(grid, idx, i, j).ok) {
                        where = idx.to_string();
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

SeedReport verify_seed(std::uint64_t seed, int r, int n, int support)
{
    SeedReport report{seed, SeedStatus::pass, {}};
    const std::vector<DiscreteMeasure> system = random_system(seed, r, support);
    std::vector<MarginalRecurrence> marginals;
    for (int i = 0; i < r; ++i) {
        marginals.push_back(stieltjes_recurrence(system[static_cast<std::size_t>(i)], n + 1, i + 1));
    }
    NNGridR produced(r, 0);
    try {
        if (r == 2) {
            const NNGrid grid = nn_from_marginals_r2(marginals[0], marginals[1], n);
            if (const std::vector<PdViolation> bad = pd_residuals_r2(grid); !bad.empty()) {
                return {seed, SeedStatus::fail, "(" + bad.front().equation + ") fails at " + bad.front().index.to_string()};
            }
            produced = NNGridR::from_r2(grid);
        } else {
            produced = nn_from_marginals_general_r(marginals, n, {DirectionChoice::smallest, true});
        }
    } catch (const SingularSweepError& e) {
        return {seed, SeedStatus::skip, e.what()};
    }
    if (const std::vector<PdViolation> bad = pd_residuals(produced); !bad.empty()) {
        return {seed, SeedStatus::fail, "(" + bad.front().equation + ") fails at " + bad.front().index.to_string()};
    }
    std::string where;
    if (!commutes_everywhere(produced, where)) {
        return {seed, SeedStatus::fail, "transfer matrices do not commute at " + where};
    }
    const NNGridR oracle = nn_oracle_grid(moment_table(system, 2 * n + 2), n);
    if (!(oracle == produced)) {
        return {seed, SeedStatus::fail, "differs from moment oracle"};
    }
    report.detail = "oracle, residuals and compatibility exact";
    return report;
}

int run_verify(const JobConfig& config, std::ostream& out)
{
    const int n = config.max_len >= 0 ? config.max_len : (config.r == 2 ? 6 : 4);
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const auto workers = static_cast<std::size_t>(config.threads > 0 ? config.threads : static_cast<int>(hw));

    std::vector<SeedReport> reports(static_cast<std::size_t>(config.seeds));
    for (std::size_t start = 0; start < reports.size(); start += workers) {
        std::vector<std::future<SeedReport>> batch;
        for (std::size_t k = start; k < std::min(reports.size(), start + workers); ++k) {
            const std::uint64_t seed = config.seed + k;
            batch.push_back(std::async(std::launch::async, [seed, &config, n] {
                try {
                    return verify_seed(seed, config.r, n, config.support);
                } catch (const std::exception& e) {
                    return SeedReport{seed, SeedStatus::fail, e.what()};
                }
            }));
        }
        for (std::size_t k = 0; k < batch.size(); ++k) {
            reports[start + k] = batch[k].get();
        }
    }

    int passed = 0;
    int skipped = 0;
    int failed = 0;
    for (const SeedReport& rep : reports) {
        const char* tag = rep.status == SeedStatus::pass ? "PASS" : rep.status == SeedStatus::skip ? "SKIP" : "FAIL";
        out << tag << " seed " << rep.seed << ": " << rep.detail << '\n';
        passed += rep.status == SeedStatus::pass;
        skipped += rep.status == SeedStatus::skip;
        failed += rep.status == SeedStatus::fail;
    }
    out << "verify: r = " << config.r << ", N = " << n << ", " << passed << " passed, " << skipped
        << " skipped (singular sweep), " << failed << " failed\n";
    return failed == 0 ? exit_ok : exit_failure;
}

} // namespace

int run(const JobConfig& config, std::ostream& out, std::ostream& err)
{
    try {
        validate(config);
        switch (config.command) {
        case Command::forward:
            return run_forward(config, out);
        case Command::inverse:
            return run_inverse(config, out);
        case Command::roundtrip:
            return run_roundtrip(config, out);
        case Command::bessel:
            return run_bessel(config, out);
        case Command::verify:
            return run_verify(config, out);
        }
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return exit_parse;
    } catch (const std::invalid_argument& e) {
        err << "invalid arguments: " << e.what() << '\n';
        return exit_parse;
    } catch (const NormalityError& e) {
        err << "normality failure: axis " << to_string(e.axis()) << ", level " << e.level() << ", n = " << e.n()
            << ", index " << e.index() << ": " << e.denominator() << " vanishes\n";
        return exit_normality;
    } catch (const SingularSweepError& e) {
        err << "error: " << e.what() << '\n';
        return exit_normality;
    } catch (const InitError& e) {
        err << "error: " << e.what() << '\n';
        return exit_normality;
    } catch (const SeedMismatch& e) {
        err << "error: " << e.what() << '\n';
        return exit_normality;
    } catch (const NonNormalIndexError& e) {
        err << "error: " << e.what() << '\n';
        return exit_normality;
    } catch (const RangeError& e) {
        err << "range error: " << e.what() << '\n';
        return exit_range;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_failure;
    }
    return exit_failure;
}

} // namespace mopcoef
