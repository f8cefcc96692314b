#ifndef MOP_IO_HPP
#define MOP_IO_HPP

#include <filesystem>
#include <istream>
#include <ostream>

#include "mop/inverse_problem.hpp"
#include "mop/measures_catalog.hpp"
#include "mop/nearest_neighbor.hpp"
#include "mop/stepline.hpp"

namespace mop::io {

enum class Format { json, csv };

/// From the file extension (.json / .csv); ParseError otherwise.
Format format_of(const std::filesystem::path& path);

// Exact values are written as "p/q" strings; CSV readers skip blank lines and
// lines starting with '#'. All readers throw ParseError with a 1-based line
// number for CSV (JSON errors report the line of the offending byte when known).

void write_stepline(std::ostream& os, const StepLineCoeffs& s, Format format);
StepLineCoeffs read_stepline(std::istream& is, Format format);

/// a_decimal is sqrt(a_sq) rendered with `digits` significant digits.
void write_marginal(std::ostream& os, const MarginalRecurrence& mu, Format format, int digits = default_digits);
MarginalRecurrence read_marginal(std::istream& is, Format format);

void write_nn_grid(std::ostream& os, const NNGrid& grid, Format format);
NNGrid read_nn_grid(std::istream& is, Format format);

void write_nn_grid_r(std::ostream& os, const NNGridR& grid, Format format);
NNGridR read_nn_grid_r(std::istream& is, Format format);

void write_measure(std::ostream& os, const DiscreteMeasure& m, Format format);
DiscreteMeasure read_measure(std::istream& is, Format format);

/// File wrappers choosing the format from the extension.
StepLineCoeffs load_stepline(const std::filesystem::path& path);
MarginalRecurrence load_marginal(const std::filesystem::path& path);
NNGrid load_nn_grid(const std::filesystem::path& path);
DiscreteMeasure load_measure(const std::filesystem::path& path);

void save_stepline(const std::filesystem::path& path, const StepLineCoeffs& s);
void save_marginal(const std::filesystem::path& path, const MarginalRecurrence& mu, int digits = default_digits);
void save_nn_grid(const std::filesystem::path& path, const NNGrid& grid);
void save_measure(const std::filesystem::path& path, const DiscreteMeasure& m);

} // namespace mop::io

#endif // MOP_IO_HPP
