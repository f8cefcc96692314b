#include "mop/io.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "mop/errors.hpp"

namespace mop::io {

using json = nlohmann::ordered_json;

Format format_of(const std::filesystem::path& path)
{
    std::string ext = path.extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char ch) { return std::tolower(ch); });
    if (ext == ".json") {
        return Format::json;
    }
    if (ext == ".csv") {
        return Format::csv;
    }
    throw ParseError(0, "cannot infer format of '" + path.string() + "' (expected .json or .csv)");
}

namespace {

// ---------------------------------------------------------------------------
// CSV

struct CsvRow {
    int line = 0;
    std::vector<std::string> fields;
};

struct CsvTable {
    std::map<std::string, std::string> meta;
    std::vector<CsvRow> rows;
};

std::string trim(const std::string& s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string> split(const std::string& line)
{
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
        out.push_back(trim(cell));
    }
    if (!line.empty() && line.back() == ',') {
        out.emplace_back();
    }
    return out;
}

std::string join(const std::vector<std::string>& cells)
{
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        out += (i ? "," : "") + cells[i];
    }
    return out;
}

/// Reads a CSV stream; `header` may be empty to accept any header (returned in `got`).
CsvTable read_csv(std::istream& is, const std::vector<std::string>& header, std::vector<std::string>* got = nullptr)
{
    CsvTable table;
    std::string raw;
    int line_no = 0;
    bool have_header = false;
    while (std::getline(is, raw)) {
        ++line_no;
        const std::string line = trim(raw);
        if (line.empty()) {
            continue;
        }
        if (line.front() == '#') {
            const std::string body = trim(line.substr(1));
            if (const auto eq = body.find('='); eq != std::string::npos) {
                table.meta[trim(body.substr(0, eq))] = trim(body.substr(eq + 1));
            }
            continue;
        }
        std::vector<std::string> cells = split(line);
        if (!have_header) {
            if (!header.empty() && cells != header) {
                throw ParseError(line_no, "expected header '" + join(header) + "', got '" + line + "'");
            }
            if (got != nullptr) {
                *got = cells;
            }
            have_header = true;
            continue;
        }
        table.rows.push_back(CsvRow{line_no, std::move(cells)});
    }
    if (!have_header) {
        throw ParseError(line_no, "empty table: no header line");
    }
    return table;
}

void require_width(const CsvRow& row, std::size_t width)
{
    if (row.fields.size() != width) {
        throw ParseError(row.line, "expected " + std::to_string(width) + " fields, got "
                                       + std::to_string(row.fields.size()));
    }
}

Rational cell_rational(const CsvRow& row, std::size_t col)
{
    try {
        return Rational::parse(row.fields.at(col));
    } catch (const ParseError& e) {
        throw ParseError(row.line, "column " + std::to_string(col + 1) + ": " + e.what());
    }
}

int cell_int(const CsvRow& row, std::size_t col)
{
    const std::string& s = row.fields.at(col);
    std::size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (s.empty() || used != s.size()) {
        throw ParseError(row.line, "column " + std::to_string(col + 1) + ": '" + s + "' is not an integer");
    }
    return value;
}

// ---------------------------------------------------------------------------
// JSON

json parse_json(std::istream& is)
{
    const std::string text{std::istreambuf_iterator<char>(is), std::istreambuf_iterator<char>()};
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        const auto upto = std::min<std::size_t>(e.byte, text.size());
        const int line = 1 + static_cast<int>(std::count(text.begin(), text.begin() + static_cast<long>(upto), '\n'));
        throw ParseError(line, std::string("malformed JSON: ") + e.what());
    }
}

const json& field(const json& j, const char* key, const std::string& where)
{
    if (!j.is_object() || !j.contains(key)) {
        throw ParseError(0, where + ": missing field '" + key + "'");
    }
    return j.at(key);
}

void expect_type(const json& j, const char* type)
{
    const json& t = field(j, "type", "document");
    if (!t.is_string() || t.get<std::string>() != type) {
        throw ParseError(0, std::string("document type must be '") + type + "'");
    }
}

Rational json_rational(const json& j, const std::string& where)
{
    try {
        if (j.is_string()) {
            return Rational::parse(j.get<std::string>());
        }
        if (j.is_number_integer()) {
            return Rational(j.get<long long>());
        }
    } catch (const ParseError& e) {
        throw ParseError(0, where + ": " + e.what());
    }
    throw ParseError(0, where + ": expected a rational string \"p/q\"");
}

int json_int(const json& j, const std::string& where)
{
    if (!j.is_number_integer()) {
        throw ParseError(0, where + ": expected an integer");
    }
    return j.get<int>();
}

const json& json_rows(const json& doc)
{
    const json& rows = field(doc, "rows", "document");
    if (!rows.is_array()) {
        throw ParseError(0, "'rows' must be an array");
    }
    return rows;
}

std::string row_where(std::size_t k)
{
    return "rows[" + std::to_string(k) + "]";
}

std::vector<Rational> json_rational_array(const json& j, std::size_t width, const std::string& where)
{
    if (!j.is_array() || j.size() != width) {
        throw ParseError(0, where + ": expected an array of " + std::to_string(width) + " values");
    }
    std::vector<Rational> out;
    for (std::size_t i = 0; i < width; ++i) {
        out.push_back(json_rational(j[i], where + "[" + std::to_string(i) + "]"));
    }
    return out;
}

void dump(std::ostream& os, const json& doc)
{
    os << doc.dump(2) << '\n';
}

// ---------------------------------------------------------------------------
// Dense 0..n-1 columns shared by step-line and marginal tables

void check_sequential(int n, int expected, int line)
{
    if (n != expected) {
        throw ParseError(line, "expected row n = " + std::to_string(expected) + ", got " + std::to_string(n));
    }
}

template <class Fn>
void open_out(const std::filesystem::path& path, Fn&& write)
{
    const Format format = format_of(path);
    std::ofstream os(path);
    if (!os) {
        throw Error("cannot open '" + path.string() + "' for writing");
    }
    write(os, format);
}

std::ifstream open_in(const std::filesystem::path& path)
{
    std::ifstream is(path);
    if (!is) {
        throw ParseError(0, "cannot open '" + path.string() + "'");
    }
    return is;
}

} // namespace

// ---------------------------------------------------------------------------
// Step-line

void write_stepline(std::ostream& os, const StepLineCoeffs& s, Format format)
{
    const int lo = s.first_index();
    const int hi = s.last_index();
    if (format == Format::csv) {
        os << "n,beta,gamma,delta\n";
        for (int n = lo; n <= hi; ++n) {
            os << n << ',' << s.beta.at(n) << ',' << s.gamma.at(n) << ',' << s.delta.at(n) << '\n';
        }
        return;
    }
    json rows = json::array();
    for (int n = lo; n <= hi; ++n) {
        rows.push_back({{"n", n},
                        {"beta", s.beta.at(n).to_string()},
                        {"gamma", s.gamma.at(n).to_string()},
                        {"delta", s.delta.at(n).to_string()}});
    }
    dump(os, json{{"type", "stepline"}, {"rows", std::move(rows)}});
}

StepLineCoeffs read_stepline(std::istream& is, Format format)
{
    std::vector<Rational> beta;
    std::vector<Rational> gamma;
    std::vector<Rational> delta;
    if (format == Format::csv) {
        const CsvTable t = read_csv(is, {"n", "beta", "gamma", "delta"});
        for (const CsvRow& row : t.rows) {
            require_width(row, 4);
            check_sequential(cell_int(row, 0), static_cast<int>(beta.size()), row.line);
            beta.push_back(cell_rational(row, 1));
            gamma.push_back(cell_rational(row, 2));
            delta.push_back(cell_rational(row, 3));
        }
    } else {
        const json doc = parse_json(is);
        expect_type(doc, "stepline");
        const json& rows = json_rows(doc);
        for (std::size_t k = 0; k < rows.size(); ++k) {
            const std::string where = row_where(k);
            check_sequential(json_int(field(rows[k], "n", where), where), static_cast<int>(k), 0);
            beta.push_back(json_rational(field(rows[k], "beta", where), where + ".beta"));
            gamma.push_back(json_rational(field(rows[k], "gamma", where), where + ".gamma"));
            delta.push_back(json_rational(field(rows[k], "delta", where), where + ".delta"));
        }
    }
    if (beta.size() < 2) {
        throw ParseError(0, "step-line table needs at least rows n = 0, 1");
    }
    try {
        return StepLineCoeffs::level_zero(beta, gamma, delta);
    } catch (const DomainError& e) {
        throw ParseError(0, e.what());
    }
}

// ---------------------------------------------------------------------------
// Marginal recurrence

void write_marginal(std::ostream& os, const MarginalRecurrence& mu, Format format, int digits)
{
    auto a_decimal = [&](std::size_t n) {
        return mu.a_sq[n].sign() < 0 ? std::string("nan") : sqrt_real(mu.a_sq[n], digits).to_string();
    };
    if (format == Format::csv) {
        os << "# measure=" << mu.measure_id << "\n# digits=" << digits << "\nn,b,a_sq,a_decimal\n";
        for (std::size_t n = 0; n < mu.b.size(); ++n) {
            os << n << ',' << mu.b[n] << ',' << mu.a_sq[n] << ',' << a_decimal(n) << '\n';
        }
        return;
    }
    json rows = json::array();
    for (std::size_t n = 0; n < mu.b.size(); ++n) {
        rows.push_back(
            {{"n", n}, {"b", mu.b[n].to_string()}, {"a_sq", mu.a_sq[n].to_string()}, {"a_decimal", a_decimal(n)}});
    }
    dump(os, json{{"type", "marginal"}, {"measure", mu.measure_id}, {"digits", digits}, {"rows", std::move(rows)}});
}

MarginalRecurrence read_marginal(std::istream& is, Format format)
{
    MarginalRecurrence mu;
    if (format == Format::csv) {
        const CsvTable t = read_csv(is, {"n", "b", "a_sq", "a_decimal"});
        if (const auto it = t.meta.find("measure"); it != t.meta.end()) {
            try {
                mu.measure_id = std::stoi(it->second);
            } catch (const std::exception&) {
                throw ParseError(0, "bad measure id '" + it->second + "'");
            }
        }
        for (const CsvRow& row : t.rows) {
            require_width(row, 4);
            check_sequential(cell_int(row, 0), mu.size(), row.line);
            mu.b.push_back(cell_rational(row, 1));
            mu.a_sq.push_back(cell_rational(row, 2));
        }
    } else {
        const json doc = parse_json(is);
        expect_type(doc, "marginal");
        if (doc.contains("measure")) {
            mu.measure_id = json_int(doc.at("measure"), "measure");
        }
        const json& rows = json_rows(doc);
        for (std::size_t k = 0; k < rows.size(); ++k) {
            const std::string where = row_where(k);
            check_sequential(json_int(field(rows[k], "n", where), where), static_cast<int>(k), 0);
            mu.b.push_back(json_rational(field(rows[k], "b", where), where + ".b"));
            mu.a_sq.push_back(json_rational(field(rows[k], "a_sq", where), where + ".a_sq"));
        }
    }
    if (mu.b.empty()) {
        throw ParseError(0, "marginal table has no rows");
    }
    if (!mu.a_sq[0].is_zero()) {
        throw ParseError(0, "marginal table: a_sq at n = 0 must be 0");
    }
    return mu;
}

// ---------------------------------------------------------------------------
// r = 2 nearest-neighbor grid

namespace {

NNGrid assemble_grid(const std::map<std::pair<int, int>, NNEntry>& cells)
{
    int max_len = -1;
    for (const auto& [nm, e] : cells) {
        max_len = std::max(max_len, nm.first + nm.second);
    }
    if (max_len < 0) {
        throw ParseError(0, "nearest-neighbor table has no rows");
    }
    const auto expected = static_cast<std::size_t>((max_len + 1) * (max_len + 2) / 2);
    if (cells.size() != expected) {
        throw ParseError(0, "nearest-neighbor table must cover every (n, m) with n + m <= "
                                + std::to_string(max_len));
    }
    NNGrid grid(max_len);
    for (const auto& [nm, e] : cells) {
        grid.at(nm.first, nm.second) = e;
    }
    return grid;
}

void insert_cell(std::map<std::pair<int, int>, NNEntry>& cells, int n, int m, NNEntry e, int line)
{
    if (n < 0 || m < 0) {
        throw ParseError(line, "negative index");
    }
    if (!cells.emplace(std::pair{n, m}, std::move(e)).second) {
        throw ParseError(line, "duplicate row for (" + std::to_string(n) + "," + std::to_string(m) + ")");
    }
}

} // namespace

void write_nn_grid(std::ostream& os, const NNGrid& grid, Format format)
{
    if (format == Format::csv) {
        os << "n,m,a,b,c,d\n";
    }
    json rows = json::array();
    for (int len = 0; len <= grid.max_len(); ++len) {
        for (int m = 0; m <= len; ++m) {
            const int n = len - m;
            const NNEntry& e = grid.at(n, m);
            if (format == Format::csv) {
                os << n << ',' << m << ',' << e.a << ',' << e.b << ',' << e.c << ',' << e.d << '\n';
            } else {
                rows.push_back({{"n", n},
                                {"m", m},
                                {"a", e.a.to_string()},
                                {"b", e.b.to_string()},
                                {"c", e.c.to_string()},
                                {"d", e.d.to_string()}});
            }
        }
    }
    if (format == Format::json) {
        dump(os, json{{"type", "nn_grid"}, {"max_len", grid.max_len()}, {"rows", std::move(rows)}});
    }
}

NNGrid read_nn_grid(std::istream& is, Format format)
{
    std::map<std::pair<int, int>, NNEntry> cells;
    if (format == Format::csv) {
        const CsvTable t = read_csv(is, {"n", "m", "a", "b", "c", "d"});
        for (const CsvRow& row : t.rows) {
            require_width(row, 6);
            insert_cell(cells, cell_int(row, 0), cell_int(row, 1),
                        NNEntry{cell_rational(row, 2), cell_rational(row, 3), cell_rational(row, 4),
                                cell_rational(row, 5)},
                        row.line);
        }
    } else {
        const json doc = parse_json(is);
        expect_type(doc, "nn_grid");
        const json& rows = json_rows(doc);
        for (std::size_t k = 0; k < rows.size(); ++k) {
            const std::string w = row_where(k);
            const json& r = rows[k];
            insert_cell(cells, json_int(field(r, "n", w), w + ".n"), json_int(field(r, "m", w), w + ".m"),
                        NNEntry{json_rational(field(r, "a", w), w + ".a"), json_rational(field(r, "b", w), w + ".b"),
                                json_rational(field(r, "c", w), w + ".c"), json_rational(field(r, "d", w), w + ".d")},
                        0);
        }
    }
    return assemble_grid(cells);
}

// ---------------------------------------------------------------------------
// General r nearest-neighbor grid

namespace {

std::vector<std::string> grid_r_header(int r)
{
    std::vector<std::string> h;
    for (const char* prefix : {"n", "a", "b"}) {
        for (int i = 1; i <= r; ++i) {
            h.push_back(prefix + std::to_string(i));
        }
    }
    return h;
}

NNGridR assemble_grid_r(int r, std::vector<std::pair<MultiIndex, NNGridR::Entry>> cells)
{
    int max_len = -1;
    for (const auto& [index, e] : cells) {
        max_len = std::max(max_len, index.length());
    }
    if (max_len < 0) {
        throw ParseError(0, "nearest-neighbor table has no rows");
    }
    NNGridR grid(r, max_len);
    for (auto& [index, e] : cells) {
        if (grid.contains(index)) {
            throw ParseError(0, "duplicate row for " + index.to_string());
        }
        grid.set(index, std::move(e));
    }
    for (int len = 0; len <= max_len; ++len) {
        for (const MultiIndex& index : multi_indices_of_length(r, len)) {
            if (!grid.contains(index)) {
                throw ParseError(0, "nearest-neighbor table lacks a row for " + index.to_string());
            }
        }
    }
    return grid;
}

} // namespace

void write_nn_grid_r(std::ostream& os, const NNGridR& grid, Format format)
{
    const int r = grid.r();
    if (format == Format::csv) {
        os << join(grid_r_header(r)) << '\n';
        for (const MultiIndex& index : grid.indices()) {
            const NNGridR::Entry& e = grid.at(index);
            std::vector<std::string> cells;
            for (int i = 0; i < r; ++i) {
                cells.push_back(std::to_string(index[i]));
            }
            for (const Rational& q : e.a) {
                cells.push_back(q.to_string());
            }
            for (const Rational& q : e.b) {
                cells.push_back(q.to_string());
            }
            os << join(cells) << '\n';
        }
        return;
    }
    json rows = json::array();
    for (const MultiIndex& index : grid.indices()) {
        const NNGridR::Entry& e = grid.at(index);
        json a = json::array();
        json b = json::array();
        for (int i = 0; i < r; ++i) {
            a.push_back(e.a[static_cast<std::size_t>(i)].to_string());
            b.push_back(e.b[static_cast<std::size_t>(i)].to_string());
        }
        rows.push_back({{"index", index.components()}, {"a", std::move(a)}, {"b", std::move(b)}});
    }
    dump(os, json{{"type", "nn_grid_r"}, {"r", r}, {"max_len", grid.max_len()}, {"rows", std::move(rows)}});
}

NNGridR read_nn_grid_r(std::istream& is, Format format)
{
    std::vector<std::pair<MultiIndex, NNGridR::Entry>> cells;
    int r = 0;
    if (format == Format::csv) {
        std::vector<std::string> header;
        const CsvTable t = read_csv(is, {}, &header);
        if (header.size() < 3 || header.size() % 3 != 0 || header != grid_r_header(static_cast<int>(header.size() / 3))) {
            throw ParseError(1, "expected header n1..nr,a1..ar,b1..br");
        }
        r = static_cast<int>(header.size() / 3);
        for (const CsvRow& row : t.rows) {
            require_width(row, header.size());
            std::vector<int> comps;
            NNGridR::Entry e;
            for (int i = 0; i < r; ++i) {
                comps.push_back(cell_int(row, static_cast<std::size_t>(i)));
                e.a.push_back(cell_rational(row, static_cast<std::size_t>(r + i)));
                e.b.push_back(cell_rational(row, static_cast<std::size_t>(2 * r + i)));
            }
            MultiIndex index(std::move(comps));
            if (!index.valid()) {
                throw ParseError(row.line, "negative index component");
            }
            cells.emplace_back(std::move(index), std::move(e));
        }
    } else {
        const json doc = parse_json(is);
        expect_type(doc, "nn_grid_r");
        r = json_int(field(doc, "r", "document"), "r");
        if (r < 1) {
            throw ParseError(0, "r must be positive");
        }
        const json& rows = json_rows(doc);
        const auto width = static_cast<std::size_t>(r);
        for (std::size_t k = 0; k < rows.size(); ++k) {
            const std::string w = row_where(k);
            const json& idx = field(rows[k], "index", w);
            if (!idx.is_array() || idx.size() != width) {
                throw ParseError(0, w + ".index: expected " + std::to_string(r) + " integers");
            }
            std::vector<int> comps;
            for (const json& c : idx) {
                comps.push_back(json_int(c, w + ".index"));
            }
            MultiIndex index(std::move(comps));
            if (!index.valid()) {
                throw ParseError(0, w + ".index: negative component");
            }
            cells.emplace_back(std::move(index),
                               NNGridR::Entry{json_rational_array(field(rows[k], "a", w), width, w + ".a"),
                                              json_rational_array(field(rows[k], "b", w), width, w + ".b")});
        }
    }
    return assemble_grid_r(r, std::move(cells));
}

// ---------------------------------------------------------------------------
// Discrete measures

void write_measure(std::ostream& os, const DiscreteMeasure& m, Format format)
{
    if (format == Format::csv) {
        os << "x,w\n";
        for (std::size_t i = 0; i < m.support.size(); ++i) {
            os << m.support[i] << ',' << m.weights[i] << '\n';
        }
        return;
    }
    json support = json::array();
    json weights = json::array();
    for (std::size_t i = 0; i < m.support.size(); ++i) {
        support.push_back(m.support[i].to_string());
        weights.push_back(m.weights[i].to_string());
    }
    dump(os, json{{"type", "measure"}, {"support", std::move(support)}, {"weights", std::move(weights)}});
}

DiscreteMeasure read_measure(std::istream& is, Format format)
{
    DiscreteMeasure m;
    if (format == Format::csv) {
        const CsvTable t = read_csv(is, {"x", "w"});
        for (const CsvRow& row : t.rows) {
            require_width(row, 2);
            m.support.push_back(cell_rational(row, 0));
            m.weights.push_back(cell_rational(row, 1));
        }
    } else {
        const json doc = parse_json(is);
        expect_type(doc, "measure");
        const json& support = field(doc, "support", "document");
        const json& weights = field(doc, "weights", "document");
        if (!support.is_array() || !weights.is_array()) {
            throw ParseError(0, "'support' and 'weights' must be arrays");
        }
        m.support = json_rational_array(support, support.size(), "support");
        m.weights = json_rational_array(weights, weights.size(), "weights");
    }
    try {
        m.validate();
    } catch (const DomainError& e) {
        throw ParseError(0, e.what());
    }
    return m;
}

// ---------------------------------------------------------------------------
// Files

StepLineCoeffs load_stepline(const std::filesystem::path& path)
{
    std::ifstream is = open_in(path);
    return read_stepline(is, format_of(path));
}

MarginalRecurrence load_marginal(const std::filesystem::path& path)
{
    std::ifstream is = open_in(path);
    return read_marginal(is, format_of(path));
}

NNGrid load_nn_grid(const std::filesystem::path& path)
{
    std::ifstream is = open_in(path);
    return read_nn_grid(is, format_of(path));
}

DiscreteMeasure load_measure(const std::filesystem::path& path)
{
    std::ifstream is = open_in(path);
    return read_measure(is, format_of(path));
}

void save_stepline(const std::filesystem::path& path, const StepLineCoeffs& s)
{
    open_out(path, [&](std::ostream& os, Format format) { write_stepline(os, s, format); });
}

void save_marginal(const std::filesystem::path& path, const MarginalRecurrence& mu, int digits)
{
    open_out(path, [&](std::ostream& os, Format format) { write_marginal(os, mu, format, digits); });
}

void save_nn_grid(const std::filesystem::path& path, const NNGrid& grid)
{
    open_out(path, [&](std::ostream& os, Format format) { write_nn_grid(os, grid, format); });
}

void save_measure(const std::filesystem::path& path, const DiscreteMeasure& m)
{
    open_out(path, [&](std::ostream& os, Format format) { write_measure(os, m, format); });
}

} // namespace mop::io
