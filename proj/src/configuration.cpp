#include "cicy/configuration.hpp"

#include "cicy/error.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

namespace cicy {

ConfigurationMatrix::ConfigurationMatrix(std::vector<int> dimensions,
                                         std::vector<std::vector<int>> degrees)
    : ambient_(std::move(dimensions)), degrees_(std::move(degrees))
{
    if (degrees_.size() != ambient_.factor_count())
        throw InvalidArgument("configuration has " + std::to_string(ambient_.factor_count()) +
                              " ambient factors but " + std::to_string(degrees_.size()) +
                              " degree rows");
    if (degrees_.front().empty())
        throw InvalidArgument("configuration needs at least one degree column");
    for (std::size_t i = 1; i < degrees_.size(); ++i)
        if (degrees_[i].size() != degrees_.front().size())
            throw InvalidArgument("row " + std::to_string(i + 1) + " has " +
                                  std::to_string(degrees_[i].size()) + " degree entries, expected " +
                                  std::to_string(degrees_.front().size()));
}

ConfigurationMatrix ConfigurationMatrix::from_rows(const std::vector<Row>& rows)
{
    std::vector<int> dims;
    std::vector<std::vector<int>> degrees;
    for (const auto& r : rows) {
        dims.push_back(r.n);
        degrees.push_back(r.degrees);
    }
    return ConfigurationMatrix(std::move(dims), std::move(degrees));
}

MultiDegree ConfigurationMatrix::column(std::size_t j) const
{
    if (j >= columns())
        throw InvalidArgument("column index out of range");
    std::vector<int> d(rows());
    for (std::size_t i = 0; i < rows(); ++i)
        d[i] = degrees_[i][j];
    return MultiDegree(std::move(d));
}

std::vector<MultiDegree> ConfigurationMatrix::column_degrees() const
{
    std::vector<MultiDegree> out;
    out.reserve(columns());
    for (std::size_t j = 0; j < columns(); ++j)
        out.push_back(column(j));
    return out;
}

int ConfigurationMatrix::row_sum(std::size_t i) const
{
    const auto& r = degrees_.at(i);
    return std::accumulate(r.begin(), r.end(), 0);
}

int ConfigurationMatrix::column_sum(std::size_t j) const
{
    int s = 0;
    for (const auto& r : degrees_)
        s += r.at(j);
    return s;
}

bool ConfigurationMatrix::is_valid() const
{
    if (dimension() < 1)
        return false;
    for (const auto& r : degrees_)
        for (int q : r)
            if (q < 0)
                return false;
    return true;
}

std::string ConfigurationMatrix::render() const
{
    std::string out;
    for (std::size_t i = 0; i < rows(); ++i) {
        out += std::to_string(n(i)) + " |";
        for (int q : degrees_[i])
            out += " " + std::to_string(q);
        out += "\n";
    }
    return out;
}

// ---------------------------------------------------------------------------
// Text format

namespace {

struct LineScanner {
    std::string_view line;
    std::size_t line_no;
    std::size_t pos = 0;

    void skip_blanks()
    {
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r'))
            ++pos;
    }
    bool at_end()
    {
        skip_blanks();
        return pos >= line.size();
    }
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(line_no, pos + 1, what); }

    int integer()
    {
        skip_blanks();
        std::size_t start = pos;
        if (pos < line.size() && (line[pos] == '-' || line[pos] == '+'))
            ++pos;
        while (pos < line.size() && std::isdigit(static_cast<unsigned char>(line[pos])))
            ++pos;
        int value = 0;
        const char* first = line.data() + start;
        if (first < line.data() + pos && *first == '+')
            ++first;
        auto [ptr, ec] = std::from_chars(first, line.data() + pos, value);
        if (ec != std::errc() || ptr != line.data() + pos || pos == start) {
            pos = start;
            fail("expected an integer");
        }
        return value;
    }
};

} // namespace

ConfigurationMatrix parse_configuration(std::string_view text)
{
    std::vector<int> dims;
    std::vector<std::vector<int>> degrees;
    std::size_t line_no = 0;
    std::size_t first_row_line = 0;

    while (!text.empty()) {
        auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;

        LineScanner scan{line, line_no};
        if (scan.at_end() || line[scan.pos] == '#')
            continue;

        int n = scan.integer();
        if (n < 1) {
            scan.pos = 0;
            scan.skip_blanks();
            scan.fail("projective dimension must be >= 1");
        }
        scan.skip_blanks();
        if (scan.pos >= line.size() || line[scan.pos] != '|')
            scan.fail("expected '|' after the projective dimension");
        ++scan.pos;
        std::vector<int> row;
        while (!scan.at_end())
            row.push_back(scan.integer());
        if (row.empty())
            scan.fail("row has no degree entries");
        if (!degrees.empty() && row.size() != degrees.front().size())
            scan.fail("row has " + std::to_string(row.size()) + " degree entries, but line " +
                      std::to_string(first_row_line) + " has " +
                      std::to_string(degrees.front().size()));
        if (degrees.empty())
            first_row_line = line_no;
        dims.push_back(n);
        degrees.push_back(std::move(row));
    }
    if (degrees.empty())
        throw ParseError(line_no == 0 ? 1 : line_no, 1, "no matrix rows found");
    return ConfigurationMatrix(std::move(dims), std::move(degrees));
}

// ---------------------------------------------------------------------------
// Structure checks

namespace {

// Component label per node; rows are nodes 0..k-1, columns k..k+m-1.
std::vector<std::size_t> incidence_components(const ConfigurationMatrix& cfg)
{
    const std::size_t k = cfg.rows(), m = cfg.columns();
    std::vector<std::size_t> parent(k + m);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (cfg.entry(i, j) > 0)
                parent[find(i)] = find(k + j);
    std::vector<std::size_t> label(k + m);
    for (std::size_t x = 0; x < k + m; ++x)
        label[x] = find(x);
    return label;
}

} // namespace

bool is_block_diagonal(const ConfigurationMatrix& cfg)
{
    auto label = incidence_components(cfg);
    return std::any_of(label.begin(), label.end(), [&](std::size_t l) { return l != label.front(); });
}

bool has_forbidden_block(const ConfigurationMatrix& cfg)
{
    auto label = incidence_components(cfg);
    const std::size_t k = cfg.rows(), m = cfg.columns();
    for (std::size_t i = 0; i < k; ++i) {
        if (cfg.n(i) != 1)
            continue;
        std::size_t rows_in = 0, cols_in = 0, col = 0;
        for (std::size_t x = 0; x < k + m; ++x)
            if (label[x] == label[i]) {
                if (x < k)
                    ++rows_in;
                else {
                    ++cols_in;
                    col = x - k;
                }
            }
        if (rows_in == 1 && cols_in == 1 && cfg.entry(i, col) == 2)
            return true;
    }
    return false;
}

ValidationReport validate(const ConfigurationMatrix& cfg)
{
    ValidationReport report;
    report.dimension = cfg.dimension();
    for (std::size_t i = 0; i < cfg.rows(); ++i) {
        for (int q : cfg.row(i))
            if (q < 0)
                report.nonnegative = false;
        if (cfg.row_sum(i) != cfg.n(i) + 1) {
            report.calabi_yau = false;
            report.non_cy_rows.push_back(i);
        }
    }
    for (std::size_t j = 0; j < cfg.columns(); ++j)
        if (cfg.column_sum(j) < 2) {
            report.column_sums_at_least_two = false;
            report.short_columns.push_back(j);
        }
    report.block_diagonal = is_block_diagonal(cfg);
    report.forbidden_block = has_forbidden_block(cfg);
    return report;
}

bool is_cicy(const ConfigurationMatrix& cfg)
{
    if (cfg.dimension() != 3)
        return false;
    for (std::size_t i = 0; i < cfg.rows(); ++i) {
        for (int q : cfg.row(i))
            if (q < 0)
                return false;
        if (cfg.row_sum(i) != cfg.n(i) + 1)
            return false;
    }
    return true;
}

ConfigurationMatrix normalize(const ConfigurationMatrix& cfg)
{
    for (const auto& r : cfg.degree_rows())
        for (int q : r)
            if (q < 0)
                throw PreconditionError("normalize needs nonnegative entries");
    std::vector<int> dims = cfg.dimensions();
    std::vector<std::vector<int>> rows = cfg.degree_rows();

    for (;;) {
        const std::size_t m = rows.empty() ? 0 : rows.front().size();
        for (std::size_t j = 0; j < m; ++j) {
            int sum = 0;
            for (const auto& r : rows)
                sum += r[j];
            if (sum == 0)
                throw PreconditionError("normalize: a column has no positive entry");
        }
        std::size_t target = m, target_row = 0;
        for (std::size_t j = 0; j < m && target == m; ++j) {
            int sum = 0;
            std::size_t where = 0;
            for (std::size_t i = 0; i < rows.size(); ++i) {
                sum += rows[i][j];
                if (rows[i][j] != 0)
                    where = i;
            }
            if (sum == 1) {
                target = j;
                target_row = where;
            }
        }
        if (target == m)
            break;
        for (auto& r : rows)
            r.erase(r.begin() + static_cast<std::ptrdiff_t>(target));
        if (--dims[target_row] == 0) {
            dims.erase(dims.begin() + static_cast<std::ptrdiff_t>(target_row));
            rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(target_row));
        }
        if (rows.empty() || rows.front().empty())
            throw PreconditionError("normalization annihilates the configuration matrix");
    }
    return ConfigurationMatrix(std::move(dims), std::move(rows));
}

ConfigurationMatrix permute(const ConfigurationMatrix& cfg, const std::vector<std::size_t>& rows,
                            const std::vector<std::size_t>& columns)
{
    if (rows.size() != cfg.rows() || columns.size() != cfg.columns())
        throw InvalidArgument("permutation size mismatch");
    std::vector<int> dims;
    std::vector<std::vector<int>> degrees;
    for (std::size_t r : rows) {
        dims.push_back(cfg.n(r));
        std::vector<int> row;
        for (std::size_t c : columns)
            row.push_back(cfg.entry(r, c));
        degrees.push_back(std::move(row));
    }
    return ConfigurationMatrix(std::move(dims), std::move(degrees));
}

std::string CanonicalKey::hex() const
{
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(bytes_.size() * 2);
    for (unsigned char c : bytes_) {
        out += digits[c >> 4];
        out += digits[c & 15];
    }
    return out;
}

} // namespace cicy
