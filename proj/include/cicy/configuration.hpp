#pragma once

#include "cicy/chow_ring.hpp"

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace cicy {

/// A configuration matrix [n || q]: the ambient dimensions n_i and the k x m
/// matrix of multidegrees q^i_j. Column j is the multidegree of the j-th
/// defining line bundle.
///
/// Construction only checks the shape (k >= 1, m >= 1, n_i >= 1, rectangular);
/// everything else is reported by validate().
class ConfigurationMatrix {
public:
    ConfigurationMatrix(std::vector<int> dimensions, std::vector<std::vector<int>> degrees);

    /// Rows as {n_i, {q^i_1, ..., q^i_m}}.
    struct Row {
        int n;
        std::vector<int> degrees;
    };
    static ConfigurationMatrix from_rows(const std::vector<Row>& rows);

    const AmbientSpace& ambient() const noexcept { return ambient_; }
    std::size_t rows() const noexcept { return degrees_.size(); }
    std::size_t columns() const noexcept { return degrees_.front().size(); }
    int n(std::size_t row) const { return ambient_.factor(row); }
    int entry(std::size_t row, std::size_t column) const { return degrees_.at(row).at(column); }
    const std::vector<int>& row(std::size_t i) const { return degrees_.at(i); }
    const std::vector<std::vector<int>>& degree_rows() const noexcept { return degrees_; }
    std::vector<int> dimensions() const { return ambient_.factors(); }

    MultiDegree column(std::size_t j) const;
    std::vector<MultiDegree> column_degrees() const;

    int row_sum(std::size_t i) const;
    int column_sum(std::size_t j) const;

    /// d = sum n_i - m.
    int dimension() const noexcept { return ambient_.dimension() - static_cast<int>(columns()); }

    /// Nonnegative entries and d >= 1.
    bool is_valid() const;

    friend bool operator==(const ConfigurationMatrix& a, const ConfigurationMatrix& b)
    {
        return a.ambient_ == b.ambient_ && a.degrees_ == b.degrees_;
    }

    /// One line per row, "n | q1 q2 ... qm".
    std::string render() const;

private:
    AmbientSpace ambient_;
    std::vector<std::vector<int>> degrees_;
};

/// Parses the text matrix format: one row per line as "n | q1 ... qm"; lines
/// whose first non-blank character is '#' and blank lines are skipped.
/// Throws ParseError with line and column.
ConfigurationMatrix parse_configuration(std::string_view text);

struct ValidationReport {
    int dimension = 0;
    bool nonnegative = true;
    bool column_sums_at_least_two = true; ///< normalized form
    bool calabi_yau = true;               ///< every row sums to n_i + 1
    bool block_diagonal = false;
    bool forbidden_block = false;         ///< a [1 || 2] block
    std::vector<std::size_t> short_columns;  ///< columns with sum < 2
    std::vector<std::size_t> non_cy_rows;

    bool valid() const { return nonnegative && dimension >= 1; }
};

ValidationReport validate(const ConfigurationMatrix& cfg);

/// d = 3 and the Calabi-Yau row-sum condition holds.
bool is_cicy(const ConfigurationMatrix& cfg);

/// True when the row/column incidence graph (edge iff q^i_j > 0) is disconnected.
bool is_block_diagonal(const ConfigurationMatrix& cfg);

/// True when some connected block is exactly [1 || 2].
bool has_forbidden_block(const ConfigurationMatrix& cfg);

/// Removes hyperplane-section columns (sum 1) until every column sum is >= 2.
ConfigurationMatrix normalize(const ConfigurationMatrix& cfg);

/// Lexicographically minimal serialization over all row and degree-column
/// permutations. Equal keys iff the matrices are equivalent.
class CanonicalKey {
public:
    CanonicalKey() = default;
    explicit CanonicalKey(std::string bytes) : bytes_(std::move(bytes)) {}

    const std::string& bytes() const noexcept { return bytes_; }
    std::string hex() const;

    friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
    friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;

private:
    std::string bytes_;
};

/// The canonical representative together with the permutations that produce
/// it: canonical row r is input row row_order[r], canonical column c is input
/// column column_order[c].
struct CanonicalForm {
    ConfigurationMatrix matrix;
    std::vector<std::size_t> row_order;
    std::vector<std::size_t> column_order;
    CanonicalKey key;
};

CanonicalForm canonical_form(const ConfigurationMatrix& cfg);
CanonicalKey canonical_key(const ConfigurationMatrix& cfg);

/// Row and column maps (from -> to) with to.entry(row_map[i], column_map[j]) == from.entry(i, j).
struct Isomorphism {
    std::vector<std::size_t> row_map;
    std::vector<std::size_t> column_map;
};

/// Throws PreconditionError when the matrices are not equivalent.
Isomorphism find_isomorphism(const ConfigurationMatrix& from, const ConfigurationMatrix& to);

/// Reorders rows and columns: result row r is cfg row rows[r], result column c is cfg column columns[c].
ConfigurationMatrix permute(const ConfigurationMatrix& cfg, const std::vector<std::size_t>& rows,
                            const std::vector<std::size_t>& columns);

} // namespace cicy
