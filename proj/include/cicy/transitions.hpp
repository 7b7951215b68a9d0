#pragma once

// Determinantal contractions between configuration matrices.
//
// A contraction site is a row [n || 1 ... 1 0 ... 0] with exactly n + 1 ones.
// Contracting it removes the P^n factor and merges the n + 1 one-columns into
// their sum; splitting is the inverse move. For a CICY 3-fold site the general
// contracted member acquires
//
//     N = int_P (c_2(E)^2 - c_1(E) c_3(E)) c_top(F)
//
// ordinary double points, where P is the ambient without the P^n factor, E the
// sum of the one-column bundles and F the sum of the others, all restricted to P.

#include "cicy/chow_ring.hpp"
#include "cicy/configuration.hpp"

#include <optional>
#include <vector>

namespace cicy {

class ContractionSite {
public:
    /// Throws PreconditionError if the row does not have the site shape.
    ContractionSite(ConfigurationMatrix config, std::size_t row);

    const ConfigurationMatrix& config() const noexcept { return config_; }
    std::size_t row() const noexcept { return row_; }
    int n() const { return config_.n(row_); }
    const std::vector<std::size_t>& one_columns() const noexcept { return one_columns_; }
    const std::vector<std::size_t>& other_columns() const noexcept { return other_columns_; }

    /// The ambient P without the P^n factor.
    AmbientSpace reduced_ambient() const;
    /// The n + 1 one-column multidegrees restricted to P.
    std::vector<MultiDegree> e_bundles() const;
    /// The remaining multidegrees restricted to P.
    std::vector<MultiDegree> f_bundles() const;

private:
    MultiDegree restrict_column(std::size_t j) const;

    ConfigurationMatrix config_;
    std::size_t row_;
    std::vector<std::size_t> one_columns_;
    std::vector<std::size_t> other_columns_;
};

struct TransitionReport {
    Integer odp_count;
    Integer euler_resolved;  ///< e of the split (resolved) member
    Integer euler_smoothed;  ///< e of the contracted (smoothed) member
    bool conifold_certified = false;
    bool ineffective = false;

    friend bool operator==(const TransitionReport&, const TransitionReport&) = default;
};

/// True when row has the site shape: n + 1 ones, zeros elsewhere.
bool is_contraction_row(const ConfigurationMatrix& cfg, std::size_t row);

/// One site per qualifying row; empty for single-row matrices.
std::vector<ContractionSite> find_contraction_sites(const ConfigurationMatrix& cfg);

/// Deletes the site row and replaces the one-columns by their sum, placed at the
/// position of the first one-column.
ConfigurationMatrix contract(const ContractionSite& site);

/// Replaces `column` by the n + 1 parts (inserted in place) and appends a P^n
/// row with ones on the new columns. Parts must be nonnegative and sum to the column.
ConfigurationMatrix split(const ConfigurationMatrix& cfg, std::size_t column, int n,
                          const std::vector<MultiDegree>& parts);

/// The closed Chern-class ODP count. Throws ConsistencyError if negative.
Integer odp_count(const ContractionSite& site);

/// 2 * odp_count, checked against euler_number(split) - euler_number(contracted).
/// Throws ConsistencyError on disagreement.
Integer euler_difference(const ContractionSite& site);

TransitionReport analyze(const ContractionSite& site);

/// (m - k)(n - k), the expected codimension of the rank <= k locus of an m x n map.
int degeneracy_expected_codim(int m, int n, int k);

} // namespace cicy
