#include "cicy/transitions.hpp"

#include "cicy/error.hpp"
#include "cicy/invariants.hpp"

#include <algorithm>

namespace cicy {

namespace {

void require_cicy_site(const ContractionSite& site, const char* what)
{
    if (!is_cicy(site.config()))
        throw PreconditionError(std::string(what) + " needs a CICY 3-fold configuration");
}

} // namespace

bool is_contraction_row(const ConfigurationMatrix& cfg, std::size_t row)
{
    if (row >= cfg.rows() || cfg.rows() < 2)
        return false;
    int ones = 0;
    for (int q : cfg.row(row)) {
        if (q == 1)
            ++ones;
        else if (q != 0)
            return false;
    }
    return ones == cfg.n(row) + 1;
}

ContractionSite::ContractionSite(ConfigurationMatrix config, std::size_t row)
    : config_(std::move(config)), row_(row)
{
    if (!is_contraction_row(config_, row_))
        throw PreconditionError("row " + std::to_string(row_ + 1) +
                                " is not a contraction site (needs n + 1 ones and zeros elsewhere, "
                                "and at least two rows)");
    for (std::size_t j = 0; j < config_.columns(); ++j)
        (config_.entry(row_, j) == 1 ? one_columns_ : other_columns_).push_back(j);
}

AmbientSpace ContractionSite::reduced_ambient() const
{
    auto dims = config_.dimensions();
    dims.erase(dims.begin() + static_cast<std::ptrdiff_t>(row_));
    return AmbientSpace(std::move(dims));
}

MultiDegree ContractionSite::restrict_column(std::size_t j) const
{
    std::vector<int> d;
    for (std::size_t i = 0; i < config_.rows(); ++i)
        if (i != row_)
            d.push_back(config_.entry(i, j));
    return MultiDegree(std::move(d));
}

std::vector<MultiDegree> ContractionSite::e_bundles() const
{
    std::vector<MultiDegree> out;
    for (std::size_t j : one_columns_)
        out.push_back(restrict_column(j));
    return out;
}

std::vector<MultiDegree> ContractionSite::f_bundles() const
{
    std::vector<MultiDegree> out;
    for (std::size_t j : other_columns_)
        out.push_back(restrict_column(j));
    return out;
}

std::vector<ContractionSite> find_contraction_sites(const ConfigurationMatrix& cfg)
{
    std::vector<ContractionSite> sites;
    for (std::size_t i = 0; i < cfg.rows(); ++i)
        if (is_contraction_row(cfg, i))
            sites.emplace_back(cfg, i);
    return sites;
}

ConfigurationMatrix contract(const ContractionSite& site)
{
    const auto& cfg = site.config();
    const auto& ones = site.one_columns();
    std::vector<int> dims;
    std::vector<std::vector<int>> rows;
    for (std::size_t i = 0; i < cfg.rows(); ++i) {
        if (i == site.row())
            continue;
        dims.push_back(cfg.n(i));
        std::vector<int> row;
        for (std::size_t j = 0; j < cfg.columns(); ++j) {
            if (j == ones.front()) {
                int merged = 0;
                for (std::size_t o : ones)
                    merged += cfg.entry(i, o);
                row.push_back(merged);
            } else if (!std::binary_search(ones.begin(), ones.end(), j)) {
                row.push_back(cfg.entry(i, j));
            }
        }
        rows.push_back(std::move(row));
    }
    return ConfigurationMatrix(std::move(dims), std::move(rows));
}

ConfigurationMatrix split(const ConfigurationMatrix& cfg, std::size_t column, int n,
                          const std::vector<MultiDegree>& parts)
{
    if (column >= cfg.columns())
        throw InvalidArgument("split column " + std::to_string(column + 1) + " out of range");
    if (n < 1)
        throw InvalidArgument("split needs n >= 1");
    if (parts.size() != static_cast<std::size_t>(n) + 1)
        throw InvalidArgument("split into P" + std::to_string(n) + " needs " + std::to_string(n + 1) +
                              " parts, got " + std::to_string(parts.size()));
    MultiDegree total(std::vector<int>(cfg.rows(), 0));
    for (const auto& p : parts) {
        if (p.size() != cfg.rows())
            throw InvalidArgument("split part " + p.to_string() + " has the wrong length");
        if (!p.is_nonnegative())
            throw InvalidArgument("split part " + p.to_string() + " has a negative entry");
        total += p;
    }
    if (total != cfg.column(column))
        throw InvalidArgument("split parts sum to " + total.to_string() + ", column is " +
                              cfg.column(column).to_string());

    std::vector<int> dims = cfg.dimensions();
    std::vector<std::vector<int>> rows;
    for (std::size_t i = 0; i < cfg.rows(); ++i) {
        std::vector<int> row;
        for (std::size_t j = 0; j < cfg.columns(); ++j) {
            if (j == column)
                for (const auto& p : parts)
                    row.push_back(p[i]);
            else
                row.push_back(cfg.entry(i, j));
        }
        rows.push_back(std::move(row));
    }
    std::vector<int> new_row;
    for (std::size_t j = 0; j < cfg.columns(); ++j) {
        if (j == column)
            new_row.insert(new_row.end(), parts.size(), 1);
        else
            new_row.push_back(0);
    }
    dims.push_back(n);
    rows.push_back(std::move(new_row));
    return ConfigurationMatrix(std::move(dims), std::move(rows));
}

Integer odp_count(const ContractionSite& site)
{
    require_cicy_site(site, "odp_count");
    AmbientSpace p = site.reduced_ambient();
    auto e = site.e_bundles();
    ChowClass chern_e = chern_of_sum(p, e, 3);
    ChowClass c1 = chern_e.graded_part(1);
    ChowClass c2 = chern_e.graded_part(2);
    ChowClass c3 = chern_e.graded_part(3);

    // c_top(F) is the product of the first Chern classes of its summands.
    ChowClass quartic = mul_truncated(c2, c2, 4) - mul_truncated(c1, c3, 4);
    Integer count = integrate_product(quartic, site.f_bundles());
    if (count < 0)
        throw ConsistencyError("negative ODP count " + count.str() + " at row " +
                               std::to_string(site.row() + 1) + " of\n" + site.config().render());
    return count;
}

Integer euler_difference(const ContractionSite& site)
{
    Integer closed = 2 * odp_count(site);
    Integer direct = euler_number(site.config()) - euler_number(contract(site));
    if (closed != direct)
        throw ConsistencyError("Euler difference mismatch at row " + std::to_string(site.row() + 1) +
                               ": Chern-class formula gives " + closed.str() +
                               ", Gauss-Bonnet difference gives " + direct.str() + "\n" +
                               site.config().render());
    return closed;
}

TransitionReport analyze(const ContractionSite& site)
{
    TransitionReport report;
    report.odp_count = odp_count(site);
    report.euler_resolved = euler_number(site.config());
    report.euler_smoothed = euler_number(contract(site));
    if (report.euler_resolved - report.euler_smoothed != 2 * report.odp_count)
        throw ConsistencyError("Euler difference mismatch at row " + std::to_string(site.row() + 1) +
                               ": Chern-class formula gives " + Integer(2 * report.odp_count).str() +
                               ", Gauss-Bonnet difference gives " +
                               Integer(report.euler_resolved - report.euler_smoothed).str());
    report.conifold_certified = true;
    report.ineffective = report.odp_count == 0;
    return report;
}

int degeneracy_expected_codim(int m, int n, int k)
{
    if (k < 0 || k > std::min(m, n))
        throw InvalidArgument("rank bound k must satisfy 0 <= k <= min(m, n)");
    return (m - k) * (n - k);
}

} // namespace cicy
