#include "cicy/invariants.hpp"

#include "cicy/error.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>
#include <unordered_map>

namespace cicy {

namespace {

void require_valid(const ConfigurationMatrix& cfg, const char* what)
{
    if (!cfg.is_valid())
        throw PreconditionError(std::string(what) +
                                " needs a valid configuration (nonnegative entries, dimension >= 1)");
}

class BettiSolver {
public:
    Integer solve(const ConfigurationMatrix& cfg)
    {
        auto key = canonical_key(cfg);
        if (auto it = memo_.find(key); it != memo_.end())
            return it->second;
        Integer value = compute(cfg);
        memo_.emplace(std::move(key), value);
        return value;
    }

private:
    Integer compute(const ConfigurationMatrix& cfg)
    {
        const int dim = cfg.dimension();
        if (dim <= 1)
            throw UnsupportedError("second Betti number of a piece of dimension " + std::to_string(dim) +
                                   " is not covered by the recursion:\n" + cfg.render());
        if (dim == 2)
            return euler_number(cfg) - 2;

        const std::size_t m = cfg.columns();
        if (m >= 63)
            throw UnsupportedError("too many columns for the subset recursion");
        Integer total = static_cast<long>(cfg.rows());
        const std::uint64_t full = (std::uint64_t{1} << m) - 1;
        for (std::uint64_t mask = 1; mask < full; ++mask) {
            std::vector<std::size_t> columns;
            for (std::size_t j = 0; j < m; ++j)
                if (mask >> j & 1)
                    columns.push_back(j);
            auto reduced = reduce_columns(cfg, columns);
            if (!reduced.piece)
                throw UnsupportedError("a selected column set vanishes identically");
            Integer b = solve(*reduced.piece) + reduced.dropped_factors;
            if (columns.size() % 2 == 1)
                total -= b;
            else
                total += b;
        }
        return m % 2 == 1 ? total : Integer(-total);
    }

    std::map<CanonicalKey, Integer> memo_;
};

} // namespace

ReducedPiece reduce_columns(const ConfigurationMatrix& cfg, const std::vector<std::size_t>& columns)
{
    ReducedPiece out;
    std::vector<int> dims;
    std::vector<std::vector<int>> rows;
    for (std::size_t i = 0; i < cfg.rows(); ++i) {
        std::vector<int> row;
        bool touched = false;
        for (std::size_t j : columns) {
            row.push_back(cfg.entry(i, j));
            touched = touched || cfg.entry(i, j) != 0;
        }
        if (touched) {
            dims.push_back(cfg.n(i));
            rows.push_back(std::move(row));
        } else {
            ++out.dropped_factors;
        }
    }
    if (!rows.empty())
        out.piece.emplace(std::move(dims), std::move(rows));
    return out;
}

Integer euler_number(const ConfigurationMatrix& cfg)
{
    require_valid(cfg, "euler_number");
    const AmbientSpace& ambient = cfg.ambient();
    const int d = cfg.dimension();
    const auto columns = cfg.column_degrees();

    // {c(T_V) / c(E)}_d, then integrate against c_m(E) = prod_j c_1(L_j).
    ChowClass quotient = tangent_chern(ambient, d);
    for (const auto& column : columns)
        quotient = divide_by_one_plus_linear(quotient, column, d);
    return integrate_product(quotient.graded_part(d), columns);
}

Integer betti2(const ConfigurationMatrix& cfg)
{
    require_valid(cfg, "betti2");
    if (is_block_diagonal(cfg))
        throw PreconditionError("betti2 needs a non-block-diagonal configuration");
    if (cfg.dimension() < 2)
        throw PreconditionError("betti2 needs dimension >= 2");
    BettiSolver solver;
    return solver.solve(cfg);
}

HodgePair hodge_numbers(const ConfigurationMatrix& cfg)
{
    if (!is_cicy(cfg))
        throw PreconditionError("Hodge numbers are computed for CICY 3-fold configurations only");
    Integer e = euler_number(cfg);
    if (e % 2 != 0)
        throw InternalError("odd Euler number " + e.str() + " for a Calabi-Yau 3-fold");
    Integer h11 = betti2(cfg);
    return HodgePair{h11, h11 - e / 2};
}

Integer koszul_chi(const ConfigurationMatrix& cfg, const MultiDegree& twist)
{
    const std::size_t m = cfg.columns();
    const auto columns = cfg.column_degrees();
    Integer chi = 0;
    // Depth-first over subsets S, carrying twist - sum_{j in S} d_j.
    auto visit = [&](auto&& self, std::size_t j, const MultiDegree& degree, bool odd) -> void {
        if (j == m) {
            Integer term = chi_line_bundle(cfg.ambient(), degree);
            if (odd)
                chi -= term;
            else
                chi += term;
            return;
        }
        self(self, j + 1, degree, odd);
        self(self, j + 1, degree - columns[j], !odd);
    };
    visit(visit, 0, twist, false);
    return chi;
}

HilbertPolynomial hilbert_polynomial(const ConfigurationMatrix& cfg, const MultiDegree& polarization)
{
    require_valid(cfg, "hilbert_polynomial");
    if (polarization.size() != cfg.rows())
        throw InvalidArgument("polarization has " + std::to_string(polarization.size()) +
                              " entries, the ambient has " + std::to_string(cfg.rows()) + " factors");
    for (int p : polarization)
        if (p < 1)
            throw InvalidArgument("polarization must be ample (all entries >= 1)");

    const int d = cfg.dimension();
    std::vector<Rational> xs, ys;
    for (int l = 0; l <= d; ++l) {
        xs.emplace_back(l);
        ys.emplace_back(koszul_chi(cfg, l * polarization));
    }

    // Lagrange interpolation, expanded into monomial coefficients.
    std::vector<Rational> coefficients(d + 1, Rational(0));
    for (int i = 0; i <= d; ++i) {
        std::vector<Rational> basis{Rational(1)};
        Rational denominator = 1;
        for (int j = 0; j <= d; ++j) {
            if (j == i)
                continue;
            std::vector<Rational> next(basis.size() + 1, Rational(0));
            for (std::size_t t = 0; t < basis.size(); ++t) {
                next[t + 1] += basis[t];
                next[t] -= basis[t] * xs[j];
            }
            basis = std::move(next);
            denominator *= xs[i] - xs[j];
        }
        for (std::size_t t = 0; t < basis.size(); ++t)
            coefficients[t] += ys[i] * basis[t] / denominator;
    }
    while (coefficients.size() > 1 && coefficients.back() == 0)
        coefficients.pop_back();
    return HilbertPolynomial(std::move(coefficients), polarization);
}

Integer ci_point_count(const AmbientSpace& ambient, std::span<const MultiDegree> bundles)
{
    if (static_cast<int>(bundles.size()) != ambient.dimension())
        throw InvalidArgument("expected " + std::to_string(ambient.dimension()) + " bundles on " +
                              ambient.to_string() + ", got " + std::to_string(bundles.size()));
    for (const auto& b : bundles)
        if (b.size() != ambient.factor_count())
            throw InvalidArgument("multidegree " + b.to_string() + " does not match " + ambient.to_string());
    return integrate_product(ChowClass::one(ambient), bundles);
}

Integer double_cover_euler(const Integer& e_base, const Integer& e_branch)
{
    return 2 * e_base - e_branch;
}

// ---------------------------------------------------------------------------
// HilbertPolynomial

HilbertPolynomial::HilbertPolynomial(std::vector<Rational> coefficients, MultiDegree polarization)
    : coefficients_(std::move(coefficients)), polarization_(std::move(polarization))
{
    if (coefficients_.empty())
        coefficients_.emplace_back(0);
}

Rational HilbertPolynomial::operator()(const Rational& l) const
{
    Rational value = 0;
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it)
        value = value * l + *it;
    return value;
}

Integer HilbertPolynomial::value(long l) const
{
    Rational v = (*this)(Rational(l));
    if (boost::multiprecision::denominator(v) != 1)
        throw InternalError("Hilbert polynomial takes a non-integral value at l = " + std::to_string(l));
    return boost::multiprecision::numerator(v);
}

std::string HilbertPolynomial::to_string() const
{
    std::ostringstream os;
    bool first = true;
    for (int power = degree(); power >= 0; --power) {
        Rational c = coefficients_[power];
        if (c == 0)
            continue;
        bool negative = c < 0;
        if (negative)
            c = -c;
        os << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
        first = false;

        bool integral = boost::multiprecision::denominator(c) == 1;
        std::string coeff = integral ? boost::multiprecision::numerator(c).str() : "(" + c.str() + ")";
        if (power == 0)
            os << coeff;
        else {
            if (!(integral && c == 1))
                os << coeff << "*";
            os << "l";
            if (power > 1)
                os << "^" << power;
        }
    }
    if (first)
        os << "0";
    return os.str();
}

} // namespace cicy
