#pragma once

#include "cicy/chow_ring.hpp"
#include "cicy/configuration.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cicy {

struct HodgePair {
    Integer h11;
    Integer h21;

    friend bool operator==(const HodgePair&, const HodgePair&) = default;
};

/// Hilbert polynomial chi(O_X(l)) of a general member, as exact rational
/// coefficients in l (coefficients[i] multiplies l^i).
class HilbertPolynomial {
public:
    HilbertPolynomial(std::vector<Rational> coefficients, MultiDegree polarization);

    const std::vector<Rational>& coefficients() const noexcept { return coefficients_; }
    const MultiDegree& polarization() const noexcept { return polarization_; }
    int degree() const noexcept { return static_cast<int>(coefficients_.size()) - 1; }

    Rational operator()(const Rational& l) const;
    /// Exact value at an integer argument; throws InternalError if not integral.
    Integer value(long l) const;

    /// "(5/24)*l^4 + ..." style rendering, highest power first.
    std::string to_string() const;

    friend bool operator==(const HilbertPolynomial&, const HilbertPolynomial&) = default;

private:
    std::vector<Rational> coefficients_;
    MultiDegree polarization_;
};

/// Euler number of a general smooth member in any dimension d >= 1:
/// int_V {c(T_V) s(E)}_d c_m(E) with E the sum of the column bundles.
Integer euler_number(const ConfigurationMatrix& cfg);

/// Second Betti number of a general member, via the alternating sum forced by
/// the Lefschetz-type exact sequence over the partial intersections D_J.
/// Throws PreconditionError for block-diagonal input and UnsupportedError when a
/// nested piece has dimension <= 1.
Integer betti2(const ConfigurationMatrix& cfg);

/// h11 = b2, h21 = h11 - e/2 for a CICY 3-fold.
HodgePair hodge_numbers(const ConfigurationMatrix& cfg);

/// chi(O_X(l)) via the Koszul resolution of the complete intersection. The
/// polarization must be ample (all entries >= 1).
HilbertPolynomial hilbert_polynomial(const ConfigurationMatrix& cfg, const MultiDegree& polarization);

/// chi(O_X(l * polarization)) evaluated directly from the Koszul sum.
Integer koszul_chi(const ConfigurationMatrix& cfg, const MultiDegree& twist);

/// Number of points cut out by dim V general sections: int prod_j c_1(L_j).
Integer ci_point_count(const AmbientSpace& ambient, std::span<const MultiDegree> bundles);

/// Euler number of a double cover branched along a smooth divisor.
Integer double_cover_euler(const Integer& e_base, const Integer& e_branch);

/// Splits D_J = D'_J x prod P^{n_l}: keeps only the rows on which some selected
/// column is nonzero. Returns the reduced configuration (or nullopt when no row
/// survives) and the number of dropped projective factors.
struct ReducedPiece {
    std::optional<ConfigurationMatrix> piece;
    int dropped_factors = 0;
};
ReducedPiece reduce_columns(const ConfigurationMatrix& cfg, const std::vector<std::size_t>& columns);

} // namespace cicy
