#pragma once

// Exact arithmetic in the Chow ring of a product of projective spaces,
//
//     A*(P^{n_1} x ... x P^{n_k}) = Z[s_1, ..., s_k] / (s_i^{n_i + 1}),
//
// together with the Chern/Segre calculus of direct sums of line bundles that
// the invariant and transition computations are written in.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <initializer_list>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace cicy {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// The ambient V = P^{n_1} x ... x P^{n_k}. Cheap to copy.
class AmbientSpace {
public:
    explicit AmbientSpace(std::vector<int> factors);
    AmbientSpace(std::initializer_list<int> factors) : AmbientSpace(std::vector<int>(factors)) {}

    std::size_t factor_count() const noexcept { return data_->factors.size(); }
    int factor(std::size_t i) const { return data_->factors.at(i); }
    const std::vector<int>& factors() const noexcept { return data_->factors; }

    /// dim V = sum of the n_i.
    int dimension() const noexcept { return data_->dimension; }

    /// Number of monomials s^e with 0 <= e_i <= n_i.
    std::uint64_t lattice_size() const noexcept { return data_->lattice_size; }
    std::uint64_t stride(std::size_t i) const { return data_->strides.at(i); }

    /// "P4 x P1"
    std::string to_string() const;

    friend bool operator==(const AmbientSpace& a, const AmbientSpace& b)
    {
        return a.data_ == b.data_ || a.data_->factors == b.data_->factors;
    }

private:
    struct Data {
        std::vector<int> factors;
        std::vector<std::uint64_t> strides;
        std::uint64_t lattice_size = 1;
        int dimension = 0;
    };
    std::shared_ptr<const Data> data_;
};

/// Degree vector of a line bundle O(d_1, ..., d_k). Entries may be negative.
class MultiDegree {
public:
    MultiDegree() = default;
    explicit MultiDegree(std::vector<int> degrees) : degrees_(std::move(degrees)) {}
    MultiDegree(std::initializer_list<int> degrees) : degrees_(degrees) {}

    std::size_t size() const noexcept { return degrees_.size(); }
    int operator[](std::size_t i) const { return degrees_[i]; }
    int& operator[](std::size_t i) { return degrees_[i]; }
    const std::vector<int>& values() const noexcept { return degrees_; }
    auto begin() const noexcept { return degrees_.begin(); }
    auto end() const noexcept { return degrees_.end(); }

    int sum() const;
    bool is_zero() const;
    bool is_nonnegative() const;

    MultiDegree& operator+=(const MultiDegree& other);
    MultiDegree& operator-=(const MultiDegree& other);
    friend MultiDegree operator+(MultiDegree a, const MultiDegree& b) { return a += b; }
    friend MultiDegree operator-(MultiDegree a, const MultiDegree& b) { return a -= b; }
    friend MultiDegree operator*(int scale, MultiDegree a);

    friend bool operator==(const MultiDegree&, const MultiDegree&) = default;
    friend auto operator<=>(const MultiDegree&, const MultiDegree&) = default;

    /// "(1,0,2)"
    std::string to_string() const;

private:
    std::vector<int> degrees_;
};

/// An element of A*(V). Terms are stored sparsely, keyed by the mixed-radix
/// index of their exponent vector; zero coefficients are never stored and every
/// exponent satisfies e_i <= n_i.
class ChowClass {
public:
    using Exponents = std::vector<int>;

    struct Term {
        Exponents exponents;
        Integer coefficient;
    };

    explicit ChowClass(AmbientSpace ambient) : ambient_(std::move(ambient)) {}

    static ChowClass zero(const AmbientSpace& ambient) { return ChowClass(ambient); }
    static ChowClass one(const AmbientSpace& ambient) { return constant(ambient, 1); }
    static ChowClass constant(const AmbientSpace& ambient, const Integer& value);
    /// The hyperplane class s_{i+1} (0-based factor index).
    static ChowClass hyperplane(const AmbientSpace& ambient, std::size_t factor);
    /// coefficient * s^exponents; zero when some e_i > n_i.
    static ChowClass monomial(const AmbientSpace& ambient, const Exponents& exponents,
                              const Integer& coefficient = 1);
    /// c_1(O(d)) = sum_i d_i s_i.
    static ChowClass linear_form(const AmbientSpace& ambient, const MultiDegree& degree);

    const AmbientSpace& ambient() const noexcept { return ambient_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t term_count() const noexcept { return terms_.size(); }

    Integer coefficient(const Exponents& exponents) const;
    Integer constant_term() const;

    /// Highest total degree of a stored term, -1 for the zero class.
    int degree() const;

    /// Terms in descending graded-lex order.
    std::vector<Term> terms() const;

    /// The homogeneous component of the given total degree.
    ChowClass graded_part(int degree) const;
    /// Drops every term of total degree above max_degree.
    ChowClass truncated(int max_degree) const;

    ChowClass& operator+=(const ChowClass& other);
    ChowClass& operator-=(const ChowClass& other);
    ChowClass& operator*=(const Integer& scale);

    friend ChowClass operator+(ChowClass a, const ChowClass& b) { return a += b; }
    friend ChowClass operator-(ChowClass a, const ChowClass& b) { return a -= b; }
    friend ChowClass operator-(ChowClass a) { return a *= -1; }
    friend ChowClass operator*(const Integer& scale, ChowClass a) { return a *= scale; }
    friend ChowClass operator*(const ChowClass& a, const ChowClass& b);

    friend bool operator==(const ChowClass& a, const ChowClass& b);

    /// Debug rendering, e.g. "5*s1^2 + 4*s1*s2"; "0" for the zero class.
    std::string to_string() const;

    // Low-level access for the kernels in chow_ring.cpp.
    using Index = std::uint64_t;
    const std::vector<std::pair<Index, Integer>>& raw_terms() const noexcept { return terms_; }
    static ChowClass from_raw(AmbientSpace ambient, std::vector<std::pair<Index, Integer>> terms);

private:
    AmbientSpace ambient_;
    std::vector<std::pair<Index, Integer>> terms_;
};

ChowClass add(const ChowClass& a, const ChowClass& b);
ChowClass mul(const ChowClass& a, const ChowClass& b);

/// Product with every term of total degree above max_degree discarded.
ChowClass mul_truncated(const ChowClass& a, const ChowClass& b, int max_degree);

/// Coefficient of the point class prod s_i^{n_i}.
Integer integrate(const ChowClass& a);

/// int_V a * prod_j c_1(L_j), without expanding the full product.
Integer integrate_product(const ChowClass& a, std::span<const MultiDegree> forms);

/// prod_j (1 + c_1(L_j)); the degree-p piece is c_p of the direct sum.
/// A negative max_degree keeps everything.
ChowClass chern_of_sum(const AmbientSpace& ambient, std::span<const MultiDegree> bundles,
                       int max_degree = -1);

/// Inverse of a class with constant term 1, computed degree by degree:
/// s_0 = 1, s_p = -sum_{i=1..p} c_i s_{p-i}. Throws InvalidArgument otherwise.
ChowClass segre_inverse(const ChowClass& c);

/// prod_i (1 + s_i)^{n_i + 1}, the total Chern class of T_V.
ChowClass tangent_chern(const AmbientSpace& ambient, int max_degree = -1);

/// c * c_1(L), optionally truncated.
ChowClass multiply_by_linear(const ChowClass& c, const MultiDegree& degree, int max_degree = -1);

/// c / (1 + c_1(L)) in the truncated ring, by Q_p = c_p - c_1(L) Q_{p-1}.
ChowClass divide_by_one_plus_linear(const ChowClass& c, const MultiDegree& degree,
                                    int max_degree = -1);

/// a(a-1)...(a-n+1)/n!, valid for every integer a.
Integer polynomial_binomial(const Integer& a, int n);

/// chi(P^{n_1} x ... x P^{n_k}, O(d)) = prod_i C(d_i + n_i, n_i).
Integer chi_line_bundle(const AmbientSpace& ambient, const MultiDegree& degree);

} // namespace cicy
