#include "cicy/chow_ring.hpp"
#include "cicy/error.hpp"

#include "doctest.h"

#include <random>

using namespace cicy;

namespace {

ChowClass random_class(const AmbientSpace& amb, std::mt19937_64& rng, int max_terms, int spread = 5)
{
    ChowClass c(amb);
    std::uniform_int_distribution<int> terms(0, max_terms);
    std::uniform_int_distribution<int> coeff(-spread, spread);
    for (int t = terms(rng); t > 0; --t) {
        ChowClass::Exponents e;
        for (int n : amb.factors())
            e.push_back(std::uniform_int_distribution<int>(0, n)(rng));
        c += ChowClass::monomial(amb, e, coeff(rng));
    }
    return c;
}

AmbientSpace random_ambient(std::mt19937_64& rng, std::uint64_t max_lattice)
{
    for (;;) {
        int k = std::uniform_int_distribution<int>(1, 4)(rng);
        std::vector<int> dims;
        std::uint64_t lattice = 1;
        for (int i = 0; i < k; ++i) {
            dims.push_back(std::uniform_int_distribution<int>(1, 6)(rng));
            lattice *= static_cast<std::uint64_t>(dims.back() + 1);
        }
        if (lattice <= max_lattice)
            return AmbientSpace(dims);
    }
}

} // namespace

TEST_CASE("add")
{
    AmbientSpace p3p1{3, 1};
    auto s = ChowClass::hyperplane(p3p1, 0);
    auto t = ChowClass::hyperplane(p3p1, 1);
    CHECK((s + (-s)).is_zero());
    CHECK(s * s + ChowClass::zero(p3p1) == s * s);
    ChowClass a = 5 * (s * s) + 4 * (s * t);
    CHECK(a - 4 * (s * t) == 5 * (s * s));
    CHECK_THROWS_AS(add(s, ChowClass::hyperplane(AmbientSpace{4}, 0)), InvalidArgument);
}

TEST_CASE("mul truncates")
{
    AmbientSpace p4{4};
    auto h = ChowClass::hyperplane(p4, 0);
    CHECK((h * ChowClass::monomial(p4, {4})).is_zero());
    CHECK(integrate(ChowClass::monomial(p4, {2}, 4) * ChowClass::monomial(p4, {2}, 4)) == 16);

    AmbientSpace p3p1{3, 1};
    auto s = ChowClass::hyperplane(p3p1, 0);
    auto t = ChowClass::hyperplane(p3p1, 1);
    ChowClass c2 = 5 * (s * s) + 4 * (s * t);
    CHECK(c2 * c2 == ChowClass::monomial(p3p1, {3, 1}, 40));
    CHECK(mul_truncated(c2, c2, 3).is_zero());
}

TEST_CASE("integrate")
{
    CHECK(integrate(ChowClass::monomial(AmbientSpace{4}, {4}, 16)) == 16);
    CHECK(integrate(ChowClass::monomial(AmbientSpace{3, 1}, {3, 1}, 28)) == 28);
    CHECK(integrate(ChowClass::zero(AmbientSpace{2})) == 0);
    CHECK(integrate(ChowClass::monomial(AmbientSpace{3, 1}, {3, 0}, 7)) == 0);
}

TEST_CASE("chern_of_sum")
{
    AmbientSpace p3p1{3, 1};
    std::vector<MultiDegree> e{{1, 0}, {1, 0}, {2, 2}};
    ChowClass c = chern_of_sum(p3p1, e);
    CHECK(c.graded_part(1).to_string() == "4*s1 + 2*s2");
    CHECK(c.graded_part(2).to_string() == "5*s1^2 + 4*s1*s2");
    CHECK(c.graded_part(3).to_string() == "2*s1^3 + 2*s1^2*s2");
    CHECK(c.constant_term() == 1);
    CHECK(chern_of_sum(p3p1, e, 2) == c.truncated(2));

    CHECK(chern_of_sum(p3p1, std::vector<MultiDegree>{}) == ChowClass::one(p3p1));

    AmbientSpace p4{4};
    std::vector<MultiDegree> quintic_split{{4}, {1}};
    CHECK(chern_of_sum(p4, quintic_split).to_string() == "4*s1^2 + 5*s1 + 1");
}

TEST_CASE("segre_inverse")
{
    AmbientSpace p4{4};
    CHECK(segre_inverse(ChowClass::one(p4)) == ChowClass::one(p4));
    ChowClass c = ChowClass::one(p4) + ChowClass::linear_form(p4, MultiDegree{5});
    ChowClass s = segre_inverse(c);
    for (int p = 0; p <= 4; ++p) {
        Integer expected = 1;
        for (int i = 0; i < p; ++i)
            expected *= -5;
        CHECK(s.coefficient({p}) == expected);
    }
    CHECK_THROWS_AS(segre_inverse(ChowClass::constant(p4, 2)), InvalidArgument);
    CHECK_THROWS_AS(segre_inverse(ChowClass::zero(p4)), InvalidArgument);
}

TEST_CASE("tangent_chern")
{
    CHECK(tangent_chern(AmbientSpace{1}).to_string() == "2*s1 + 1");
    ChowClass p4 = tangent_chern(AmbientSpace{4});
    CHECK(p4.coefficient({0}) == 1);
    CHECK(p4.coefficient({1}) == 5);
    CHECK(p4.coefficient({2}) == 10);
    CHECK(p4.coefficient({3}) == 10);
    CHECK(p4.coefficient({4}) == 5);

    AmbientSpace p1x4{1, 1, 1, 1};
    ChowClass expected = ChowClass::one(p1x4);
    for (std::size_t i = 0; i < 4; ++i)
        expected = expected * (ChowClass::one(p1x4) + 2 * ChowClass::hyperplane(p1x4, i));
    CHECK(tangent_chern(p1x4) == expected);
    CHECK(tangent_chern(p1x4, 2) == expected.truncated(2));
}

TEST_CASE("chi_line_bundle")
{
    AmbientSpace p4{4};
    CHECK(chi_line_bundle(p4, MultiDegree{0}) == 1);
    CHECK(chi_line_bundle(p4, MultiDegree{-1}) == 0);
    CHECK(chi_line_bundle(p4, MultiDegree{-5}) == 1);
    CHECK(chi_line_bundle(p4, MultiDegree{1}) == 5);
    CHECK(polynomial_binomial(-1, 4) == 1);
    CHECK(polynomial_binomial(7, 0) == 1);
    CHECK(polynomial_binomial(3, 4) == 0);

    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        AmbientSpace amb = random_ambient(rng, 10000);
        CHECK(chi_line_bundle(amb, MultiDegree(std::vector<int>(amb.factor_count(), 0))) == 1);
        std::vector<int> d;
        Integer product = 1;
        for (int n : amb.factors()) {
            d.push_back(std::uniform_int_distribution<int>(-9, 9)(rng));
            product *= chi_line_bundle(AmbientSpace{n}, MultiDegree{d.back()});
        }
        CHECK(chi_line_bundle(amb, MultiDegree(d)) == product);
    }
}

TEST_CASE("to_string ordering")
{
    AmbientSpace p3p1{3, 1};
    ChowClass c = ChowClass::monomial(p3p1, {1, 1}, 4) + ChowClass::monomial(p3p1, {2, 0}, 5) +
                  ChowClass::monomial(p3p1, {0, 0}, -2) + ChowClass::monomial(p3p1, {0, 1}, -1);
    CHECK(c.to_string() == "5*s1^2 + 4*s1*s2 - s2 - 2");
    CHECK(ChowClass::zero(p3p1).to_string() == "0");
}

TEST_CASE("ring axioms on random classes")
{
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 300; ++trial) {
        AmbientSpace amb = random_ambient(rng, 400);
        auto a = random_class(amb, rng, 6);
        auto b = random_class(amb, rng, 6);
        auto c = random_class(amb, rng, 6);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK((a - a).is_zero());
        CHECK(a * ChowClass::one(amb) == a);

        for (std::size_t i = 0; i < amb.factor_count(); ++i) {
            ChowClass::Exponents e(amb.factor_count(), 0);
            e[i] = amb.factor(i);
            CHECK((a * ChowClass::monomial(amb, e) * ChowClass::hyperplane(amb, i)).is_zero());
        }

        CHECK(integrate(a + b) == integrate(a) + integrate(b));
        CHECK(integrate(3 * a) == 3 * integrate(a));
        for (int d = 0; d < amb.dimension(); ++d)
            CHECK(integrate(a.graded_part(d)) == 0);
    }
}

TEST_CASE("segre inverse identity, 10^4 randomized cases")
{
    std::mt19937_64 rng(7);
    int checked = 0;
    for (int trial = 0; trial < 10000; ++trial) {
        AmbientSpace amb = random_ambient(rng, trial % 100 == 0 ? 10000 : 300);
        ChowClass c = ChowClass::one(amb) + random_class(amb, rng, 4).truncated(amb.dimension());
        c -= ChowClass::constant(amb, c.constant_term() - 1);
        ChowClass s = segre_inverse(c);
        if (c * s == ChowClass::one(amb))
            ++checked;
    }
    CHECK(checked == 10000);
}

TEST_CASE("divide and multiply by linear forms")
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        AmbientSpace amb = random_ambient(rng, 500);
        auto a = random_class(amb, rng, 5);
        std::vector<int> d;
        for (std::size_t i = 0; i < amb.factor_count(); ++i)
            d.push_back(std::uniform_int_distribution<int>(-3, 3)(rng));
        MultiDegree deg(d);
        ChowClass one_plus = ChowClass::one(amb) + ChowClass::linear_form(amb, deg);
        CHECK(divide_by_one_plus_linear(a, deg) * one_plus == a);
        CHECK(multiply_by_linear(a, deg) == a * ChowClass::linear_form(amb, deg));
        std::vector<MultiDegree> forms{deg, deg};
        CHECK(integrate_product(a, forms) ==
              integrate(a * ChowClass::linear_form(amb, deg) * ChowClass::linear_form(amb, deg)));
    }
}
