#include <doctest.h>

#include "modext/theorems.hpp"

using namespace modext;

namespace {

AlgebraicModule zero_x_module(const FiniteAlgebra& a)
{
    AlgebraicModule m;
    m.base = a;
    m.inner = zero_algebra(0);
    m.action.algebra_dim = a.dim;
    m.action.dim = 0;
    m.action.left = Ten3(a.dim, 0, 0);
    m.action.right = Ten3(0, a.dim, 0);
    return m;
}

} // namespace

TEST_CASE("X = 0 reduces the theorems to weak amenability of A")
{
    for (auto a : {upper_triangular(2), zero_algebra(2), full_matrix(2)}) {
        AlgebraicModule m = zero_x_module(a);
        for (std::size_t n = 0; n <= 1; ++n) {
            ConditionReport odd = check_thm_odd(m, n);
            CHECK(odd.iff_consistent);
            CHECK(odd.conditions_hold == is_n_weakly_amenable(a, 2 * n + 1));
            ConditionReport even = check_thm_even(m, n);
            CHECK(even.iff_consistent);
            CHECK(even.conditions_hold == is_n_weakly_amenable(a, 2 * n));
        }
    }
}

TEST_CASE("master iff holds on handpicked modules")
{
    std::vector<AlgebraicModule> ms;
    ms.push_back(self_module(upper_triangular(2)));
    ms.push_back(self_module(diagonal_algebra(2)));
    ms.push_back(self_module(zero_algebra(2)));
    ms.push_back(trivial_product_module(upper_triangular(2), regular_bimodule(upper_triangular(2))));
    Mat th(1, 2);
    th.at(0, 0) = 1;
    ms.push_back(theta_module(diagonal_algebra(2), zero_algebra(2), th));
    for (auto& m : ms)
        for (std::size_t n = 0; n <= 1; ++n) {
            CHECK(check_thm_odd(m, n).iff_consistent);
            CHECK(check_thm_even(m, n).iff_consistent);
        }
}

TEST_CASE("trivial-product corollaries coincide with the theorems on trivial products")
{
    std::vector<AlgebraicModule> ms;
    ms.push_back(trivial_product_module(upper_triangular(2), regular_bimodule(upper_triangular(2))));
    Mat th(1, 2);
    th.at(0, 0) = 1;
    ms.push_back(theta_module(diagonal_algebra(2), zero_algebra(2), th));
    for (auto& m : ms)
        for (std::size_t n = 0; n <= 1; ++n) {
            ConditionReport zo = check_cor_trivial_odd(m, n);
            ConditionReport to = check_thm_odd(m, n);
            CHECK(zo.iff_consistent);
            CHECK(zo.conditions_hold == to.conditions_hold);
            ConditionReport ze = check_cor_trivial_even(m, n);
            ConditionReport te = check_thm_even(m, n);
            CHECK(ze.iff_consistent);
            CHECK(ze.conditions_hold == te.conditions_hold);
        }
}

TEST_CASE("trivial-product corollaries reject a nonzero inner product")
{
    CHECK_THROWS_AS(check_cor_trivial_odd(self_module(upper_triangular(2)), 0),
                    std::invalid_argument);
}

TEST_CASE("self-bowtie corollary is a computed biconditional")
{
    for (auto a : {rational_field(), upper_triangular(2), zero_algebra(2), diagonal_algebra(2),
                   full_matrix(2)})
        for (std::size_t n = 0; n <= 1; ++n) {
            CHECK(check_cor_selfbowtie(a, n, Parity::odd).iff_consistent);
            CHECK(check_cor_selfbowtie(a, n, Parity::even).iff_consistent);
        }
}

TEST_CASE("self-bowtie odd matches the component for concrete cases")
{
    ConditionReport r = check_cor_selfbowtie(zero_algebra(2), 0, Parity::odd);
    CHECK(!r.conditions_hold); // zero algebra is not weakly amenable
    CHECK(!r.product_wa);
    ConditionReport r2 = check_cor_selfbowtie(full_matrix(2), 0, Parity::odd);
    CHECK(r2.conditions_hold);
    CHECK(r2.product_wa);
}

TEST_CASE("direct-sum corollary")
{
    for (std::size_t n = 0; n <= 1; ++n) {
        CHECK(check_cor_directsum(full_matrix(2), full_matrix(2), n, Parity::odd).iff_consistent);
        CHECK(check_cor_directsum(full_matrix(2), zero_algebra(2), n, Parity::odd).iff_consistent);
        CHECK(check_cor_directsum(upper_triangular(2), rational_field(), n, Parity::even)
                  .iff_consistent);
        CHECK(check_cor_directsum(diagonal_algebra(2), cyclic_group_algebra(2), n, Parity::even)
                  .iff_consistent);
    }
    ConditionReport r = check_cor_directsum(full_matrix(2), zero_algebra(2), 0, Parity::odd);
    CHECK(!r.conditions_hold);
    CHECK(!r.product_wa);
}

TEST_CASE("Lau corollaries agree with the theorems on the character module")
{
    struct Case {
        FiniteAlgebra a, b;
        Mat th;
    };
    std::vector<Case> cases;
    {
        Mat th(1, 1);
        th.at(0, 0) = 1;
        cases.push_back({rational_field(), zero_algebra(2), th});
        cases.push_back({rational_field(), cyclic_group_algebra(2), th});
    }
    {
        Mat th(1, 2);
        th.at(0, 0) = 1;
        cases.push_back({diagonal_algebra(2), zero_algebra(1), th});
        cases.push_back({diagonal_algebra(2), rational_field(), th});
    }
    for (auto& c : cases)
        for (std::size_t n = 0; n <= 1; ++n) {
            AlgebraicModule m = theta_module(c.a, c.b, c.th);
            ConditionReport lo = check_cor_lau(c.a, c.b, c.th, n, Parity::odd);
            CHECK(lo.iff_consistent);
            CHECK(lo.product_wa == check_thm_odd(m, n).product_wa);
            ConditionReport le = check_cor_lau(c.a, c.b, c.th, n, Parity::even);
            CHECK(le.iff_consistent);
            CHECK(le.product_wa == check_thm_even(m, n).product_wa);
        }
}

TEST_CASE("density propositions never violate the implication")
{
    std::vector<AlgebraicModule> ms;
    ms.push_back(self_module(upper_triangular(2)));
    ms.push_back(self_module(full_matrix(2)));
    ms.push_back(self_module(zero_algebra(2)));
    ms.push_back(trivial_product_module(upper_triangular(2), regular_bimodule(upper_triangular(2))));
    for (auto& m : ms) {
        for (std::size_t n = 0; n <= 1; ++n) {
            CHECK(check_prop_density(m, n, DensityVariant::odd_xx).iff_consistent);
            CHECK(check_prop_density(m, n, DensityVariant::odd_xa).iff_consistent);
        }
        CHECK(check_prop_density(m, 1, DensityVariant::even).iff_consistent);
        for (std::size_t n = 1; n <= 3; ++n)
            CHECK(check_prop_density(m, n, DensityVariant::combined).iff_consistent);
    }
}

TEST_CASE("density hypothesis fails for zero multiplication, vacuously true")
{
    AlgebraicModule m = self_module(zero_algebra(2));
    ConditionReport r = check_prop_density(m, 1, DensityVariant::even);
    bool span_x2 = false;
    for (auto& c : r.conditions)
        if (c.name == "span(X^2)=X")
            span_x2 = c.holds;
    CHECK(!span_x2);
    CHECK(r.iff_consistent);
}

TEST_CASE("weak amenability forces products to span")
{
    CHECK(check_necessity_products_span(full_matrix(2)));
    CHECK(check_necessity_products_span(zero_algebra(2)));
    CHECK(check_necessity_products_span(rational_field()));
    CHECK(products_span(full_matrix(2)));
    CHECK(!products_span(zero_algebra(2)));
}

TEST_CASE("tag dispatch")
{
    AlgebraicModule m = self_module(upper_triangular(2));
    CHECK(check_by_tag("thm-odd", m, 0).theorem == "thm-odd");
    CHECK_THROWS_AS(check_by_tag("no-such-tag", m, 0), std::invalid_argument);
    Mat th(1, 2);
    th.at(0, 0) = 1;
    AlgebraicModule tm = theta_module(diagonal_algebra(2), zero_algebra(1), th);
    ConditionReport r = check_by_tag("cor-lau-odd", tm, 0);
    CHECK(r.theorem == "cor-lau-odd");
    CHECK(r.iff_consistent);
    // non-character action refuses lau recovery
    CHECK_THROWS_AS(check_by_tag("cor-lau-odd", m, 0), std::invalid_argument);
}
