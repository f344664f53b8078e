#include <doctest.h>

#include "modext/constructions.hpp"

using namespace modext;

namespace {

Vec bv(std::size_t n, std::size_t i)
{
    Vec v(n);
    v[i] = 1;
    return v;
}

bool tensor_equal(const ProductAlgebra& a, const ProductAlgebra& b)
{
    return a.carrier.dim == b.carrier.dim && a.carrier.mult == b.carrier.mult;
}

} // namespace

TEST_CASE("bowtie carrier is associative and block-structured")
{
    FiniteAlgebra t2 = upper_triangular(2);
    ProductAlgebra p = self_bowtie(t2);
    CHECK(p.carrier.dim == 6);
    CHECK(validate_algebra(p.carrier).ok());
    CHECK(p.dim_a == 3);
    CHECK(p.dim_x == 3);

    // X-block is an ideal: products of X-block elements stay there
    for (std::size_t i = 3; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) {
            Vec prod = p.carrier.multiply(bv(6, i), bv(6, j));
            for (std::size_t k = 0; k < 3; ++k)
                CHECK(prod[k] == 0);
        }
}

TEST_CASE("bowtie refuses an invalid module")
{
    AlgebraicModule bad = self_module(upper_triangular(2));
    bad.action.left.at(0, 0, 1) += 1;
    CHECK_THROWS_AS(bowtie(bad), ConstructionError);
}

TEST_CASE("bowtie with trivial inner product equals module_extension")
{
    FiniteAlgebra t2 = upper_triangular(2);
    AlgebraicModule m = trivial_product_module(t2, regular_bimodule(t2));
    CHECK(tensor_equal(bowtie(m), module_extension(m)));
}

TEST_CASE("module_extension zeroes a nonzero inner product and flags it")
{
    AlgebraicModule m = self_module(upper_triangular(2));
    ProductAlgebra p = module_extension(m);
    CHECK(p.inner_zeroed);
    Ten3 z(3, 3, 3);
    CHECK(p.module.inner.mult == z);
    CHECK(!module_extension(trivial_product_module(m.base, m.action)).inner_zeroed);
}

TEST_CASE("field acting on a field gives a nilpotent extension element")
{
    AlgebraicModule m = trivial_product_module(rational_field(), regular_bimodule(rational_field()));
    ProductAlgebra p = module_extension(m);
    CHECK(p.carrier.dim == 2);
    CHECK(is_zero(p.carrier.multiply(bv(2, 1), bv(2, 1)))); // (0,1)(0,1) = 0
}

TEST_CASE("t_lau with T=0 equals direct_sum")
{
    FiniteAlgebra a = upper_triangular(2), b = cyclic_group_algebra(2);
    ProductAlgebra ds = direct_sum(a, b);
    ProductAlgebra tl = t_lau(a, b, Mat(2, 3));
    CHECK(tensor_equal(ds, tl));
    CHECK(ds.provenance == Provenance::direct_sum);
}

TEST_CASE("direct_sum is the component-wise product")
{
    ProductAlgebra p = direct_sum(rational_field(), rational_field());
    CHECK(is_zero(p.carrier.multiply(bv(2, 0), bv(2, 1)))); // (1,0)(0,1) = (0,0)
    ProductAlgebra q = direct_sum(upper_triangular(2), rational_field());
    CHECK(q.carrier.dim == 4);
    REQUIRE(q.carrier.unit.has_value());
    CHECK(*q.carrier.unit == Vec{1, 0, 1, 1});
}

TEST_CASE("theta_lau equals bowtie of the theta-action module")
{
    FiniteAlgebra a = diagonal_algebra(2), b = rational_field();
    Mat th(1, 2);
    th.at(0, 0) = 1;
    ProductAlgebra lau = theta_lau(a, b, th);
    ProductAlgebra bt = bowtie(theta_module(a, b, th));
    CHECK(lau.carrier.mult == bt.carrier.mult);
    CHECK(lau.carrier.dim == 3);
    CHECK(validate_algebra(lau.carrier).ok());
}

TEST_CASE("theta_lau over the field with identity character is the unitization")
{
    FiniteAlgebra b = zero_algebra(2);
    Mat th(1, 1);
    th.at(0, 0) = 1;
    ProductAlgebra p = theta_lau(rational_field(), b, th);
    CHECK(p.provenance == Provenance::unitization);
    REQUIRE(p.carrier.unit.has_value());
    CHECK(*p.carrier.unit == bv(3, 0));
}

TEST_CASE("character and homomorphism predicates reject with witnesses")
{
    FiniteAlgebra a = diagonal_algebra(2);
    Mat good(1, 2);
    good.at(0, 0) = 1;
    CHECK(is_character(a, good));
    Mat sum(1, 2);
    sum.at(0, 0) = 1;
    sum.at(0, 1) = 1; // theta(e0 e1)=0 but theta(e0)theta(e1)=1
    std::size_t bi = 99, bj = 99;
    CHECK(!is_character(a, sum, &bi, &bj));
    CHECK(bi == 0);
    CHECK(bj == 1);
    CHECK(!is_character(a, Mat(1, 2))); // zero functional is not a character
    CHECK_THROWS_AS(theta_lau(a, rational_field(), sum), ConstructionError);

    CHECK(is_homomorphism(a, a, Mat::identity(2)));
    Mat swap(2, 2);
    swap.at(0, 1) = 1;
    swap.at(1, 0) = 1;
    CHECK(is_homomorphism(a, a, swap));
    Mat notho(2, 2);
    notho.at(0, 0) = 2;
    CHECK(!is_homomorphism(a, a, notho));
    CHECK_THROWS_AS(t_lau(a, a, notho), ConstructionError);
}

TEST_CASE("t_lau with T=id equals self_bowtie")
{
    FiniteAlgebra a = diagonal_algebra(2);
    ProductAlgebra tl = t_lau(a, a, Mat::identity(2));
    ProductAlgebra sb = self_bowtie(a);
    CHECK(tl.carrier.mult == sb.carrier.mult);
}

TEST_CASE("self_bowtie of the field")
{
    ProductAlgebra p = self_bowtie(rational_field());
    // (0,1)(0,1) = (0, 1): the x-term survives through xy
    CHECK(p.carrier.multiply(bv(2, 1), bv(2, 1)) == bv(2, 1));
}

TEST_CASE("direct sum with the zero algebra reduces to the algebra alone")
{
    FiniteAlgebra a = upper_triangular(2);
    ProductAlgebra p = direct_sum(a, zero_algebra(0));
    CHECK(p.carrier.dim == 3);
    CHECK(p.carrier.mult == a.mult);
}
