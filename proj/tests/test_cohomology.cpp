#include <doctest.h>

#include "modext/cohomology.hpp"

using namespace modext;

TEST_CASE("derivations of the field into itself vanish")
{
    FiniteAlgebra q = rational_field();
    DerivationSpace ds = derivation_space(q, regular_bimodule(q));
    CHECK(ds.derivation_dim == 0);
    CHECK(ds.h1 == 0);
}

TEST_CASE("zero algebra: every linear map is a derivation, none inner")
{
    FiniteAlgebra z = zero_algebra(2);
    DerivationSpace ds = derivation_space(z, regular_bimodule(z));
    CHECK(ds.derivation_dim == 4);
    CHECK(ds.inner_dim == 0);
    CHECK(ds.h1 == 4);
    for (std::size_t d = 1; d <= 3; ++d) {
        FiniteAlgebra zd = zero_algebra(d);
        CHECK(h1_dim(zd, regular_bimodule(zd)) == d * d);
    }
}

TEST_CASE("T2 self-derivations: dimension 2, all inner")
{
    FiniteAlgebra t2 = upper_triangular(2);
    DerivationSpace ds = derivation_space(t2, regular_bimodule(t2));
    CHECK(ds.derivation_dim == 2);
    CHECK(ds.inner_dim == 2);
    CHECK(ds.h1 == 0);
    for (auto& d : ds.basis)
        CHECK(is_derivation(t2, regular_bimodule(t2), d));
    for (auto& d : ds.inner_basis)
        CHECK(is_derivation(t2, regular_bimodule(t2), d));
}

TEST_CASE("inner derivations of commutative algebras are zero")
{
    for (auto a : {diagonal_algebra(3), cyclic_group_algebra(2)})
        CHECK(inner_derivations(a, regular_bimodule(a)).empty());
}

TEST_CASE("d_x is always a derivation")
{
    FiniteAlgebra t2 = upper_triangular(2);
    Bimodule dual = iterated_dual(t2, regular_bimodule(t2), 1).level(1);
    for (std::size_t b = 0; b < 3; ++b) {
        Vec x(3);
        x[b] = 1;
        CHECK(is_derivation(t2, dual, inner_derivation(t2, dual, x)));
    }
}

TEST_CASE("M2 is n-weakly amenable for n in 0..3")
{
    FiniteAlgebra m2 = full_matrix(2);
    for (std::size_t n = 0; n <= 3; ++n)
        CHECK(is_n_weakly_amenable(m2, n));
}

TEST_CASE("zero algebra is not weakly amenable")
{
    CHECK(!is_n_weakly_amenable(zero_algebra(2), 1));
}

TEST_CASE("weak amenability at n equals n+2 by reflexivity")
{
    for (auto a : {upper_triangular(2), zero_algebra(2), diagonal_algebra(2), cyclic_group_algebra(3)})
        for (std::size_t n = 0; n <= 1; ++n) {
            DualTower t = iterated_dual(a, regular_bimodule(a), n + 2);
            CHECK(h1_dim(a, t.level(n)) == h1_dim(a, t.level(n + 2)));
        }
}

TEST_CASE("flatten and unflatten round-trip")
{
    LinearMap m(2, 3);
    m.at(0, 0) = Rat(1, 2);
    m.at(1, 2) = Rat(-3);
    CHECK(unflatten_map(flatten_map(m), 2, 3) == m);
}

TEST_CASE("conjugating the module preserves dimensions")
{
    // invertible change of basis on the module side: dims are invariant
    FiniteAlgebra t2 = upper_triangular(2);
    Bimodule reg = regular_bimodule(t2);
    Mat s = Mat::identity(3);
    s.at(0, 1) = 1; // unipotent, invertible
    Mat sinv = Mat::identity(3);
    sinv.at(0, 1) = -1;
    Bimodule conj;
    conj.algebra_dim = 3;
    conj.dim = 3;
    conj.left = Ten3(3, 3, 3);
    conj.right = Ten3(3, 3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t p = 0; p < 3; ++p) {
            Vec ep(3);
            ep[p] = 1;
            Vec a(3);
            a[i] = 1;
            Vec lv = s.apply(reg.act_left(a, sinv.apply(ep)));
            Vec rv = s.apply(reg.act_right(sinv.apply(ep), a));
            for (std::size_t q = 0; q < 3; ++q) {
                conj.left.at(i, p, q) = lv[q];
                conj.right.at(p, i, q) = rv[q];
            }
        }
    DerivationSpace a1 = derivation_space(t2, reg);
    DerivationSpace a2 = derivation_space(t2, conj);
    CHECK(a1.derivation_dim == a2.derivation_dim);
    CHECK(a1.inner_dim == a2.inner_dim);
    CHECK(a1.h1 == a2.h1);
}
