#include <doctest.h>

#include "modext/dual.hpp"

using namespace modext;

namespace {

bool bim_equal(const Bimodule& a, const Bimodule& b)
{
    return a.algebra_dim == b.algebra_dim && a.dim == b.dim && a.left == b.left &&
           a.right == b.right;
}

} // namespace

TEST_CASE("level 0 of the tower is the module itself")
{
    FiniteAlgebra t2 = upper_triangular(2);
    Bimodule reg = regular_bimodule(t2);
    DualTower t = iterated_dual(t2, reg, 0);
    CHECK(bim_equal(t.level(0), reg));
}

TEST_CASE("dual of a commutative self-module has coinciding actions")
{
    FiniteAlgebra d2 = diagonal_algebra(2);
    Bimodule dual = dual_bimodule(d2, regular_bimodule(d2));
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t p = 0; p < 2; ++p)
            for (std::size_t q = 0; q < 2; ++q)
                CHECK(dual.left.at(i, p, q) == dual.right.at(p, i, q));
}

TEST_CASE("dual of zero actions has zero actions")
{
    FiniteAlgebra z = zero_algebra(2);
    Bimodule dual = dual_bimodule(z, regular_bimodule(z));
    CHECK(dual.left == Ten3(2, 2, 2));
    CHECK(dual.right == Ten3(2, 2, 2));
}

TEST_CASE("double dual equals the original under the canonical identification")
{
    for (auto mk : {upper_triangular(2), cyclic_group_algebra(3), full_matrix(2)}) {
        Bimodule reg = regular_bimodule(mk);
        DualTower t = iterated_dual(mk, reg, 4);
        CHECK(bim_equal(t.level(0), t.level(2)));
        CHECK(bim_equal(t.level(1), t.level(3)));
        CHECK(bim_equal(t.level(2), t.level(4)));
    }
}

TEST_CASE("dual of a validated bimodule validates")
{
    FiniteAlgebra t2 = upper_triangular(2);
    Bimodule dual = dual_bimodule(t2, regular_bimodule(t2));
    CHECK(validate_bimodule(t2, dual).ok());
    Bimodule dual2 = dual_bimodule(t2, dual);
    CHECK(validate_bimodule(t2, dual2).ok());
}

TEST_CASE("blockwise product dual equals the directly computed iterated dual")
{
    std::vector<ProductAlgebra> ps;
    ps.push_back(self_bowtie(upper_triangular(2)));
    ps.push_back(module_extension(
        trivial_product_module(upper_triangular(2), regular_bimodule(upper_triangular(2)))));
    Mat th(1, 2);
    th.at(0, 0) = 1;
    ps.push_back(theta_lau(diagonal_algebra(2), zero_algebra(2), th));
    ps.push_back(direct_sum(cyclic_group_algebra(2), rational_field()));
    ps.push_back(t_lau(diagonal_algebra(2), diagonal_algebra(2), Mat::identity(2)));
    for (auto& p : ps)
        for (std::size_t n = 0; n <= 3; ++n) {
            Bimodule direct = iterated_dual(p.carrier, regular_bimodule(p.carrier), n).level(n);
            Bimodule blockwise = product_dual_actions(p, n);
            CHECK(bim_equal(direct, blockwise));
        }
}

TEST_CASE("odd levels have no A-to-X cross action and even levels no X-to-A")
{
    ProductAlgebra p = self_bowtie(upper_triangular(2));
    auto tower = block_dual_tower(p.module, 3);
    for (std::size_t k = 0; k <= 3; ++k) {
        const BlockDualLevel& lv = tower[k];
        // the direction not present at this parity stays default-empty
        if (lv.even()) {
            CHECK(lv.lX_XA.n1() == 0);
            CHECK(lv.rX_XA.n1() == 0);
            CHECK(lv.lX_AX.n1() == lv.dim_x);
        } else {
            CHECK(lv.lX_AX.n1() == 0);
            CHECK(lv.rX_AX.n1() == 0);
            CHECK(lv.lX_XA.n1() == lv.dim_x);
        }
    }
}

TEST_CASE("trivial inner product loses the odd-level x-on-X A-component from xy")
{
    // with xy = 0 the odd "gx" contribution from the inner product is gone:
    // x acting on the X-block of an odd level keeps no extra A-part beyond
    // the action terms; verified against the module-extension dual
    FiniteAlgebra t2 = upper_triangular(2);
    AlgebraicModule m = trivial_product_module(t2, regular_bimodule(t2));
    ProductAlgebra p = module_extension(m);
    Bimodule direct = iterated_dual(p.carrier, regular_bimodule(p.carrier), 1).level(1);
    CHECK(bim_equal(direct, product_dual_actions(p, 1)));
}
