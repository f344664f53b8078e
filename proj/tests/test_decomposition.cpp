#include <doctest.h>

#include "modext/decomposition.hpp"

using namespace modext;

namespace {

struct Setup {
    ProductAlgebra p;
    std::vector<BlockDualLevel> tower;
    Bimodule mod;
    DerivationSpace ds;

    Setup(ProductAlgebra prod, std::size_t k) : p(std::move(prod))
    {
        tower = block_dual_tower(p.module, k);
        mod = assemble_block_level(tower[k]);
        ds = derivation_space(p.carrier, mod);
    }
};

} // namespace

TEST_CASE("zero derivation decomposes to zero blocks and assembles back")
{
    ProductAlgebra p = self_bowtie(upper_triangular(2));
    for (std::size_t k = 0; k <= 3; ++k) {
        auto tower = block_dual_tower(p.module, k);
        Mat d(6, 6);
        DecompositionBlocks b = decompose(p, tower[k], d);
        CHECK(b.D_A.is_zero());
        CHECK(b.D_X.is_zero());
        CHECK(b.T_A.is_zero());
        CHECK(b.T_X.is_zero());
        CHECK(assemble(p, tower[k], b) == d);
    }
}

TEST_CASE("decompose rejects a non-derivation")
{
    ProductAlgebra p = self_bowtie(upper_triangular(2));
    auto tower = block_dual_tower(p.module, 1);
    Mat d(6, 6);
    d.at(0, 0) = 1; // not a derivation of a unital algebra
    CHECK_THROWS_AS(decompose(p, tower[1], d), std::invalid_argument);
}

TEST_CASE("assemble rejects invariant-violating blocks")
{
    ProductAlgebra p = self_bowtie(upper_triangular(2));
    auto tower = block_dual_tower(p.module, 1);
    DecompositionBlocks b;
    b.parity = Parity::odd;
    b.dual_level = 1;
    b.D_A = LinearMap(3, 3);
    b.D_X = LinearMap(3, 3);
    b.T_A = LinearMap(3, 3);
    b.T_X = LinearMap(3, 3);
    b.D_A.at(0, 0) = 1; // not a derivation
    CHECK_THROWS_AS(assemble(p, tower[1], b), LemmaViolation);
}

TEST_CASE("round-trip on every basis derivation, levels 0..3")
{
    std::vector<ProductAlgebra> ps;
    ps.push_back(self_bowtie(upper_triangular(2)));
    ps.push_back(module_extension(
        trivial_product_module(upper_triangular(2), regular_bimodule(upper_triangular(2)))));
    Mat th(1, 1);
    th.at(0, 0) = 1;
    ps.push_back(theta_lau(rational_field(), zero_algebra(2), th));
    for (auto& p : ps)
        for (std::size_t k = 0; k <= 3; ++k) {
            Setup s(p, k);
            for (auto& d : s.ds.basis) {
                DecompositionBlocks b = decompose(s.p, s.tower[k], d);
                CHECK((b.parity == Parity::odd) == (k % 2 == 1));
                CHECK(assemble(s.p, s.tower[k], b) == d);
            }
        }
}

TEST_CASE("inner derivations yield certificates verifying all identities")
{
    ProductAlgebra p = self_bowtie(upper_triangular(2));
    for (std::size_t k = 0; k <= 3; ++k) {
        Setup s(p, k);
        for (auto& d : s.ds.inner_basis) {
            DecompositionBlocks b = decompose(s.p, s.tower[k], d);
            auto cert = find_certificate(s.p, s.tower[k], b);
            REQUIRE(cert.has_value());
            CHECK(cert->witness_a.size() == s.tower[k].dim_a);
            CHECK(cert->witness_x.size() == s.tower[k].dim_x);
        }
    }
}

TEST_CASE("certificate presence agrees with the independent span test")
{
    std::vector<ProductAlgebra> ps;
    ps.push_back(self_bowtie(zero_algebra(2)));
    ps.push_back(self_bowtie(upper_triangular(2)));
    Mat th(1, 2);
    th.at(0, 0) = 1;
    ps.push_back(theta_lau(diagonal_algebra(2), zero_algebra(1), th));
    for (auto& p : ps)
        for (std::size_t k = 0; k <= 2; ++k) {
            Setup s(p, k);
            Mat inner = inner_span_rows(p.carrier, s.mod);
            for (auto& d : s.ds.basis) {
                DecompositionBlocks b = decompose(s.p, s.tower[k], d);
                bool has_cert = find_certificate(s.p, s.tower[k], b).has_value();
                Mat one = Mat::from_rows({flatten_map(d)}, flatten_map(d).size());
                CHECK(has_cert == rows_in_span(one, inner));
            }
        }
}

TEST_CASE("non-inner derivations get a proof of absence")
{
    // X = 0 over the 2-dim zero algebra: plenty of non-inner derivations
    AlgebraicModule m;
    m.base = zero_algebra(2);
    m.inner = zero_algebra(0);
    m.action.algebra_dim = 2;
    m.action.dim = 0;
    m.action.left = Ten3(2, 0, 0);
    m.action.right = Ten3(0, 2, 0);
    ProductAlgebra p = bowtie(m);
    Setup s(p, 1);
    CHECK(s.ds.h1 > 0);
    std::size_t absent = 0;
    for (auto& d : s.ds.basis) {
        DecompositionBlocks b = decompose(s.p, s.tower[1], d);
        if (!find_certificate(s.p, s.tower[1], b).has_value())
            ++absent;
    }
    CHECK(absent == s.ds.h1);
}

TEST_CASE("unital X: simplified blocks agree with the general decomposition")
{
    // X = A = T2 is unital, so Lemma-style simplified blocks exist
    ProductAlgebra p = self_bowtie(upper_triangular(2));
    for (std::size_t k = 1; k <= 2; ++k) {
        Setup s(p, k);
        for (auto& d : s.ds.basis) {
            DecompositionBlocks b = decompose(s.p, s.tower[k], d);
            UnitalBlocks u = decompose_unital(s.p, s.tower[k], d);
            CHECK(u.D_A == b.D_A);
            CHECK(u.T_X == b.T_X);
        }
    }
}

TEST_CASE("decompose_unital requires a unital inner algebra")
{
    ProductAlgebra p = self_bowtie(zero_algebra(2));
    auto tower = block_dual_tower(p.module, 1);
    Mat d(4, 4);
    CHECK_THROWS_AS(decompose_unital(p, tower[1], d), std::invalid_argument);
}
