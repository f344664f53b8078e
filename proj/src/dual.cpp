#include "modext/dual.hpp"

namespace modext {

Bimodule dual_bimodule(const FiniteAlgebra& alg, const Bimodule& m)
{
    if (m.algebra_dim != alg.dim)
        throw StructureError("dual_bimodule: algebra mismatch");
    Bimodule d;
    d.algebra_dim = alg.dim;
    d.dim = m.dim;
    d.left = Ten3(alg.dim, m.dim, m.dim);
    d.right = Ten3(m.dim, alg.dim, m.dim);
    for (std::size_t i = 0; i < alg.dim; ++i)
        for (std::size_t p = 0; p < m.dim; ++p)
            for (std::size_t q = 0; q < m.dim; ++q) {
                // (e_i . m_p*)(m_q) = m_p*(m_q . e_i)
                d.left.at(i, p, q) = m.right.at(q, i, p);
                // (m_p* . e_i)(m_q) = m_p*(e_i . m_q)
                d.right.at(p, i, q) = m.left.at(i, q, p);
            }
    return d;
}

DualTower iterated_dual(const FiniteAlgebra& alg, const Bimodule& m, std::size_t n)
{
    DualTower t;
    t.levels.push_back(m);
    for (std::size_t k = 0; k < n; ++k)
        t.levels.push_back(dual_bimodule(alg, t.levels.back()));
    return t;
}

Vec BlockDualLevel::apply(const Ten3& t, const Vec& gen, const Vec& src)
{
    if (gen.size() != t.n1() || src.size() != t.n2())
        throw StructureError("component action: length mismatch");
    Vec out(t.n3());
    for (std::size_t i = 0; i < t.n1(); ++i) {
        if (gen[i] == 0)
            continue;
        for (std::size_t p = 0; p < t.n2(); ++p) {
            if (src[p] == 0)
                continue;
            Rat c = gen[i] * src[p];
            for (std::size_t q = 0; q < t.n3(); ++q)
                if (t.at(i, p, q) != 0)
                    out[q] += c * t.at(i, p, q);
        }
    }
    return out;
}

namespace {

BlockDualLevel level_zero(const AlgebraicModule& m)
{
    const std::size_t da = m.base.dim, dx = m.inner.dim;
    BlockDualLevel lv;
    lv.level = 0;
    lv.dim_a = da;
    lv.dim_x = dx;
    lv.lAA = Ten3(da, da, da);
    lv.rAA = Ten3(da, da, da);
    lv.lAX = Ten3(da, dx, dx);
    lv.rAX = Ten3(da, dx, dx);
    lv.lXX = Ten3(dx, dx, dx);
    lv.rXX = Ten3(dx, dx, dx);
    lv.lX_AX = Ten3(dx, da, dx);
    lv.rX_AX = Ten3(dx, da, dx);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < da; ++j)
            for (std::size_t k = 0; k < da; ++k) {
                lv.lAA.at(i, j, k) = m.base.mult.at(i, j, k);
                lv.rAA.at(i, j, k) = m.base.mult.at(j, i, k);
            }
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t p = 0; p < dx; ++p)
            for (std::size_t q = 0; q < dx; ++q) {
                lv.lAX.at(i, p, q) = m.action.left.at(i, p, q);
                lv.rAX.at(i, p, q) = m.action.right.at(p, i, q);
            }
    for (std::size_t j = 0; j < dx; ++j)
        for (std::size_t p = 0; p < dx; ++p)
            for (std::size_t q = 0; q < dx; ++q) {
                lv.lXX.at(j, p, q) = m.inner.mult.at(j, p, q);
                lv.rXX.at(j, p, q) = m.inner.mult.at(p, j, q);
            }
    // (0,x)(a,0) = (0, xa) and (a,0)(0,x) = (0, ax): at level 0 the
    // generator x maps the A-block into the X-block.
    for (std::size_t j = 0; j < dx; ++j)
        for (std::size_t i = 0; i < da; ++i)
            for (std::size_t q = 0; q < dx; ++q) {
                lv.lX_AX.at(j, i, q) = m.action.right.at(j, i, q);
                lv.rX_AX.at(j, i, q) = m.action.left.at(i, j, q);
            }
    return lv;
}

BlockDualLevel dualize(const BlockDualLevel& o)
{
    BlockDualLevel n;
    n.level = o.level + 1;
    n.dim_a = o.dim_a;
    n.dim_x = o.dim_x;
    // (p.phi)(m) = phi(m.p): the new left action is the transpose of the
    // old right action, and vice versa; cross components swap blocks.
    n.lAA = o.rAA.transposed_23();
    n.rAA = o.lAA.transposed_23();
    n.lAX = o.rAX.transposed_23();
    n.rAX = o.lAX.transposed_23();
    n.lXX = o.rXX.transposed_23();
    n.rXX = o.lXX.transposed_23();
    if (o.even()) {
        n.lX_XA = o.rX_AX.transposed_23();
        n.rX_XA = o.lX_AX.transposed_23();
    } else {
        n.lX_AX = o.rX_XA.transposed_23();
        n.rX_AX = o.lX_XA.transposed_23();
    }
    return n;
}

} // namespace

std::vector<BlockDualLevel> block_dual_tower(const AlgebraicModule& m, std::size_t n)
{
    std::vector<BlockDualLevel> tower;
    tower.push_back(level_zero(m));
    for (std::size_t k = 0; k < n; ++k)
        tower.push_back(dualize(tower.back()));
    return tower;
}

Bimodule assemble_block_level(const BlockDualLevel& lv)
{
    const std::size_t da = lv.dim_a, dx = lv.dim_x, d = da + dx;
    Bimodule b;
    b.algebra_dim = d;
    b.dim = d;
    b.left = Ten3(d, d, d);
    b.right = Ten3(d, d, d);

    auto put3 = [](Ten3& dst, const Ten3& src, std::size_t og, std::size_t os, std::size_t ot) {
        for (std::size_t i = 0; i < src.n1(); ++i)
            for (std::size_t p = 0; p < src.n2(); ++p)
                for (std::size_t q = 0; q < src.n3(); ++q)
                    dst.at(og + i, os + p, ot + q) = src.at(i, p, q);
    };
    // left[g][s][t]
    put3(b.left, lv.lAA, 0, 0, 0);
    put3(b.left, lv.lAX, 0, da, da);
    put3(b.left, lv.lXX, da, da, da);
    if (lv.even())
        put3(b.left, lv.lX_AX, da, 0, da);
    else
        put3(b.left, lv.lX_XA, da, da, 0);

    // right tensor has layout r[s][g][t]
    auto put3r = [](Ten3& dst, const Ten3& src, std::size_t og, std::size_t os, std::size_t ot) {
        for (std::size_t i = 0; i < src.n1(); ++i)
            for (std::size_t p = 0; p < src.n2(); ++p)
                for (std::size_t q = 0; q < src.n3(); ++q)
                    dst.at(os + p, og + i, ot + q) = src.at(i, p, q);
    };
    put3r(b.right, lv.rAA, 0, 0, 0);
    put3r(b.right, lv.rAX, 0, da, da);
    put3r(b.right, lv.rXX, da, da, da);
    if (lv.even())
        put3r(b.right, lv.rX_AX, da, 0, da);
    else
        put3r(b.right, lv.rX_XA, da, da, 0);
    return b;
}

Bimodule product_dual_actions(const ProductAlgebra& p, std::size_t n)
{
    auto tower = block_dual_tower(p.module, n);
    return assemble_block_level(tower.back());
}

} // namespace modext
