#include "modext/decomposition.hpp"

#include <functional>
#include <sstream>

namespace modext {

namespace {

Vec basis_vec(std::size_t dim, std::size_t i)
{
    Vec v(dim);
    v[i] = 1;
    return v;
}

[[noreturn]] void violation(const std::string& cond, std::size_t i, std::size_t j)
{
    std::ostringstream os;
    os << "lemma-violation: condition '" << cond << "' fails at basis pair (" << i << "," << j << ")";
    throw LemmaViolation(os.str());
}

struct Checker {
    const ProductAlgebra& p;
    const BlockDualLevel& lv;
    const DecompositionBlocks& b;
    std::size_t da, dx;

    Checker(const ProductAlgebra& pp, const BlockDualLevel& l, const DecompositionBlocks& bb)
        : p(pp), lv(l), b(bb), da(pp.dim_a), dx(pp.dim_x)
    {
    }

    Vec a(std::size_t i) const { return basis_vec(da, i); }
    Vec x(std::size_t q) const { return basis_vec(dx, q); }
    Vec ax(std::size_t i, std::size_t q) const { return p.module.action.act_left(a(i), x(q)); }
    Vec xa(std::size_t q, std::size_t i) const { return p.module.action.act_right(x(q), a(i)); }
    Vec xy(std::size_t q, std::size_t r) const { return p.module.inner.multiply(x(q), x(r)); }

    void check_derivations() const
    {
        for (std::size_t i = 0; i < da; ++i)
            for (std::size_t j = 0; j < da; ++j) {
                Vec prod(da);
                for (std::size_t k = 0; k < da; ++k)
                    prod[k] = p.module.base.mult.at(i, j, k);
                if (b.D_A.apply(prod) != lv.F_a(b.D_A.col(i), a(j)) + lv.a_F(a(i), b.D_A.col(j)))
                    violation("D_A derivation", i, j);
                if (b.D_X.apply(prod) != lv.G_a(b.D_X.col(i), a(j)) + lv.a_G(a(i), b.D_X.col(j)))
                    violation("D_X derivation", i, j);
            }
    }

    void check_odd() const
    {
        check_derivations();
        for (std::size_t i = 0; i < da; ++i)
            for (std::size_t q = 0; q < dx; ++q) {
                if (b.T_A.apply(ax(i, q)) !=
                    lv.a_F(a(i), b.T_A.col(q)) + lv.G_x_to_A(b.D_X.col(i), x(q)))
                    violation("T_A(ax) = aT_A(x) + D_X(a)x", i, q);
                if (b.T_A.apply(xa(q, i)) !=
                    lv.F_a(b.T_A.col(q), a(i)) + lv.x_G_to_A(x(q), b.D_X.col(i)))
                    violation("T_A(xa) = T_A(x)a + xD_X(a)", i, q);
                if (b.T_X.apply(ax(i, q)) !=
                    lv.G_x(b.D_X.col(i), x(q)) + lv.a_G(a(i), b.T_X.col(q)))
                    violation("T_X(ax) = D_X(a)x + aT_X(x)", i, q);
                if (b.T_X.apply(xa(q, i)) !=
                    lv.x_G(x(q), b.D_X.col(i)) + lv.G_a(b.T_X.col(q), a(i)))
                    violation("T_X(xa) = xD_X(a) + T_X(x)a", i, q);
            }
        for (std::size_t q = 0; q < dx; ++q)
            for (std::size_t r = 0; r < dx; ++r) {
                if (b.T_X.apply(xy(q, r)) != lv.G_x(b.T_X.col(q), x(r)) + lv.x_G(x(q), b.T_X.col(r)))
                    violation("T_X derivation on X", q, r);
                if (b.T_A.apply(xy(q, r)) !=
                    lv.G_x_to_A(b.T_X.col(q), x(r)) + lv.x_G_to_A(x(q), b.T_X.col(r)))
                    violation("T_X(x)y + xT_X(y) = T_A(xy)", q, r);
            }
    }

    void check_even() const
    {
        check_derivations();
        for (std::size_t i = 0; i < da; ++i)
            for (std::size_t q = 0; q < dx; ++q) {
                if (b.T_A.apply(ax(i, q)) != lv.a_F(a(i), b.T_A.col(q)))
                    violation("T_A(ax) = aT_A(x)", i, q);
                if (b.T_A.apply(xa(q, i)) != lv.F_a(b.T_A.col(q), a(i)))
                    violation("T_A(xa) = T_A(x)a", i, q);
                if (b.T_X.apply(ax(i, q)) !=
                    lv.F_x(b.D_A.col(i), x(q)) + lv.G_x(b.D_X.col(i), x(q)) +
                        lv.a_G(a(i), b.T_X.col(q)))
                    violation("T_X(ax) = D_A(a)x + D_X(a)x + aT_X(x)", i, q);
                if (b.T_X.apply(xa(q, i)) !=
                    lv.x_F(x(q), b.D_A.col(i)) + lv.x_G(x(q), b.D_X.col(i)) +
                        lv.G_a(b.T_X.col(q), a(i)))
                    violation("T_X(xa) = xD_A(a) + xD_X(a) + T_X(x)a", i, q);
            }
        for (std::size_t q = 0; q < dx; ++q)
            for (std::size_t r = 0; r < dx; ++r) {
                if (!is_zero(b.T_A.apply(xy(q, r))))
                    violation("T_A(xy) = 0", q, r);
                if (b.T_X.apply(xy(q, r)) !=
                    lv.x_G(x(q), b.T_X.col(r)) + lv.G_x(b.T_X.col(q), x(r)) +
                        lv.x_F(x(q), b.T_A.col(r)) + lv.F_x(b.T_A.col(q), x(r)))
                    violation("T_X(xy) = xT_X(y) + T_X(x)y + xT_A(y) + T_A(x)y", q, r);
            }
    }

    void run() const
    {
        if (b.parity == Parity::odd)
            check_odd();
        else
            check_even();
    }
};

} // namespace

DecompositionBlocks decompose(const ProductAlgebra& p, const BlockDualLevel& lv, const Mat& d)
{
    const std::size_t da = p.dim_a, dx = p.dim_x, dp = da + dx;
    if (d.rows() != dp || d.cols() != dp)
        throw StructureError("decompose: derivation matrix has wrong shape");
    Bimodule full = assemble_block_level(lv);
    if (!is_derivation(p.carrier, full, d))
        throw std::invalid_argument("decompose: input is not a derivation into the level-" +
                                    std::to_string(lv.level) + " dual");

    DecompositionBlocks b;
    b.parity = lv.even() ? Parity::even : Parity::odd;
    b.dual_level = lv.level;
    b.D_A = Mat(da, da);
    b.D_X = Mat(dx, da);
    b.T_A = Mat(da, dx);
    b.T_X = Mat(dx, dx);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t q = 0; q < dp; ++q)
            (q < da ? b.D_A.at(q, i) : b.D_X.at(q - da, i)) = d.at(q, i);
    for (std::size_t j = 0; j < dx; ++j)
        for (std::size_t q = 0; q < dp; ++q)
            (q < da ? b.T_A.at(q, j) : b.T_X.at(q - da, j)) = d.at(q, da + j);

    Checker(p, lv, b).run();
    return b;
}

Mat assemble(const ProductAlgebra& p, const BlockDualLevel& lv, const DecompositionBlocks& b)
{
    const std::size_t da = p.dim_a, dx = p.dim_x, dp = da + dx;
    if (b.D_A.rows() != da || b.D_A.cols() != da || b.D_X.rows() != dx || b.D_X.cols() != da ||
        b.T_A.rows() != da || b.T_A.cols() != dx || b.T_X.rows() != dx || b.T_X.cols() != dx)
        throw StructureError("assemble: block shapes inconsistent with product");
    Checker(p, lv, b).run(); // reject invariant-violating blocks

    Mat d(dp, dp);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t q = 0; q < dp; ++q)
            d.at(q, i) = q < da ? b.D_A.at(q, i) : b.D_X.at(q - da, i);
    for (std::size_t j = 0; j < dx; ++j)
        for (std::size_t q = 0; q < dp; ++q)
            d.at(q, da + j) = q < da ? b.T_A.at(q, j) : b.T_X.at(q - da, j);

    Bimodule full = assemble_block_level(lv);
    if (!is_derivation(p.carrier, full, d))
        throw LemmaViolation("lemma-violation: assembled map is not a derivation");
    return d;
}

std::optional<InnernessCertificate>
find_certificate(const ProductAlgebra& p, const BlockDualLevel& lv, const DecompositionBlocks& b)
{
    const std::size_t da = p.dim_a, dx = p.dim_x;
    const bool odd = b.parity == Parity::odd;

    // Unknowns: w = (f | g) resp. (F | G). Stack every certificate identity
    // into one joint system so all blocks share the same witness. Columns
    // are built by evaluating the identity maps on basis witnesses.
    auto a = [&](std::size_t i) { return basis_vec(da, i); };
    auto x = [&](std::size_t q) { return basis_vec(dx, q); };

    struct Identity {
        // value of the identity's right-hand side for witness (f, g)
        std::function<Vec(const Vec&, const Vec&)> rhs_of;
        Vec target;
    };
    std::vector<Identity> ids;
    for (std::size_t i = 0; i < da; ++i) {
        ids.push_back({[&, i](const Vec& f, const Vec& g) {
                           (void)g;
                           return lv.a_F(a(i), f) - lv.F_a(f, a(i)); // D_A = d_f / d_F
                       },
                       b.D_A.col(i)});
        ids.push_back({[&, i](const Vec& f, const Vec& g) {
                           (void)f;
                           return lv.a_G(a(i), g) - lv.G_a(g, a(i)); // D_X = d_g / d_G
                       },
                       b.D_X.col(i)});
    }
    for (std::size_t q = 0; q < dx; ++q) {
        if (odd) {
            ids.push_back({[&, q](const Vec& f, const Vec& g) {
                               (void)f;
                               return lv.x_G(x(q), g) - lv.G_x(g, x(q)); // T_X = d_g
                           },
                           b.T_X.col(q)});
            ids.push_back({[&, q](const Vec& f, const Vec& g) {
                               (void)f;
                               return lv.x_G_to_A(x(q), g) - lv.G_x_to_A(g, x(q)); // T_A = delta_g
                           },
                           b.T_A.col(q)});
        } else {
            ids.push_back({[&, q](const Vec& f, const Vec& g) {
                               // T_X = d_G + delta_F
                               return lv.x_G(x(q), g) - lv.G_x(g, x(q)) + lv.x_F(x(q), f) -
                                      lv.F_x(f, x(q));
                           },
                           b.T_X.col(q)});
            ids.push_back({[&](const Vec& f, const Vec& g) {
                               (void)f;
                               (void)g;
                               return Vec(da); // T_A = 0
                           },
                           b.T_A.col(q)});
        }
    }

    std::size_t total_rows = 0;
    for (auto& id : ids)
        total_rows += id.target.size();
    Mat sys(total_rows, da + dx);
    Vec target(total_rows);
    Vec zf(da), zg(dx);
    std::size_t row0 = 0;
    for (auto& id : ids) {
        for (std::size_t c = 0; c < da + dx; ++c) {
            Vec f = zf, g = zg;
            if (c < da)
                f[c] = 1;
            else
                g[c - da] = 1;
            Vec v = id.rhs_of(f, g);
            for (std::size_t t = 0; t < v.size(); ++t)
                sys.at(row0 + t, c) = v[t];
        }
        for (std::size_t t = 0; t < id.target.size(); ++t)
            target[row0 + t] = id.target[t];
        row0 += id.target.size();
    }

    auto sol = sys.solve(target);
    if (!sol)
        return std::nullopt;
    InnernessCertificate cert;
    cert.parity = b.parity;
    cert.witness_a = Vec(sol->begin(), sol->begin() + static_cast<std::ptrdiff_t>(da));
    cert.witness_x = Vec(sol->begin() + static_cast<std::ptrdiff_t>(da), sol->end());

    // per-block identities re-verified against the found witness
    for (auto& id : ids) {
        if (id.rhs_of(cert.witness_a, cert.witness_x) != id.target)
            throw LemmaViolation("lemma-violation: certificate witness fails an identity");
    }
    return cert;
}

UnitalBlocks decompose_unital(const ProductAlgebra& p, const BlockDualLevel& lv, const Mat& d)
{
    auto unit = find_unit(p.module.inner);
    if (!unit)
        throw std::invalid_argument("decompose_unital: X is not unital");
    const Vec one_x = *unit;
    const std::size_t da = p.dim_a, dx = p.dim_x;

    DecompositionBlocks b = decompose(p, lv, d);
    UnitalBlocks u;
    u.parity = b.parity;
    u.dual_level = b.dual_level;
    u.D_A = b.D_A;
    u.T_X = b.T_X;

    auto a = [&](std::size_t i) { return basis_vec(da, i); };
    auto a_one = [&](std::size_t i) { return p.module.action.act_left(a(i), one_x); };
    auto one_a = [&](std::size_t i) { return p.module.action.act_right(one_x, a(i)); };

    if (b.parity == Parity::odd) {
        for (std::size_t q = 0; q < dx; ++q) {
            if (b.T_A.col(q) != lv.G_x_to_A(b.T_X.col(q), one_x))
                violation("T_A(x) = T_X(x)1_X", q, 0);
            if (lv.G_x_to_A(b.T_X.col(q), one_x) != lv.x_G_to_A(one_x, b.T_X.col(q)))
                violation("T_X(x)1_X = 1_X T_X(x)", q, 0);
        }
        for (std::size_t i = 0; i < da; ++i) {
            if (b.D_X.col(i) != b.T_X.apply(a_one(i)))
                violation("D_X(a) = T_X(a 1_X)", i, 0);
            if (b.T_X.apply(one_a(i)) != b.T_X.apply(a_one(i)))
                violation("T_X(1_X a) = T_X(a 1_X)", i, 0);
        }
    } else {
        for (std::size_t q = 0; q < dx; ++q)
            if (!is_zero(b.T_A.col(q)))
                violation("T_A = 0 (unital X)", q, 0);
        for (std::size_t i = 0; i < da; ++i) {
            if (b.D_X.col(i) != b.T_X.apply(a_one(i)) - lv.F_x(b.D_A.col(i), one_x))
                violation("D_X(a) = T_X(a 1_X) - D_A(a)1_X", i, 0);
            if (b.T_X.apply(one_a(i)) - lv.x_F(one_x, b.D_A.col(i)) !=
                b.T_X.apply(a_one(i)) - lv.F_x(b.D_A.col(i), one_x))
                violation("T_X(1_X a) - 1_X D_A(a) = T_X(a 1_X) - D_A(a)1_X", i, 0);
        }
        // a -> D_A(a)1_X must itself be a derivation into the X-block
        LinearMap da1(dx, da);
        for (std::size_t i = 0; i < da; ++i) {
            Vec v = lv.F_x(b.D_A.col(i), one_x);
            for (std::size_t q = 0; q < dx; ++q)
                da1.at(q, i) = v[q];
        }
        for (std::size_t i = 0; i < da; ++i)
            for (std::size_t j = 0; j < da; ++j) {
                Vec prod(da);
                for (std::size_t k = 0; k < da; ++k)
                    prod[k] = p.module.base.mult.at(i, j, k);
                if (da1.apply(prod) != lv.G_a(da1.col(i), a(j)) + lv.a_G(a(i), da1.col(j)))
                    violation("a -> D_A(a)1_X derivation", i, j);
            }
    }
    return u;
}

} // namespace modext
