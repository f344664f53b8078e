#include "modext/cohomology.hpp"

namespace modext {

namespace {

Vec basis_vec(std::size_t dim, std::size_t i)
{
    Vec v(dim);
    v[i] = 1;
    return v;
}

} // namespace

Vec flatten_map(const LinearMap& m)
{
    // column-major: entry for D(e_i) coefficient q sits at i*rows + q
    Vec v(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.cols(); ++i)
        for (std::size_t q = 0; q < m.rows(); ++q)
            v[i * m.rows() + q] = m.at(q, i);
    return v;
}

LinearMap unflatten_map(const Vec& v, std::size_t mod_dim, std::size_t alg_dim)
{
    if (v.size() != mod_dim * alg_dim)
        throw StructureError("unflatten_map: length mismatch");
    LinearMap m(mod_dim, alg_dim);
    for (std::size_t i = 0; i < alg_dim; ++i)
        for (std::size_t q = 0; q < mod_dim; ++q)
            m.at(q, i) = v[i * mod_dim + q];
    return m;
}

bool is_derivation(const FiniteAlgebra& alg, const Bimodule& mod, const LinearMap& d)
{
    for (std::size_t i = 0; i < alg.dim; ++i)
        for (std::size_t j = 0; j < alg.dim; ++j) {
            Vec prod = alg.multiply(basis_vec(alg.dim, i), basis_vec(alg.dim, j));
            Vec lhs = d.apply(prod);
            Vec rhs = mod.act_right(d.col(i), basis_vec(alg.dim, j)) +
                      mod.act_left(basis_vec(alg.dim, i), d.col(j));
            if (lhs != rhs)
                return false;
        }
    return true;
}

LinearMap inner_derivation(const FiniteAlgebra& alg, const Bimodule& mod, const Vec& m)
{
    LinearMap d(mod.dim, alg.dim);
    for (std::size_t i = 0; i < alg.dim; ++i) {
        Vec a = basis_vec(alg.dim, i);
        Vec col = mod.act_left(a, m) - mod.act_right(m, a);
        for (std::size_t q = 0; q < mod.dim; ++q)
            d.at(q, i) = col[q];
    }
    return d;
}

std::vector<LinearMap> inner_derivations(const FiniteAlgebra& alg, const Bimodule& mod)
{
    std::vector<Vec> rows;
    for (std::size_t b = 0; b < mod.dim; ++b)
        rows.push_back(flatten_map(inner_derivation(alg, mod, basis_vec(mod.dim, b))));
    Mat m = Mat::from_rows(rows, alg.dim * mod.dim);
    m.rref();
    std::vector<LinearMap> basis;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Vec row = m.row(r);
        if (!is_zero(row))
            basis.push_back(unflatten_map(row, mod.dim, alg.dim));
    }
    return basis;
}

Mat inner_span_rows(const FiniteAlgebra& alg, const Bimodule& mod)
{
    std::vector<Vec> rows;
    for (auto& d : inner_derivations(alg, mod))
        rows.push_back(flatten_map(d));
    return Mat::from_rows(rows, alg.dim * mod.dim);
}

DerivationSpace derivation_space(const FiniteAlgebra& alg, const Bimodule& mod)
{
    const std::size_t da = alg.dim, dm = mod.dim, nvar = da * dm;
    // one constraint row per (i, j, q)
    Mat sys(da * da * dm, nvar);
    std::size_t row = 0;
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < da; ++j)
            for (std::size_t q = 0; q < dm; ++q) {
                // sum_k c[i][j][k] D[k][q] - sum_t D[i][t] r[t][j][q] - sum_t l[i][t][q] D[j][t] = 0
                for (std::size_t k = 0; k < da; ++k)
                    if (alg.mult.at(i, j, k) != 0)
                        sys.at(row, k * dm + q) += alg.mult.at(i, j, k);
                for (std::size_t t = 0; t < dm; ++t) {
                    if (mod.right.at(t, j, q) != 0)
                        sys.at(row, i * dm + t) -= mod.right.at(t, j, q);
                    if (mod.left.at(i, t, q) != 0)
                        sys.at(row, j * dm + t) -= mod.left.at(i, t, q);
                }
                ++row;
            }
    Mat null = sys.nullspace();

    DerivationSpace ds;
    for (std::size_t r = 0; r < null.rows(); ++r)
        ds.basis.push_back(unflatten_map(null.row(r), dm, da));
    ds.inner_basis = inner_derivations(alg, mod);
    ds.derivation_dim = ds.basis.size();
    ds.inner_dim = ds.inner_basis.size();

    // quotient dimension via stacking and re-ranking, never assumed
    std::vector<Vec> rows_all;
    for (auto& d : ds.inner_basis)
        rows_all.push_back(flatten_map(d));
    for (auto& d : ds.basis)
        rows_all.push_back(flatten_map(d));
    std::size_t total = Mat::from_rows(rows_all, nvar).rank();
    if (total != ds.derivation_dim)
        throw StructureError("inner derivations escape the derivation space");
    ds.h1 = ds.derivation_dim - ds.inner_dim;
    return ds;
}

std::size_t h1_dim(const FiniteAlgebra& alg, const Bimodule& mod)
{
    return derivation_space(alg, mod).h1;
}

bool is_n_weakly_amenable(const FiniteAlgebra& alg, std::size_t n)
{
    DualTower t = iterated_dual(alg, regular_bimodule(alg), n);
    return h1_dim(alg, t.level(n)) == 0;
}

} // namespace modext
