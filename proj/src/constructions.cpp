#include "modext/constructions.hpp"

namespace modext {

std::string provenance_name(Provenance p)
{
    switch (p) {
    case Provenance::bowtie: return "bowtie";
    case Provenance::module_extension: return "module_extension";
    case Provenance::theta_lau: return "theta_lau";
    case Provenance::t_lau: return "t_lau";
    case Provenance::direct_sum: return "direct_sum";
    case Provenance::unitization: return "unitization";
    case Provenance::self_bowtie: return "self_bowtie";
    }
    return "?";
}

namespace {

ProductAlgebra build_product(const AlgebraicModule& m, Provenance tag)
{
    const std::size_t da = m.base.dim, dx = m.inner.dim, d = da + dx;
    ProductAlgebra p;
    p.dim_a = da;
    p.dim_x = dx;
    p.provenance = tag;
    p.module = m;

    FiniteAlgebra& c = p.carrier;
    c.dim = d;
    c.mult = Ten3(d, d, d);
    for (std::size_t i = 0; i < da; ++i)
        c.basis.push_back("a:" + (i < m.base.basis.size() ? m.base.basis[i] : std::to_string(i)));
    for (std::size_t p2 = 0; p2 < dx; ++p2)
        c.basis.push_back("x:" + (p2 < m.inner.basis.size() ? m.inner.basis[p2] : std::to_string(p2)));

    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < da; ++j)
            for (std::size_t k = 0; k < da; ++k)
                c.mult.at(i, j, k) = m.base.mult.at(i, j, k);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t q = 0; q < dx; ++q)
            for (std::size_t k = 0; k < dx; ++k)
                c.mult.at(i, da + q, da + k) = m.action.left.at(i, q, k);
    for (std::size_t q = 0; q < dx; ++q)
        for (std::size_t j = 0; j < da; ++j)
            for (std::size_t k = 0; k < dx; ++k)
                c.mult.at(da + q, j, da + k) = m.action.right.at(q, j, k);
    for (std::size_t q = 0; q < dx; ++q)
        for (std::size_t r = 0; r < dx; ++r)
            for (std::size_t k = 0; k < dx; ++k)
                c.mult.at(da + q, da + r, da + k) = m.inner.mult.at(q, r, k);

    c.unit = find_unit(c);
    return p;
}

} // namespace

ProductAlgebra bowtie(const AlgebraicModule& m)
{
    auto rep = validate_algebraic_module(m);
    if (!rep.ok())
        throw ConstructionError("bowtie: module fails validation (" + rep.issues.front().axiom + ")");
    return build_product(m, Provenance::bowtie);
}

ProductAlgebra module_extension(const AlgebraicModule& m)
{
    AlgebraicModule mm = m;
    bool zeroed = false;
    Ten3 zero(m.inner.dim, m.inner.dim, m.inner.dim);
    if (mm.inner.mult != zero) {
        mm.inner = zero_algebra(m.inner.dim);
        zeroed = true;
    }
    auto rep = validate_algebraic_module(mm);
    if (!rep.ok())
        throw ConstructionError("module_extension: module fails validation");
    ProductAlgebra p = build_product(mm, Provenance::module_extension);
    p.inner_zeroed = zeroed;
    return p;
}

bool is_character(const FiniteAlgebra& a, const Mat& theta, std::size_t* bad_i, std::size_t* bad_j)
{
    if (theta.rows() != 1 || theta.cols() != a.dim)
        throw StructureError("character must be a 1 x dim(A) matrix");
    if (theta.is_zero())
        return false;
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j) {
            Rat lhs;
            for (std::size_t k = 0; k < a.dim; ++k)
                lhs += a.mult.at(i, j, k) * theta.at(0, k);
            if (lhs != theta.at(0, i) * theta.at(0, j)) {
                if (bad_i) *bad_i = i;
                if (bad_j) *bad_j = j;
                return false;
            }
        }
    return true;
}

bool is_homomorphism(const FiniteAlgebra& a, const FiniteAlgebra& b, const Mat& t,
                     std::size_t* bad_i, std::size_t* bad_j)
{
    if (t.rows() != b.dim || t.cols() != a.dim)
        throw StructureError("homomorphism must be a dim(B) x dim(A) matrix");
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j) {
            Vec ab(a.dim);
            for (std::size_t k = 0; k < a.dim; ++k)
                ab[k] = a.mult.at(i, j, k);
            Vec lhs = t.apply(ab);
            Vec rhs = b.multiply(t.col(i), t.col(j));
            if (lhs != rhs) {
                if (bad_i) *bad_i = i;
                if (bad_j) *bad_j = j;
                return false;
            }
        }
    return true;
}

AlgebraicModule theta_module(const FiniteAlgebra& a, const FiniteAlgebra& b, const Mat& theta)
{
    std::size_t bi = 0, bj = 0;
    if (!is_character(a, theta, &bi, &bj))
        throw ConstructionError("theta is not a character (fails at basis pair " +
                                std::to_string(bi) + "," + std::to_string(bj) + ")");
    AlgebraicModule m;
    m.base = a;
    m.inner = b;
    m.action.algebra_dim = a.dim;
    m.action.dim = b.dim;
    m.action.left = Ten3(a.dim, b.dim, b.dim);
    m.action.right = Ten3(b.dim, a.dim, b.dim);
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t p = 0; p < b.dim; ++p) {
            m.action.left.at(i, p, p) = theta.at(0, i);
            m.action.right.at(p, i, p) = theta.at(0, i);
        }
    return m;
}

AlgebraicModule t_module(const FiniteAlgebra& a, const FiniteAlgebra& b, const Mat& t)
{
    std::size_t bi = 0, bj = 0;
    if (!is_homomorphism(a, b, t, &bi, &bj))
        throw ConstructionError("T is not an algebra homomorphism (fails at basis pair " +
                                std::to_string(bi) + "," + std::to_string(bj) + ")");
    AlgebraicModule m;
    m.base = a;
    m.inner = b;
    m.action.algebra_dim = a.dim;
    m.action.dim = b.dim;
    m.action.left = Ten3(a.dim, b.dim, b.dim);
    m.action.right = Ten3(b.dim, a.dim, b.dim);
    for (std::size_t i = 0; i < a.dim; ++i) {
        Vec ti = t.col(i);
        for (std::size_t p = 0; p < b.dim; ++p) {
            Vec ei(b.dim);
            ei[p] = 1;
            Vec lv = b.multiply(ti, ei); // a.x = T(a)x
            Vec rv = b.multiply(ei, ti); // x.a = xT(a)
            for (std::size_t q = 0; q < b.dim; ++q) {
                m.action.left.at(i, p, q) = lv[q];
                m.action.right.at(p, i, q) = rv[q];
            }
        }
    }
    return m;
}

ProductAlgebra theta_lau(const FiniteAlgebra& a, const FiniteAlgebra& b, const Mat& theta)
{
    ProductAlgebra p = bowtie(theta_module(a, b, theta));
    p.provenance = (a.dim == 1 && theta.at(0, 0) == 1) ? Provenance::unitization : Provenance::theta_lau;
    return p;
}

ProductAlgebra t_lau(const FiniteAlgebra& a, const FiniteAlgebra& b, const Mat& t)
{
    ProductAlgebra p = bowtie(t_module(a, b, t));
    p.provenance = Provenance::t_lau;
    return p;
}

ProductAlgebra direct_sum(const FiniteAlgebra& a, const FiniteAlgebra& b)
{
    Mat zero(b.dim, a.dim);
    ProductAlgebra p = t_lau(a, b, zero);
    p.provenance = Provenance::direct_sum;
    return p;
}

ProductAlgebra self_bowtie(const FiniteAlgebra& a)
{
    ProductAlgebra p = bowtie(self_module(a));
    p.provenance = Provenance::self_bowtie;
    return p;
}

} // namespace modext
