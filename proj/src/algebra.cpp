#include "modext/algebra.hpp"

#include <sstream>

namespace modext {

namespace {

std::string vec_str(const Vec& v)
{
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? "," : "") << rat_str(v[i]);
    os << ")";
    return os.str();
}

Vec basis_vec(std::size_t dim, std::size_t i)
{
    Vec v(dim);
    v[i] = 1;
    return v;
}

} // namespace

Ten3 Ten3::transposed_23() const
{
    Ten3 t(n1_, n3_, n2_);
    for (std::size_t i = 0; i < n1_; ++i)
        for (std::size_t j = 0; j < n2_; ++j)
            for (std::size_t k = 0; k < n3_; ++k)
                t.at(i, k, j) = at(i, j, k);
    return t;
}

Vec FiniteAlgebra::multiply(const Vec& u, const Vec& v) const
{
    if (u.size() != dim || v.size() != dim)
        throw StructureError("multiply: vector length mismatch");
    Vec w(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        if (u[i] == 0)
            continue;
        for (std::size_t j = 0; j < dim; ++j) {
            if (v[j] == 0)
                continue;
            Rat c = u[i] * v[j];
            for (std::size_t k = 0; k < dim; ++k)
                if (mult.at(i, j, k) != 0)
                    w[k] += c * mult.at(i, j, k);
        }
    }
    return w;
}

Vec Bimodule::act_left(const Vec& a, const Vec& m) const
{
    if (a.size() != algebra_dim || m.size() != dim)
        throw StructureError("act_left: length mismatch");
    Vec w(dim);
    for (std::size_t i = 0; i < algebra_dim; ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t p = 0; p < dim; ++p) {
            if (m[p] == 0)
                continue;
            Rat c = a[i] * m[p];
            for (std::size_t q = 0; q < dim; ++q)
                if (left.at(i, p, q) != 0)
                    w[q] += c * left.at(i, p, q);
        }
    }
    return w;
}

Vec Bimodule::act_right(const Vec& m, const Vec& a) const
{
    if (a.size() != algebra_dim || m.size() != dim)
        throw StructureError("act_right: length mismatch");
    Vec w(dim);
    for (std::size_t p = 0; p < dim; ++p) {
        if (m[p] == 0)
            continue;
        for (std::size_t i = 0; i < algebra_dim; ++i) {
            if (a[i] == 0)
                continue;
            Rat c = m[p] * a[i];
            for (std::size_t q = 0; q < dim; ++q)
                if (right.at(p, i, q) != 0)
                    w[q] += c * right.at(p, i, q);
        }
    }
    return w;
}

ValidationReport validate_algebra(const FiniteAlgebra& alg)
{
    // dim 0 is tolerated so that X = 0 module instances work
    if (alg.mult.n1() != alg.dim || alg.mult.n2() != alg.dim || alg.mult.n3() != alg.dim)
        throw StructureError("structure-constant tensor shape does not match dim");
    if (!alg.basis.empty() && alg.basis.size() != alg.dim)
        throw StructureError("basis label count does not match dim");
    if (alg.unit && alg.unit->size() != alg.dim)
        throw StructureError("unit vector length does not match dim");

    ValidationReport rep;
    for (std::size_t i = 0; i < alg.dim; ++i)
        for (std::size_t j = 0; j < alg.dim; ++j)
            for (std::size_t k = 0; k < alg.dim; ++k) {
                Vec lhs = alg.multiply(alg.multiply(basis_vec(alg.dim, i), basis_vec(alg.dim, j)),
                                       basis_vec(alg.dim, k));
                Vec rhs = alg.multiply(basis_vec(alg.dim, i),
                                       alg.multiply(basis_vec(alg.dim, j), basis_vec(alg.dim, k)));
                if (lhs != rhs)
                    rep.issues.push_back({"associativity",
                                          {i, j, k},
                                          "(ei ej)ek = " + vec_str(lhs) + " but ei(ej ek) = " + vec_str(rhs)});
            }
    if (alg.unit) {
        for (std::size_t i = 0; i < alg.dim; ++i) {
            Vec e = basis_vec(alg.dim, i);
            if (alg.multiply(*alg.unit, e) != e)
                rep.issues.push_back({"unit-left", {i, 0, 0}, "unit*e_i != e_i"});
            if (alg.multiply(e, *alg.unit) != e)
                rep.issues.push_back({"unit-right", {i, 0, 0}, "e_i*unit != e_i"});
        }
    }
    return rep;
}

ValidationReport validate_bimodule(const FiniteAlgebra& alg, const Bimodule& m)
{
    if (m.algebra_dim != alg.dim)
        throw StructureError("bimodule algebra_dim does not match algebra");
    if (m.left.n1() != alg.dim || m.left.n2() != m.dim || m.left.n3() != m.dim)
        throw StructureError("left action tensor shape mismatch");
    if (m.right.n1() != m.dim || m.right.n2() != alg.dim || m.right.n3() != m.dim)
        throw StructureError("right action tensor shape mismatch");

    ValidationReport rep;
    auto a = [&](std::size_t i) { return basis_vec(alg.dim, i); };
    auto x = [&](std::size_t p) { return basis_vec(m.dim, p); };
    for (std::size_t i = 0; i < alg.dim; ++i)
        for (std::size_t j = 0; j < alg.dim; ++j)
            for (std::size_t p = 0; p < m.dim; ++p) {
                Vec ab = alg.multiply(a(i), a(j));
                if (m.act_left(a(i), m.act_left(a(j), x(p))) != m.act_left(ab, x(p)))
                    rep.issues.push_back({"left-action", {i, j, p}, "a(b m) != (ab) m"});
                if (m.act_right(m.act_right(x(p), a(i)), a(j)) != m.act_right(x(p), ab))
                    rep.issues.push_back({"right-action", {i, j, p}, "(m a)b != m(ab)"});
                if (m.act_right(m.act_left(a(i), x(p)), a(j)) !=
                    m.act_left(a(i), m.act_right(x(p), a(j))))
                    rep.issues.push_back({"mixed-action", {i, j, p}, "(a m)b != a(m b)"});
            }
    if (alg.unit) {
        rep.unital_action = true;
        for (std::size_t p = 0; p < m.dim; ++p) {
            if (m.act_left(*alg.unit, x(p)) != x(p) || m.act_right(x(p), *alg.unit) != x(p)) {
                rep.unital_action = false;
                break;
            }
        }
    }
    return rep;
}

ValidationReport validate_algebraic_module(const AlgebraicModule& m)
{
    if (m.action.dim != m.inner.dim)
        throw StructureError("action dim does not match inner algebra dim");
    ValidationReport rep = validate_algebra(m.base);
    for (auto& is : rep.issues)
        is.axiom = "base:" + is.axiom;

    ValidationReport ri = validate_algebra(m.inner);
    for (auto& is : ri.issues)
        rep.issues.push_back({"inner:" + is.axiom, is.where, is.detail});

    ValidationReport rb = validate_bimodule(m.base, m.action);
    rep.unital_action = rb.unital_action;
    for (auto& is : rb.issues)
        rep.issues.push_back(is);

    auto a = [&](std::size_t i) { return basis_vec(m.base.dim, i); };
    auto x = [&](std::size_t p) { return basis_vec(m.inner.dim, p); };
    for (std::size_t i = 0; i < m.base.dim; ++i)
        for (std::size_t p = 0; p < m.inner.dim; ++p)
            for (std::size_t q = 0; q < m.inner.dim; ++q) {
                Vec xy = m.inner.multiply(x(p), x(q));
                if (m.action.act_left(a(i), xy) !=
                    m.inner.multiply(m.action.act_left(a(i), x(p)), x(q)))
                    rep.issues.push_back({"compat-left", {i, p, q}, "a(xy) != (ax)y"});
                if (m.action.act_right(xy, a(i)) !=
                    m.inner.multiply(x(p), m.action.act_right(x(q), a(i))))
                    rep.issues.push_back({"compat-right", {i, p, q}, "(xy)a != x(ya)"});
                if (m.inner.multiply(m.action.act_right(x(p), a(i)), x(q)) !=
                    m.inner.multiply(x(p), m.action.act_left(a(i), x(q))))
                    rep.issues.push_back({"compat-mixed", {i, p, q}, "(xa)y != x(ay)"});
            }
    return rep;
}

Bimodule regular_bimodule(const FiniteAlgebra& alg)
{
    Bimodule m;
    m.algebra_dim = alg.dim;
    m.dim = alg.dim;
    m.left = alg.mult;
    m.right = alg.mult; // index roles already match r[p][i][q] = mult[p][i][q]
    return m;
}

std::optional<Vec> find_unit(const FiniteAlgebra& alg)
{
    // Solve u*e_i = e_i and e_i*u = e_i for all i.
    std::size_t d = alg.dim;
    Mat sys(2 * d * d, d);
    Vec rhs(2 * d * d);
    std::size_t row = 0;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = 0; k < d; ++k) {
            for (std::size_t j = 0; j < d; ++j)
                sys.at(row, j) = alg.mult.at(j, i, k);
            rhs[row] = (i == k) ? 1 : 0;
            ++row;
            for (std::size_t j = 0; j < d; ++j)
                sys.at(row, j) = alg.mult.at(i, j, k);
            rhs[row] = (i == k) ? 1 : 0;
            ++row;
        }
    return sys.solve(rhs);
}

FiniteAlgebra rational_field()
{
    FiniteAlgebra a;
    a.dim = 1;
    a.basis = {"1"};
    a.mult = Ten3(1, 1, 1);
    a.mult.at(0, 0, 0) = 1;
    a.unit = Vec{1};
    return a;
}

FiniteAlgebra zero_algebra(std::size_t d)
{
    FiniteAlgebra a;
    a.dim = d;
    for (std::size_t i = 0; i < d; ++i)
        a.basis.push_back("z" + std::to_string(i));
    a.mult = Ten3(d, d, d);
    return a;
}

FiniteAlgebra upper_triangular(std::size_t n)
{
    // basis: e_pq with p <= q, ordered row-major
    std::vector<std::pair<std::size_t, std::size_t>> units;
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = p; q < n; ++q)
            units.emplace_back(p, q);
    FiniteAlgebra a;
    a.dim = units.size();
    a.mult = Ten3(a.dim, a.dim, a.dim);
    for (std::size_t i = 0; i < a.dim; ++i)
        a.basis.push_back("e" + std::to_string(units[i].first + 1) + std::to_string(units[i].second + 1));
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j) {
            if (units[i].second != units[j].first)
                continue;
            auto prod = std::make_pair(units[i].first, units[j].second);
            for (std::size_t k = 0; k < a.dim; ++k)
                if (units[k] == prod)
                    a.mult.at(i, j, k) = 1;
        }
    Vec u(a.dim);
    for (std::size_t k = 0; k < a.dim; ++k)
        if (units[k].first == units[k].second)
            u[k] = 1;
    a.unit = u;
    return a;
}

FiniteAlgebra full_matrix(std::size_t n)
{
    std::vector<std::pair<std::size_t, std::size_t>> units;
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q)
            units.emplace_back(p, q);
    FiniteAlgebra a;
    a.dim = n * n;
    a.mult = Ten3(a.dim, a.dim, a.dim);
    for (auto [p, q] : units)
        a.basis.push_back("e" + std::to_string(p + 1) + std::to_string(q + 1));
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j) {
            if (units[i].second != units[j].first)
                continue;
            std::size_t k = units[i].first * n + units[j].second;
            a.mult.at(i, j, k) = 1;
        }
    Vec u(a.dim);
    for (std::size_t p = 0; p < n; ++p)
        u[p * n + p] = 1;
    a.unit = u;
    return a;
}

FiniteAlgebra cyclic_group_algebra(std::size_t k)
{
    FiniteAlgebra a;
    a.dim = k;
    a.mult = Ten3(k, k, k);
    for (std::size_t i = 0; i < k; ++i) {
        a.basis.push_back("g" + std::to_string(i));
        for (std::size_t j = 0; j < k; ++j)
            a.mult.at(i, j, (i + j) % k) = 1;
    }
    Vec u(k);
    u[0] = 1;
    a.unit = u;
    return a;
}

FiniteAlgebra diagonal_algebra(std::size_t d)
{
    FiniteAlgebra a;
    a.dim = d;
    a.mult = Ten3(d, d, d);
    for (std::size_t i = 0; i < d; ++i) {
        a.basis.push_back("p" + std::to_string(i));
        a.mult.at(i, i, i) = 1;
    }
    a.unit = Vec(d, Rat(1));
    return a;
}

AlgebraicModule self_module(const FiniteAlgebra& a)
{
    AlgebraicModule m;
    m.base = a;
    m.inner = a;
    m.action = regular_bimodule(a);
    return m;
}

AlgebraicModule trivial_product_module(const FiniteAlgebra& a, const Bimodule& action)
{
    AlgebraicModule m;
    m.base = a;
    m.inner = zero_algebra(action.dim);
    m.action = action;
    return m;
}

} // namespace modext
