#include "modext/instances.hpp"

#include <algorithm>
#include <functional>
#include <random>

namespace modext {

namespace {

/// Q[e]/(e^2): basis {1, e}.
FiniteAlgebra dual_numbers()
{
    FiniteAlgebra a;
    a.dim = 2;
    a.basis = {"1", "e"};
    a.mult = Ten3(2, 2, 2);
    a.mult.at(0, 0, 0) = 1;
    a.mult.at(0, 1, 1) = 1;
    a.mult.at(1, 0, 1) = 1;
    a.unit = Vec{1, 0};
    return a;
}

/// Q[x]/(x^3): basis {1, x, x^2}.
FiniteAlgebra truncated_poly3()
{
    FiniteAlgebra a;
    a.dim = 3;
    a.basis = {"1", "x", "x2"};
    a.mult = Ten3(3, 3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            if (i + j < 3)
                a.mult.at(i, j, i + j) = 1;
    a.unit = Vec{1, 0, 0};
    return a;
}

Bimodule zero_action(std::size_t alg_dim, std::size_t mod_dim)
{
    Bimodule b;
    b.algebra_dim = alg_dim;
    b.dim = mod_dim;
    b.left = Ten3(alg_dim, mod_dim, mod_dim);
    b.right = Ten3(mod_dim, alg_dim, mod_dim);
    return b;
}

AlgebraicModule zero_action_module(const FiniteAlgebra& a, const FiniteAlgebra& x)
{
    AlgebraicModule m;
    m.base = a;
    m.inner = x;
    m.action = zero_action(a.dim, x.dim);
    return m;
}

Mat coordinate_char(std::size_t dim, std::size_t which)
{
    Mat th(1, dim);
    th.at(0, which) = 1;
    return th;
}

Mat all_ones_char(std::size_t dim)
{
    Mat th(1, dim);
    for (std::size_t i = 0; i < dim; ++i)
        th.at(0, i) = 1;
    return th;
}

/// Character sending the unit to 1 and the nilpotent part to 0, for the
/// local algebras above whose basis starts with the unit.
Mat unit_char(std::size_t dim) { return coordinate_char(dim, 0); }

} // namespace

FiniteAlgebra named_algebra(const std::string& name)
{
    if (name == "q")
        return rational_field();
    if (name == "zero1")
        return zero_algebra(1);
    if (name == "zero2")
        return zero_algebra(2);
    if (name == "zero3")
        return zero_algebra(3);
    if (name == "t2")
        return upper_triangular(2);
    if (name == "m2")
        return full_matrix(2);
    if (name == "diag2")
        return diagonal_algebra(2);
    if (name == "diag3")
        return diagonal_algebra(3);
    if (name == "cyclic2")
        return cyclic_group_algebra(2);
    if (name == "cyclic3")
        return cyclic_group_algebra(3);
    if (name == "dual2")
        return dual_numbers();
    if (name == "trunc3")
        return truncated_poly3();
    throw StructureError("unknown algebra name: " + name);
}

std::vector<std::string> named_algebra_list()
{
    return {"q",     "zero1",   "zero2",   "zero3", "t2",    "m2",
            "diag2", "diag3",   "cyclic2", "cyclic3", "dual2", "trunc3"};
}

std::vector<Instance> generate_corpus(std::uint64_t seed, std::size_t count)
{
    using Maker = std::function<AlgebraicModule()>;
    std::vector<std::pair<std::string, Maker>> curated;
    std::vector<std::pair<std::string, Maker>> pool;

    auto self = [](const std::string& n) {
        return [n] { return self_module(named_algebra(n)); };
    };
    auto triv = [](const std::string& n) {
        return [n] {
            FiniteAlgebra a = named_algebra(n);
            return trivial_product_module(a, regular_bimodule(a));
        };
    };

    curated.emplace_back("self:q", self("q"));
    curated.emplace_back("self:t2", self("t2"));
    curated.emplace_back("self:diag2", self("diag2"));
    curated.emplace_back("self:cyclic2", self("cyclic2"));
    curated.emplace_back("self:zero2", self("zero2"));
    curated.emplace_back("self:dual2", self("dual2"));
    curated.emplace_back("self:trunc3", self("trunc3"));
    curated.emplace_back("trivial:t2", triv("t2"));
    curated.emplace_back("trivial:diag2", triv("diag2"));
    curated.emplace_back("trivial:dual2", triv("dual2"));
    curated.emplace_back("theta:q->zero1", [] {
        return theta_module(rational_field(), zero_algebra(1), coordinate_char(1, 0));
    });
    curated.emplace_back("theta:q->zero2", [] {
        return theta_module(rational_field(), zero_algebra(2), coordinate_char(1, 0));
    });
    curated.emplace_back("theta:diag2->zero2", [] {
        return theta_module(diagonal_algebra(2), zero_algebra(2), coordinate_char(2, 0));
    });
    curated.emplace_back("theta:cyclic2->q", [] {
        return theta_module(cyclic_group_algebra(2), rational_field(), all_ones_char(2));
    });
    curated.emplace_back("theta:dual2->zero2", [] {
        return theta_module(dual_numbers(), zero_algebra(2), unit_char(2));
    });
    curated.emplace_back("theta:diag3->diag2", [] {
        return theta_module(diagonal_algebra(3), diagonal_algebra(2), coordinate_char(3, 1));
    });
    curated.emplace_back("t:id:diag2", [] {
        return t_module(diagonal_algebra(2), diagonal_algebra(2), Mat::identity(2));
    });
    curated.emplace_back("t:proj:diag2->q", [] {
        Mat t(1, 2);
        t.at(0, 0) = 1;
        return t_module(diagonal_algebra(2), rational_field(), t);
    });
    curated.emplace_back("t:zero:t2->cyclic2", [] {
        return t_module(upper_triangular(2), cyclic_group_algebra(2), Mat(2, 3));
    });
    curated.emplace_back("t:zero:q->zero3", [] {
        return t_module(rational_field(), zero_algebra(3), Mat(3, 1));
    });
    curated.emplace_back("zeroact:t2/cyclic2", [] {
        return zero_action_module(upper_triangular(2), cyclic_group_algebra(2));
    });
    curated.emplace_back("zeroact:diag2/zero3", [] {
        return zero_action_module(diagonal_algebra(2), zero_algebra(3));
    });

    // seeded picks beyond the curated floor
    for (const std::string& an : {"q", "diag2", "diag3", "cyclic2", "cyclic3", "dual2", "trunc3"})
        for (const std::string& bn : {"zero1", "zero2", "zero3", "q", "diag2", "cyclic2"}) {
            pool.emplace_back("theta:" + an + "->" + bn + "#0", [an, bn] {
                FiniteAlgebra a = named_algebra(an);
                Mat th = an.rfind("cyclic", 0) == 0 ? all_ones_char(a.dim) : coordinate_char(a.dim, 0);
                return theta_module(a, named_algebra(bn), th);
            });
        }
    for (const std::string& an : {"q", "t2", "zero1", "zero3", "diag3", "cyclic3", "trunc3"}) {
        pool.emplace_back("self:" + an + "#p", self(an));
        pool.emplace_back("trivial:" + an + "#p", triv(an));
        for (const std::string& bn : {"zero2", "q", "dual2", "cyclic2"}) {
            pool.emplace_back("t:zero:" + an + "->" + bn + "#p", [an, bn] {
                FiniteAlgebra a = named_algebra(an);
                FiniteAlgebra b = named_algebra(bn);
                return t_module(a, b, Mat(b.dim, a.dim));
            });
            pool.emplace_back("zeroact:" + an + "/" + bn + "#p", [an, bn] {
                return zero_action_module(named_algebra(an), named_algebra(bn));
            });
        }
    }

    std::mt19937_64 rng(seed);
    std::shuffle(pool.begin(), pool.end(), rng);

    std::vector<Instance> out;
    auto add = [&](const std::string& name, const Maker& mk) {
        for (auto& e : out)
            if (e.name == name)
                return;
        AlgebraicModule m = mk();
        if (!validate_algebraic_module(m).ok())
            throw StructureError("corpus instance failed validation: " + name);
        out.push_back({name, std::move(m)});
    };
    for (auto& [name, mk] : curated)
        add(name, mk);
    for (auto& [name, mk] : pool) {
        if (out.size() >= count)
            break;
        add(name, mk);
    }
    return out;
}

} // namespace modext
