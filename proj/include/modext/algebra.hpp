#pragma once

#include "modext/matrix.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace modext {

/// Dimension/shape inconsistencies. Distinct from axiom failures, which are
/// reported, not thrown.
struct StructureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Rank-3 tensor of rationals.
class Ten3 {
public:
    Ten3() : n1_(0), n2_(0), n3_(0) {}
    Ten3(std::size_t n1, std::size_t n2, std::size_t n3)
        : n1_(n1), n2_(n2), n3_(n3), a_(n1 * n2 * n3)
    {
    }

    std::size_t n1() const { return n1_; }
    std::size_t n2() const { return n2_; }
    std::size_t n3() const { return n3_; }

    Rat& at(std::size_t i, std::size_t j, std::size_t k) { return a_[(i * n2_ + j) * n3_ + k]; }
    const Rat& at(std::size_t i, std::size_t j, std::size_t k) const
    {
        return a_[(i * n2_ + j) * n3_ + k];
    }

    bool operator==(const Ten3& o) const
    {
        return n1_ == o.n1_ && n2_ == o.n2_ && n3_ == o.n3_ && a_ == o.a_;
    }
    bool operator!=(const Ten3& o) const { return !(*this == o); }

    /// Swap the two non-generator indices: out[i][p][q] = in[i][q][p].
    Ten3 transposed_23() const;

private:
    std::size_t n1_, n2_, n3_;
    std::vector<Rat> a_;
};

/// Associative algebra over Q given by structure constants:
/// e_i e_j = sum_k mult[i][j][k] e_k.
struct FiniteAlgebra {
    std::size_t dim = 0;
    std::vector<std::string> basis;
    Ten3 mult;
    std::optional<Vec> unit;

    /// Bilinear product of coefficient vectors.
    Vec multiply(const Vec& u, const Vec& v) const;
};

/// Bimodule over a fixed algebra:
///   e_i . m_p = sum_q left[i][p][q] m_q
///   m_p . e_i = sum_q right[p][i][q] m_q
struct Bimodule {
    std::size_t algebra_dim = 0;
    std::size_t dim = 0;
    Ten3 left;
    Ten3 right;

    Vec act_left(const Vec& a, const Vec& m) const;
    Vec act_right(const Vec& m, const Vec& a) const;
};

/// An algebra X (inner) that is also a bimodule over a base algebra A,
/// subject to the mixed associativity laws a(xy)=(ax)y, (xy)a=x(ya),
/// (xa)y=x(ay).
struct AlgebraicModule {
    FiniteAlgebra base;
    FiniteAlgebra inner;
    Bimodule action;
};

struct ValidationIssue {
    std::string axiom;
    std::array<std::size_t, 3> where{};
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    bool unital_action = false; // computed for bimodules when the algebra is unital
    bool ok() const { return issues.empty(); }
};

/// Checks associativity on all basis triples, and the unit law if a unit is
/// declared. Throws StructureError on shape inconsistencies.
ValidationReport validate_algebra(const FiniteAlgebra& alg);

/// Checks a(bm)=(ab)m, (ma)b=m(ab), (am)b=a(mb) on all basis choices. Also
/// computes (never assumes) whether a declared unit acts as identity.
ValidationReport validate_bimodule(const FiniteAlgebra& alg, const Bimodule& m);

/// Bimodule axioms plus the three compatibility laws plus associativity of
/// the inner product.
ValidationReport validate_algebraic_module(const AlgebraicModule& m);

/// A as a bimodule over itself via multiplication.
Bimodule regular_bimodule(const FiniteAlgebra& alg);

/// Searches for a two-sided unit of the algebra; returns its coefficient
/// vector if one exists.
std::optional<Vec> find_unit(const FiniteAlgebra& alg);

FiniteAlgebra rational_field();

/// d-dimensional algebra with all products zero.
FiniteAlgebra zero_algebra(std::size_t d);

/// Upper triangular n x n matrices (basis: matrix units e_pq, p <= q).
FiniteAlgebra upper_triangular(std::size_t n);

/// Full n x n matrix algebra.
FiniteAlgebra full_matrix(std::size_t n);

/// Group algebra of the cyclic group of order k.
FiniteAlgebra cyclic_group_algebra(std::size_t k);

/// Q^d with pointwise product.
FiniteAlgebra diagonal_algebra(std::size_t d);

/// X = A acting on itself by multiplication, inner product = multiplication.
AlgebraicModule self_module(const FiniteAlgebra& a);

/// Same bimodule action but inner product forced to zero.
AlgebraicModule trivial_product_module(const FiniteAlgebra& a, const Bimodule& action);

} // namespace modext
