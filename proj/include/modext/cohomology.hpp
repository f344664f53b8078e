#pragma once

#include "modext/dual.hpp"

namespace modext {

/// A linear map alg -> mod stored as a mod.dim x alg.dim matrix over Q;
/// column i holds the coefficients of D(e_i).
using LinearMap = Mat;

Vec flatten_map(const LinearMap& m);
LinearMap unflatten_map(const Vec& v, std::size_t mod_dim, std::size_t alg_dim);

struct DerivationSpace {
    std::vector<LinearMap> basis;       // canonical RREF basis of all derivations
    std::vector<LinearMap> inner_basis; // canonical basis of the inner derivations
    std::size_t derivation_dim = 0;
    std::size_t inner_dim = 0;
    std::size_t h1 = 0;
};

bool is_derivation(const FiniteAlgebra& alg, const Bimodule& mod, const LinearMap& d);

/// Matrix of the inner derivation a -> a.m - m.a for the module element m.
LinearMap inner_derivation(const FiniteAlgebra& alg, const Bimodule& mod, const Vec& m);

/// Canonical nullspace basis of the Leibniz constraint system
/// D(e_i e_j) = D(e_i).e_j + e_i.D(e_j), plus the inner subspace and H^1.
DerivationSpace derivation_space(const FiniteAlgebra& alg, const Bimodule& mod);

std::vector<LinearMap> inner_derivations(const FiniteAlgebra& alg, const Bimodule& mod);

std::size_t h1_dim(const FiniteAlgebra& alg, const Bimodule& mod);

/// H^1(A, A^(n)) == 0. n = 0 reads as derivations into A itself, which is
/// not a standard weak-amenability level; callers decide how to interpret it.
bool is_n_weakly_amenable(const FiniteAlgebra& alg, std::size_t n);

/// Rows spanning the inner derivations, flattened; convenient for span tests.
Mat inner_span_rows(const FiniteAlgebra& alg, const Bimodule& mod);

} // namespace modext
