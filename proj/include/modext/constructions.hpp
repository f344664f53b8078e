#pragma once

#include "modext/algebra.hpp"

namespace modext {

enum class Provenance {
    bowtie,
    module_extension,
    theta_lau,
    t_lau,
    direct_sum,
    unitization,
    self_bowtie,
};

std::string provenance_name(Provenance p);

/// Carrier algebra on A x X in block coordinates: the A block occupies
/// indices [0, dim_a), the X block [dim_a, dim_a + dim_x).
struct ProductAlgebra {
    FiniteAlgebra carrier;
    std::size_t dim_a = 0;
    std::size_t dim_x = 0;
    Provenance provenance = Provenance::bowtie;
    /// The underlying algebraic module (after any forced adjustment such as
    /// zeroing the inner product for module_extension).
    AlgebraicModule module;
    bool inner_zeroed = false; // module_extension discarded a nonzero inner product
};

struct ConstructionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// (a,x)(b,y) = (ab, ay + xb + xy). Input must validate.
ProductAlgebra bowtie(const AlgebraicModule& m);

/// (a,x)(b,y) = (ab, ay + xb); a nonzero inner product is zeroed and flagged.
ProductAlgebra module_extension(const AlgebraicModule& m);

/// (a,b)(c,d) = (ac, theta(a)d + theta(c)b + bd); theta a character of A,
/// given as a 1 x dim(A) matrix. Rejects non-multiplicative or zero theta.
ProductAlgebra theta_lau(const FiniteAlgebra& a, const FiniteAlgebra& b, const Mat& theta);

/// (a,b)(c,d) = (ac, T(a)d + bT(c) + bd); T an algebra homomorphism A -> B.
ProductAlgebra t_lau(const FiniteAlgebra& a, const FiniteAlgebra& b, const Mat& t);

/// Component-wise product (a,b)(c,d) = (ac, bd).
ProductAlgebra direct_sum(const FiniteAlgebra& a, const FiniteAlgebra& b);

/// bowtie with X = A acting on itself by multiplication.
ProductAlgebra self_bowtie(const FiniteAlgebra& a);

/// B as an algebraic A-module with actions ab = ba = theta(a)b.
AlgebraicModule theta_module(const FiniteAlgebra& a, const FiniteAlgebra& b, const Mat& theta);

/// B as an algebraic A-module with actions ab = T(a)b, ba = bT(a).
AlgebraicModule t_module(const FiniteAlgebra& a, const FiniteAlgebra& b, const Mat& t);

/// theta is linear A -> Q, nonzero, with theta(ab) = theta(a)theta(b);
/// on failure returns the witnessing basis pair.
bool is_character(const FiniteAlgebra& a, const Mat& theta, std::size_t* bad_i = nullptr,
                  std::size_t* bad_j = nullptr);

bool is_homomorphism(const FiniteAlgebra& a, const FiniteAlgebra& b, const Mat& t,
                     std::size_t* bad_i = nullptr, std::size_t* bad_j = nullptr);

} // namespace modext
