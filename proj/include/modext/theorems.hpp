#pragma once

#include "modext/decomposition.hpp"

namespace modext {

struct Condition {
    std::string name;
    bool holds = false;
    std::string diag; // dimension diagnostics
};

/// Outcome of one theorem/corollary/proposition check on one instance.
/// For iff-statements, iff_consistent records whether the conjunction of
/// the conditions agrees with the directly computed H^1; for one-way
/// propositions it records that the implication was not violated.
struct ConditionReport {
    std::string theorem;
    std::size_t level_n = 0;    // the n of (2n+1)/(2n), or the plain level
    std::size_t dual_level = 0; // k
    std::vector<Condition> conditions;
    bool conditions_hold = false;
    std::size_t direct_h1 = 0; // of the product algebra at dual_level
    bool product_wa = false;   // direct_h1 == 0
    bool is_iff = true;
    bool iff_consistent = false;
};

/// Theorem-level characterization, odd duals (level 2n+1).
ConditionReport check_thm_odd(const AlgebraicModule& m, std::size_t n);

/// Theorem-level characterization, even duals (level 2n).
ConditionReport check_thm_even(const AlgebraicModule& m, std::size_t n);

/// Classical module-extension specializations (trivial product on X).
/// The instance must have zero inner product.
ConditionReport check_cor_trivial_odd(const AlgebraicModule& m, std::size_t n);
ConditionReport check_cor_trivial_even(const AlgebraicModule& m, std::size_t n);

enum class DensityVariant { odd_xx, odd_xa, even, combined };

/// Sufficiency propositions; density hypotheses are span equalities in
/// finite dimensions. Only the implication hypotheses => product weakly
/// amenable is asserted.
ConditionReport check_prop_density(const AlgebraicModule& m, std::size_t n, DensityVariant v);

ConditionReport check_cor_selfbowtie(const FiniteAlgebra& a, std::size_t n, Parity parity);

ConditionReport check_cor_directsum(const FiniteAlgebra& a, const FiniteAlgebra& b, std::size_t n,
                                    Parity parity);

ConditionReport check_cor_lau(const FiniteAlgebra& a, const FiniteAlgebra& b, const Mat& theta,
                              std::size_t n, Parity parity);

/// Weak amenability forces the products to span the algebra. Returns false
/// only on a bug or a genuine discrepancy.
bool check_necessity_products_span(const FiniteAlgebra& a);

/// span{e_i e_j} = A
bool products_span(const FiniteAlgebra& a);

/// Dispatch by report tag used by the CLI: thm-odd, thm-even,
/// cor-trivial-odd, ..., prop-density-xx-odd, prop-density-xa-odd, prop-density-even,
/// prop-density-combined, necessity-products-span.
ConditionReport check_by_tag(const std::string& tag, const AlgebraicModule& m, std::size_t n);

std::vector<std::string> known_theorem_tags();

} // namespace modext
