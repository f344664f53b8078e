#pragma once

#include "modext/cohomology.hpp"

namespace modext {

enum class Parity { odd, even };

/// A decomposition condition failed on an actual derivation. The blockwise
/// presentation is a theorem, so this always means an implementation bug or
/// a genuine discrepancy; corpus runs must abort loudly on it.
struct LemmaViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Blocks of a derivation D on A bowtie X into its level-k dual:
/// D(a,x) = (D_A(a) + T_A(x), D_X(a) + T_X(x)).
struct DecompositionBlocks {
    Parity parity = Parity::odd;
    std::size_t dual_level = 0; // k; parity is k mod 2
    LinearMap D_A; // A -> A-block
    LinearMap D_X; // A -> X-block
    LinearMap T_A; // X -> A-block
    LinearMap T_X; // X -> X-block
};

struct InnernessCertificate {
    Parity parity = Parity::odd;
    Vec witness_a; // f (odd) or F (even), coordinates in the A-block
    Vec witness_x; // g (odd) or G (even), coordinates in the X-block
};

/// Splits a verified derivation D (a (dimA+dimX)-square matrix, domain the
/// product carrier, codomain its level-k dual) into blocks and checks every
/// condition of the blockwise presentation exactly. Throws LemmaViolation
/// if any condition fails and std::invalid_argument if D is not a
/// derivation to begin with.
DecompositionBlocks decompose(const ProductAlgebra& p, const BlockDualLevel& lv, const Mat& d);

/// Rebuilds the derivation matrix from blocks, re-verifying the conditions
/// and the derivation property of the result.
Mat assemble(const ProductAlgebra& p, const BlockDualLevel& lv, const DecompositionBlocks& b);

/// Solves for a joint witness (f,g) / (F,G) of all certificate identities.
/// nullopt is a proof of absence (the linear system is inconsistent).
std::optional<InnernessCertificate>
find_certificate(const ProductAlgebra& p, const BlockDualLevel& lv, const DecompositionBlocks& b);

/// Simplified presentation available when X is unital: only (D_A, T_X)
/// survive, the other blocks are determined by them.
struct UnitalBlocks {
    Parity parity = Parity::odd;
    std::size_t dual_level = 0;
    LinearMap D_A;
    LinearMap T_X;
};

/// Requires the inner algebra of p to be unital. Verifies the simplified
/// reconstruction and its side conditions against the general blocks.
UnitalBlocks decompose_unital(const ProductAlgebra& p, const BlockDualLevel& lv, const Mat& d);

} // namespace modext
