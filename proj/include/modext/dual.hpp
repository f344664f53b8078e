#pragma once

#include "modext/constructions.hpp"

namespace modext {

/// Chain of iterated dual bimodules; levels[0] is the original module.
/// In the dual-basis coordinates used throughout, the canonical evaluation
/// map level n -> level n+2 is the identity matrix, so reflexivity shows up
/// as exact tensor equality two levels apart.
struct DualTower {
    std::vector<Bimodule> levels;
    const Bimodule& level(std::size_t n) const { return levels.at(n); }
};

/// Dual bimodule with actions (a.phi)(m) = phi(m.a), (phi.a)(m) = phi(a.m),
/// expressed in the dual basis.
Bimodule dual_bimodule(const FiniteAlgebra& alg, const Bimodule& m);

DualTower iterated_dual(const FiniteAlgebra& alg, const Bimodule& m, std::size_t n);

/// Blockwise action data for (A bowtie X)^(level). The dual of the product
/// splits along the block dual basis into an A-block and an X-block; the
/// action of a generator (a, 0) or (0, x) on each block is carried by the
/// component tensors below, all indexed [generator][source][target].
///
/// At even levels x maps the A-block into the X-block; at odd levels x maps
/// the X-block into the A-block (and the X-block, via lXX/rXX). The other
/// cross components vanish identically, which is part of what the central
/// consistency check verifies.
struct BlockDualLevel {
    std::size_t level = 0;
    std::size_t dim_a = 0;
    std::size_t dim_x = 0;
    bool even() const { return level % 2 == 0; }

    Ten3 lAA, rAA; // a acting on the A-block
    Ten3 lAX, rAX; // a acting on the X-block
    Ten3 lXX, rXX; // x acting on the X-block, X-component of the result
    Ten3 lX_AX, rX_AX; // even levels: x acting on the A-block into the X-block
    Ten3 lX_XA, rX_XA; // odd levels: x acting on the X-block into the A-block

    // Component products; a is a coefficient vector over A, x over X,
    // F over the A-block, G over the X-block of this level.
    Vec a_F(const Vec& a, const Vec& F) const { return apply(lAA, a, F); }
    Vec F_a(const Vec& F, const Vec& a) const { return apply(rAA, a, F); }
    Vec a_G(const Vec& a, const Vec& G) const { return apply(lAX, a, G); }
    Vec G_a(const Vec& G, const Vec& a) const { return apply(rAX, a, G); }
    Vec x_G(const Vec& x, const Vec& G) const { return apply(lXX, x, G); }
    Vec G_x(const Vec& G, const Vec& x) const { return apply(rXX, x, G); }
    Vec x_F(const Vec& x, const Vec& F) const { return apply(lX_AX, x, F); } // even only
    Vec F_x(const Vec& F, const Vec& x) const { return apply(rX_AX, x, F); } // even only
    Vec x_G_to_A(const Vec& x, const Vec& G) const { return apply(lX_XA, x, G); } // odd only
    Vec G_x_to_A(const Vec& G, const Vec& x) const { return apply(rX_XA, x, G); } // odd only

    static Vec apply(const Ten3& t, const Vec& gen, const Vec& src);
};

/// Levels 0..n of the blockwise dual tower for the module underlying a
/// product algebra. Level k+1 is obtained from level k by transposing each
/// component tensor and swapping left with right.
std::vector<BlockDualLevel> block_dual_tower(const AlgebraicModule& m, std::size_t n);

/// The full (dim A + dim X)-dimensional bimodule over the product carrier
/// assembled from the blockwise component tensors.
Bimodule assemble_block_level(const BlockDualLevel& lv);

/// Level-n dual of the product algebra built from the blockwise formulas.
/// Must agree entrywise with iterated_dual of the carrier's regular
/// bimodule; that agreement is the module's central cross-check.
Bimodule product_dual_actions(const ProductAlgebra& p, std::size_t n);

} // namespace modext
