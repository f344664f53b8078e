// Acceptance gate: nine desk-scale properties checked with exact arithmetic
// over the full generated corpus. One pass/fail line per criterion.

#include "modext/theorems.hpp"
#include "modext/instances.hpp"

#include <functional>
#include <iostream>
#include <set>

using namespace modext;

namespace {

struct Gate {
    int failures = 0;

    void run(int idx, const std::string& what, const std::function<bool(std::string&)>& body)
    {
        std::string detail;
        bool ok = false;
        try {
            ok = body(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        std::cout << "criterion " << idx << " (" << what << "): " << (ok ? "PASS" : "FAIL");
        if (!ok && !detail.empty())
            std::cout << "  [" << detail << "]";
        std::cout << "\n" << std::flush;
        if (!ok)
            ++failures;
    }
};

bool bim_equal(const Bimodule& a, const Bimodule& b)
{
    return a.algebra_dim == b.algebra_dim && a.dim == b.dim && a.left == b.left &&
           a.right == b.right;
}

std::vector<FiniteAlgebra> corpus_algebras(const std::vector<Instance>& corpus)
{
    std::vector<FiniteAlgebra> out;
    auto add = [&](const FiniteAlgebra& a) {
        if (a.dim == 0)
            return;
        for (auto& e : out)
            if (e.dim == a.dim && e.mult == a.mult)
                return;
        out.push_back(a);
    };
    for (auto& inst : corpus) {
        add(inst.module.base);
        add(inst.module.inner);
    }
    return out;
}

} // namespace

int main()
{
    std::vector<Instance> corpus = generate_corpus(42);
    Gate g;

    g.run(1, "lemma decomposition over corpus, k in 0..3", [&](std::string& detail) {
        if (corpus.size() < 20) {
            detail = "corpus too small";
            return false;
        }
        for (auto& inst : corpus) {
            ProductAlgebra p = bowtie(inst.module);
            auto tower = block_dual_tower(p.module, 3);
            for (std::size_t k = 0; k <= 3; ++k) {
                Bimodule mod = assemble_block_level(tower[k]);
                DerivationSpace ds = derivation_space(p.carrier, mod);
                for (auto& d : ds.basis) {
                    DecompositionBlocks b = decompose(p, tower[k], d);
                    if (assemble(p, tower[k], b) != d) {
                        detail = inst.name + " k=" + std::to_string(k) + ": round trip broke";
                        return false;
                    }
                }
            }
        }
        return true;
    });

    g.run(2, "master iff, odd k in {1,3} and even k in {0,2}", [&](std::string& detail) {
        for (auto& inst : corpus)
            for (std::size_t n = 0; n <= 1; ++n) {
                ConditionReport odd = check_thm_odd(inst.module, n);
                if (!odd.iff_consistent) {
                    detail = inst.name + " odd n=" + std::to_string(n);
                    return false;
                }
                ConditionReport even = check_thm_even(inst.module, n);
                if (!even.iff_consistent) {
                    detail = inst.name + " even n=" + std::to_string(n);
                    return false;
                }
            }
        return true;
    });

    g.run(3, "innerness certificates match the span test", [&](std::string& detail) {
        for (auto& inst : corpus) {
            ProductAlgebra p = bowtie(inst.module);
            auto tower = block_dual_tower(p.module, 3);
            for (std::size_t k = 0; k <= 3; ++k) {
                Bimodule mod = assemble_block_level(tower[k]);
                DerivationSpace ds = derivation_space(p.carrier, mod);
                Mat inner = inner_span_rows(p.carrier, mod);
                for (auto& d : ds.basis) {
                    DecompositionBlocks b = decompose(p, tower[k], d);
                    bool has_cert = find_certificate(p, tower[k], b).has_value();
                    Vec flat = flatten_map(d);
                    bool in_span = rows_in_span(Mat::from_rows({flat}, flat.size()), inner);
                    if (has_cert != in_span) {
                        detail = inst.name + " k=" + std::to_string(k) + ": certificate " +
                                 (has_cert ? "found" : "absent") + " but span test says " +
                                 (in_span ? "inner" : "non-inner");
                        return false;
                    }
                }
            }
        }
        return true;
    });

    g.run(4, "corollary coherence", [&](std::string& detail) {
        // trivial-product case on trivial-product instances
        for (auto& inst : corpus) {
            Ten3 z(inst.module.inner.dim, inst.module.inner.dim, inst.module.inner.dim);
            if (!(inst.module.inner.mult == z))
                continue;
            for (std::size_t n = 0; n <= 1; ++n) {
                ConditionReport zo = check_cor_trivial_odd(inst.module, n);
                ConditionReport to = check_thm_odd(inst.module, n);
                ConditionReport ze = check_cor_trivial_even(inst.module, n);
                ConditionReport te = check_thm_even(inst.module, n);
                if (!zo.iff_consistent || !ze.iff_consistent ||
                    zo.conditions_hold != to.conditions_hold ||
                    ze.conditions_hold != te.conditions_hold) {
                    detail = "trivial mismatch on " + inst.name;
                    return false;
                }
            }
        }
        // self-bowtie biconditional on every corpus algebra
        for (auto& a : corpus_algebras(corpus))
            for (std::size_t n = 0; n <= 1; ++n)
                for (Parity par : {Parity::odd, Parity::even})
                    if (!check_cor_selfbowtie(a, n, par).iff_consistent) {
                        detail = "self-bowtie failed on a corpus algebra of dim " +
                                 std::to_string(a.dim);
                        return false;
                    }
        // theta-Lau vs theorem on the character module
        struct LauCase {
            FiniteAlgebra a, b;
            Mat th;
        };
        std::vector<LauCase> laus;
        {
            Mat th(1, 1);
            th.at(0, 0) = 1;
            laus.push_back({rational_field(), zero_algebra(2), th});
            laus.push_back({rational_field(), cyclic_group_algebra(2), th});
        }
        {
            Mat th(1, 2);
            th.at(0, 0) = 1;
            laus.push_back({diagonal_algebra(2), zero_algebra(1), th});
            laus.push_back({diagonal_algebra(2), rational_field(), th});
        }
        for (auto& c : laus)
            for (std::size_t n = 0; n <= 1; ++n) {
                AlgebraicModule m = theta_module(c.a, c.b, c.th);
                ConditionReport lo = check_cor_lau(c.a, c.b, c.th, n, Parity::odd);
                ConditionReport le = check_cor_lau(c.a, c.b, c.th, n, Parity::even);
                if (!lo.iff_consistent || !le.iff_consistent ||
                    lo.product_wa != check_thm_odd(m, n).product_wa ||
                    le.product_wa != check_thm_even(m, n).product_wa) {
                    detail = "lau mismatch";
                    return false;
                }
            }
        // direct-sum vs theorem on the T=0 module
        std::vector<std::pair<FiniteAlgebra, FiniteAlgebra>> sums = {
            {upper_triangular(2), rational_field()},
            {diagonal_algebra(2), zero_algebra(2)},
            {full_matrix(2), cyclic_group_algebra(2)},
        };
        for (auto& [a, b] : sums)
            for (std::size_t n = 0; n <= 1; ++n)
                for (Parity par : {Parity::odd, Parity::even}) {
                    ConditionReport r = check_cor_directsum(a, b, n, par);
                    AlgebraicModule m = t_module(a, b, Mat(b.dim, a.dim));
                    ConditionReport t = par == Parity::odd ? check_thm_odd(m, n)
                                                           : check_thm_even(m, n);
                    if (!r.iff_consistent || r.product_wa != t.product_wa) {
                        detail = "direct-sum mismatch";
                        return false;
                    }
                }
        return true;
    });

    g.run(5, "sufficiency propositions never violated", [&](std::string& detail) {
        for (auto& inst : corpus) {
            for (std::size_t n = 0; n <= 1; ++n) {
                if (!check_prop_density(inst.module, n, DensityVariant::odd_xx).iff_consistent ||
                    !check_prop_density(inst.module, n, DensityVariant::odd_xa).iff_consistent) {
                    detail = inst.name + " odd n=" + std::to_string(n);
                    return false;
                }
            }
            if (!check_prop_density(inst.module, 1, DensityVariant::even).iff_consistent) {
                detail = inst.name + " even n=1";
                return false;
            }
            for (std::size_t n = 1; n <= 3; ++n)
                if (!check_prop_density(inst.module, n, DensityVariant::combined).iff_consistent) {
                    detail = inst.name + " combined n=" + std::to_string(n);
                    return false;
                }
        }
        return true;
    });

    g.run(6, "blockwise dual formulas equal iterated duals, n in 0..3", [&](std::string& detail) {
        for (auto& inst : corpus) {
            ProductAlgebra p = bowtie(inst.module);
            for (std::size_t n = 0; n <= 3; ++n) {
                Bimodule direct = iterated_dual(p.carrier, regular_bimodule(p.carrier), n).level(n);
                if (!bim_equal(direct, product_dual_actions(p, n))) {
                    detail = inst.name + " n=" + std::to_string(n);
                    return false;
                }
            }
        }
        return true;
    });

    g.run(7, "h1 at level n equals level n+2, n in {0,1}", [&](std::string& detail) {
        for (auto& a : corpus_algebras(corpus))
            for (std::size_t n = 0; n <= 1; ++n) {
                DualTower t = iterated_dual(a, regular_bimodule(a), n + 2);
                if (h1_dim(a, t.level(n)) != h1_dim(a, t.level(n + 2))) {
                    detail = "reflexivity broke on a dim-" + std::to_string(a.dim) + " algebra";
                    return false;
                }
            }
        return true;
    });

    g.run(8, "pinned oracle constants recomputed from scratch", [&](std::string& detail) {
        FiniteAlgebra t2 = upper_triangular(2);
        DerivationSpace ds = derivation_space(t2, regular_bimodule(t2));
        if (ds.derivation_dim != 2 || ds.inner_dim != 2 || ds.h1 != 0) {
            detail = "t2 pins";
            return false;
        }
        for (std::size_t d = 1; d <= 3; ++d) {
            FiniteAlgebra z = zero_algebra(d);
            if (h1_dim(z, regular_bimodule(z)) != d * d) {
                detail = "zero-algebra pin d=" + std::to_string(d);
                return false;
            }
        }
        FiniteAlgebra m2 = full_matrix(2);
        for (std::size_t n = 0; n <= 3; ++n) {
            DualTower t = iterated_dual(m2, regular_bimodule(m2), n);
            if (h1_dim(m2, t.level(n)) != 0) {
                detail = "m2 pin n=" + std::to_string(n);
                return false;
            }
        }
        return true;
    });

    g.run(9, "weak amenability forces products to span", [&](std::string& detail) {
        for (auto& a : corpus_algebras(corpus))
            if (!check_necessity_products_span(a)) {
                detail = "necessity failed on a dim-" + std::to_string(a.dim) + " algebra";
                return false;
            }
        return true;
    });

    if (g.failures == 0) {
        std::cout << "all acceptance criteria passed\n";
        return 0;
    }
    std::cout << g.failures << " acceptance criteria FAILED\n";
    return 1;
}
