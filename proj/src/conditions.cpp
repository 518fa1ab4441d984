#include "prym/conditions.hpp"

#include "prym/error.hpp"

namespace prym {

std::string to_string(BStatus s) {
    switch (s) {
        case BStatus::not_applicable: return "not_applicable";
        case BStatus::certified_by_B1: return "certified_by_B1";
        case BStatus::certified_by_b6: return "certified_by_b6";
        case BStatus::certified_by_rank: return "certified_by_rank";
        case BStatus::refuted_generic: return "refuted_generic";
        case BStatus::inconclusive: return "inconclusive";
    }
    return "?";
}

std::optional<BStatus> parse_bstatus(const std::string& s) {
    for (BStatus b : {BStatus::not_applicable, BStatus::certified_by_B1, BStatus::certified_by_b6,
                      BStatus::certified_by_rank, BStatus::refuted_generic, BStatus::inconclusive})
        if (to_string(b) == s) return b;
    return std::nullopt;
}

ConditionA check_A(const PrymDatum& d, const RepDecomposition& V) {
    ConditionA a;
    a.dim = sym2_invariant_dimension(V, Part::minus);
    a.holds = a.dim == d.r - 3;
    return a;
}

ConditionB1 check_B1(const PrymDatum& d, const RepDecomposition& V, long dim_s2) {
    const CharacterTable& T = *V.table;
    ConditionB1 out;
    for (int chi = 0; chi < T.size(); ++chi) {
        if (T.degrees[chi] != 1 || V.sigma_sign[chi] != -1 || V.mult[chi] != 1) continue;
        const int dual = T.dual(chi);
        if (dual != chi && V.mult[dual] == d.r - 3 && dim_s2 == d.r - 3) {
            out.holds = true;
            out.witness = chi;
            return out;
        }
        // With r = 4 a one-dimensional invariant space spanned by the square of
        // a single self-dual line.
        if (dual == chi && d.r == 4 && dim_s2 == 1) {
            out.holds = true;
            out.witness = chi;
            return out;
        }
    }
    return out;
}

ConditionReport classify_B(const PrymDatum& d, const RepDecomposition& V, const ClassifyOptions& opt) {
    ConditionReport rep;
    ConditionA a = check_A(d, V);
    rep.dim_s2 = a.dim;
    rep.cond_A = a.holds;
    ConditionB1 b1 = check_B1(d, V, a.dim);
    rep.cond_B1 = b1.holds;
    rep.b1_witness = b1.witness;
    rep.b_ge_6 = d.b >= 6;
    if (!rep.cond_A) {
        rep.status = BStatus::not_applicable;
        return rep;
    }
    if (rep.cond_B1) {
        rep.status = BStatus::certified_by_B1;
        return rep;
    }
    if (d.b >= 6 && d.g > 0) {
        rep.status = BStatus::certified_by_b6;
        return rep;
    }
    if (!d.group.abelian()) {
        rep.status = BStatus::inconclusive;
        return rep;
    }

    const CoverMatrix C = cover_matrix(d);
    const ProductSystem P = build_product_system(C, a.dim);
    const int target = d.r - 3;
    int best = -1;
    for (int trial = 0; trial < opt.trials; ++trial) {
        auto t = sample_points(d.r, opt.seed + static_cast<std::uint64_t>(trial) * 0x9e3779b97f4a7c15ULL);
        int rk = rank_at_sample(P, t);
        if (rk > best) {
            best = rk;
            rep.sample_point = t;
        }
        if (rk == target) break;
    }
    rep.sampled_rank = best;
    if (best == target) {
        rep.status = BStatus::certified_by_rank;
        return rep;
    }
    if (!opt.allow_symbolic) {
        rep.status = BStatus::inconclusive;
        return rep;
    }
    SymbolicRank S = generic_rank_symbolic(P);
    if (S.rank < best) throw InternalError("generic rank below a sampled rank");
    rep.symbolic_rank = S.rank;
    if (S.rank == target) {
        rep.status = BStatus::certified_by_rank;
    } else {
        if (S.kernel.empty()) throw InternalError("rank deficient without a kernel element");
        rep.status = BStatus::refuted_generic;
        for (const auto& v : S.kernel) rep.kernel.push_back(format_kernel_element(P, v));
    }
    return rep;
}

ConditionReport classify_B(const PrymDatum& d, const ClassifyOptions& opt) {
    return classify_B(d, hodge_decomposition(d), opt);
}

}  // namespace prym
