#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "prym/abelian.hpp"
#include "prym/conditions.hpp"
#include "prym/datum.hpp"
#include "prym/error.hpp"

#ifndef PRYM_DATA_DIR
#define PRYM_DATA_DIR "data"
#endif

namespace prym::testing {

inline std::string data_path(const std::string& rel) { return std::string(PRYM_DATA_DIR) + "/" + rel; }

// Datum whose tuple is the columns of A (given as rows) in (Z/N)^m.
inline PrymDatum abelian_datum(int N, const std::vector<std::vector<int>>& A, const std::vector<int>& sigma) {
    FiniteGroup G = abelian_from_columns(N, A);
    std::vector<Elem> tuple;
    for (std::size_t j = 0; j < A[0].size(); ++j) {
        std::vector<int> col;
        for (const auto& row : A) col.push_back(row[j]);
        tuple.push_back(G.find_coords(col));
    }
    return validate_datum(G, tuple, G.find_coords(sigma));
}

inline PrymDatum c10_r5() { return abelian_datum(10, {{1, 1, 2, 2, 4}}, {5}); }
inline PrymDatum c2cubed_r6() {
    return abelian_datum(2, {{1, 1, 0, 0, 0, 0}, {0, 0, 1, 1, 0, 0}, {0, 0, 0, 0, 1, 1}}, {1, 1, 1});
}
inline PrymDatum c2cubed_r9() {
    return abelian_datum(2,
                         {{1, 1, 0, 0, 0, 1, 0, 0, 1}, {0, 1, 0, 1, 1, 1, 1, 1, 0}, {0, 1, 1, 0, 1, 0, 1, 0, 0}},
                         {1, 0, 1});
}
inline PrymDatum c2squared_r10() {
    return abelian_datum(2, {{1, 1, 1, 0, 1, 1, 1, 1, 0, 1}, {0, 0, 1, 1, 0, 0, 0, 1, 1, 0}}, {1, 1});
}

// Eigenspace dimension of the character n computed directly from the
// column sums: -1 + sum_j <-n.col_j / N>, zero for the trivial character.
inline long direct_eigen_dim(int N, const std::vector<std::vector<int>>& A, const std::vector<int>& n) {
    const std::size_t r = A[0].size();
    long num = 0;
    bool trivial = true;
    for (std::size_t j = 0; j < r; ++j) {
        long a = 0;
        for (std::size_t i = 0; i < A.size(); ++i) a += static_cast<long>(n[i]) * A[i][j];
        a %= N;
        if (a) trivial = false;
        num += (N - a) % N;
    }
    if (trivial) return 0;
    return num / N - 1;
}

struct RandomAbelian {
    int N = 0;
    std::vector<std::vector<int>> A;
    std::vector<int> sigma;
    PrymDatum datum;
};

// Random valid abelian datum with r <= max_r, N <= max_n, m <= max_m.
inline RandomAbelian random_abelian_datum(std::mt19937_64& rng, int max_r = 8, int max_n = 12, int max_m = 3) {
    for (;;) {
        std::uniform_int_distribution<int> nd(1, max_n / 2), md(1, max_m), rd(4, max_r);
        RandomAbelian out;
        out.N = 2 * nd(rng);
        const int m = md(rng), r = rd(rng);
        std::uniform_int_distribution<int> ed(0, out.N - 1);
        out.A.assign(m, std::vector<int>(r, 0));
        for (int i = 0; i < m; ++i) {
            int sum = 0;
            for (int j = 0; j + 1 < r; ++j) {
                out.A[i][j] = ed(rng);
                sum += out.A[i][j];
            }
            out.A[i][r - 1] = ((-sum) % out.N + out.N) % out.N;
        }
        FiniteGroup G;
        try {
            G = abelian_from_columns(out.N, out.A);
        } catch (const Error&) {
            continue;
        }
        std::vector<Elem> inv;
        for (Elem e = 1; e < G.order(); ++e)
            if (G.elem_order(e) == 2) inv.push_back(e);
        if (inv.empty()) continue;
        const Elem s = inv[std::uniform_int_distribution<std::size_t>(0, inv.size() - 1)(rng)];
        std::vector<Elem> tuple;
        for (int j = 0; j < r; ++j) {
            std::vector<int> col;
            for (int i = 0; i < m; ++i) col.push_back(out.A[i][j]);
            tuple.push_back(G.find_coords(col));
        }
        try {
            out.datum = validate_datum(G, tuple, s);
        } catch (const DatumError&) {
            continue;
        }
        out.sigma = G.abelian()->coords[s];
        return out;
    }
}

struct PropertyStats {
    int data = 0;
    int symbolic_checked = 0;
    int kernels_checked = 0;
    std::vector<std::string> violations;
};

// Invariants of one abelian datum; appends a description of every failure.
inline void check_properties(const RandomAbelian& ra, std::mt19937_64& rng, PropertyStats& st,
                             int max_symbolic_products = 8) {
    const PrymDatum& d = ra.datum;
    auto fail = [&](const std::string& what) {
        std::string t;
        for (const auto& row : ra.A) {
            t += "[";
            for (int x : row) t += std::to_string(x) + " ";
            t += "]";
        }
        st.violations.push_back(what + " for N=" + std::to_string(ra.N) + " A=" + t);
    };
    ++st.data;

    const CoverMatrix C = cover_matrix(d);
    const auto eig = eigen_dims(C);
    long total = 0, odd = 0;
    std::map<std::vector<int>, long> by_n;
    for (const auto& ch : eig) {
        total += ch.dim;
        if (ch.odd) odd += ch.dim;
        by_n[ch.n] = ch.dim;
        if (ch.dim != direct_eigen_dim(ra.N, ra.A, ch.n)) fail("eigen dimension formula");
    }
    if (total != d.g_tilde) fail("sum of d_n != g~");
    if (odd != d.g_tilde - d.g) fail("dim V_- != g~ - g");

    const RepDecomposition V = hodge_decomposition(d);
    const long s_char = sym2_by_character(V, Part::minus);
    const long s_blocks = sym2_by_blocks(V, Part::minus);
    if (s_char != s_blocks) fail("sym2 character vs block formula");

    const auto& T = *V.table;
    for (int chi = 0; chi < T.size(); ++chi) {
        auto it = by_n.find(T.labels[chi]);
        if (it == by_n.end() || it->second != V.mult[chi]) fail("Chevalley-Weil multiplicity != d_n");
    }

    const ConditionReport rep = classify_B(d, V, {});
    std::uniform_int_distribution<int> pos(1, d.r - 1);
    const int i = pos(rng);
    const auto dir = (rng() & 1) ? BraidDirection::left : BraidDirection::right;
    const PrymDatum moved = validate_datum(d.group, braid_move(d.group, d.tuple, i, dir), d.sigma);
    const CoverMatrix Cm = cover_matrix(moved);
    std::vector<long> dims_a, dims_b;
    for (const auto& ch : eig) dims_a.push_back(ch.dim);
    for (const auto& ch : eigen_dims(Cm)) dims_b.push_back(ch.dim);
    const ConditionReport rep_m = classify_B(moved, {});
    if (moved.g_tilde != d.g_tilde || moved.g != d.g || moved.b != d.b || moved.p != d.p || dims_a != dims_b ||
        rep_m.dim_s2 != rep.dim_s2 || rep_m.cond_A != rep.cond_A || rep_m.cond_B1 != rep.cond_B1)
        fail("braid move changed derived data");

    if (s_char == 0) return;
    const ProductSystem P = build_product_system(C, s_char);
    const int sampled = rank_at_sample(P, sample_points(d.r, 1));
    if (sampled > s_char) fail("sampled rank > dim");
    if (static_cast<int>(P.pairs.size()) > max_symbolic_products) return;
    const SymbolicRank S = generic_rank_symbolic(P);
    ++st.symbolic_checked;
    if (!(sampled <= S.rank && S.rank <= s_char)) fail("sampled <= symbolic <= dim violated");
    if (S.rank + static_cast<int>(S.kernel.size()) != static_cast<int>(P.pairs.size())) fail("rank-nullity");
    for (const auto& v : S.kernel) {
        ++st.kernels_checked;
        if (!kernel_vanishes(P, v)) fail("kernel element does not vanish");
    }
}

}  // namespace prym::testing
