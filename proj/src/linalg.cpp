#include "prym/linalg.hpp"

#include <utility>

#include "prym/error.hpp"

namespace prym {

int bareiss_rank(std::vector<std::vector<mpz_class>> M) {
    if (M.empty()) return 0;
    const std::size_t rows = M.size();
    const std::size_t cols = M[0].size();
    mpz_class prev = 1;
    std::size_t rk = 0;
    for (std::size_t c = 0; c < cols && rk < rows; ++c) {
        std::size_t piv = rk;
        while (piv < rows && M[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(M[rk], M[piv]);
        for (std::size_t i = rk + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                mpz_class v = M[rk][c] * M[i][j] - M[i][c] * M[rk][j];
                mpz_divexact(M[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
            }
            M[i][c] = 0;
        }
        prev = M[rk][c];
        ++rk;
    }
    return static_cast<int>(rk);
}

namespace {

MPoly content_normalized(std::vector<MPoly>& v) {
    MPoly g;
    for (const auto& x : v)
        if (!x.is_zero()) g = gcd(g, x);
    if (g.is_zero()) return g;
    for (auto& x : v)
        if (!x.is_zero()) x = x.div_exact(g);
    for (const auto& x : v)
        if (!x.is_zero()) {
            if (x.leading().second < 0)
                for (auto& y : v) y = -y;
            break;
        }
    return g;
}

}  // namespace

PolyKernel poly_kernel(std::vector<std::vector<MPoly>> M, int cols) {
    const std::size_t rows = M.size();
    for (const auto& row : M)
        if (static_cast<int>(row.size()) != cols) throw InternalError("ragged polynomial matrix");

    // Fraction-free row echelon form; pivot rows picked by smallest entry.
    MPoly prev(1);
    std::vector<int> pivots;
    std::size_t rk = 0;
    for (int c = 0; c < cols && rk < rows; ++c) {
        std::size_t piv = rows;
        for (std::size_t i = rk; i < rows; ++i)
            if (!M[i][c].is_zero() && (piv == rows || M[i][c].size() < M[piv][c].size())) piv = i;
        if (piv == rows) continue;
        std::swap(M[rk], M[piv]);
        for (std::size_t i = rk + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j)
                M[i][j] = (M[rk][c] * M[i][j] - M[i][c] * M[rk][j]).div_exact(prev);
            M[i][c] = MPoly();
        }
        prev = M[rk][c];
        pivots.push_back(c);
        ++rk;
    }

    PolyKernel out;
    out.rank = static_cast<int>(rk);
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;

    for (int f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<MPoly> v(cols);
        v[f] = MPoly(1);
        for (int i = static_cast<int>(rk) - 1; i >= 0; --i) {
            const int p = pivots[i];
            if (p > f) continue;
            MPoly s;
            for (int j = p + 1; j < cols; ++j)
                if (!v[j].is_zero() && !M[i][j].is_zero()) s += M[i][j] * v[j];
            if (s.is_zero()) continue;
            s = -s;
            if (auto q = s.try_div(M[i][p])) {
                v[p] = std::move(*q);
            } else {
                // Clear the denominator by rescaling the partial solution.
                for (auto& x : v)
                    if (!x.is_zero()) x = x * M[i][p];
                v[p] = std::move(s);
            }
            content_normalized(v);
        }
        // M v must vanish on the echelon form.
        for (std::size_t i = 0; i < rk; ++i) {
            MPoly s;
            for (int j = 0; j < cols; ++j)
                if (!v[j].is_zero() && !M[i][j].is_zero()) s += M[i][j] * v[j];
            if (!s.is_zero()) throw InternalError("kernel back substitution failed");
        }
        content_normalized(v);
        out.basis.push_back(std::move(v));
    }
    return out;
}

}  // namespace prym
