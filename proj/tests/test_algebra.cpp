#include <doctest.h>

#include <random>

#include "prym/linalg.hpp"
#include "prym/poly.hpp"

using namespace prym;

namespace {

// Rank over Q by plain Gaussian elimination with rationals.
int rational_rank(std::vector<std::vector<mpq_class>> M) {
    int rank = 0;
    const int rows = static_cast<int>(M.size()), cols = rows ? static_cast<int>(M[0].size()) : 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (M[r][c] != 0) piv = r;
        if (piv < 0) continue;
        std::swap(M[piv], M[rank]);
        for (int r = 0; r < rows; ++r) {
            if (r == rank || M[r][c] == 0) continue;
            mpq_class f = M[r][c] / M[rank][c];
            for (int k = c; k < cols; ++k) M[r][k] -= f * M[rank][k];
        }
        ++rank;
    }
    return rank;
}

}  // namespace

TEST_CASE("polynomial arithmetic") {
    MPoly x = MPoly::var(0), y = MPoly::var(1);
    MPoly p = (x + y) * (x - y);
    CHECK(p == MPoly::var(0, 2) - MPoly::var(1, 2));
    CHECK(p.div_exact(x + y) == x - y);
    CHECK_FALSE(p.try_div(x + MPoly(1)));
    CHECK(p.degree_in(1) == 2);
    CHECK(p.coeff_in(1, 2) == MPoly(-1));
    CHECK(p.evaluate({mpz_class(5), mpz_class(3)}) == 16);
    CHECK(p.str({"x", "y"}) == "x^2 - y^2");
}

TEST_CASE("polynomial gcd") {
    MPoly x = MPoly::var(0), y = MPoly::var(1), z = MPoly::var(2);
    MPoly g = x * y + z;
    MPoly a = g * (x - MPoly(3)) * (x - MPoly(3)), b = g * (y + z) * MPoly(6);
    CHECK(normalize_sign(gcd(a, b)) == g);
    CHECK(normalize_sign(gcd(MPoly(4) * x, MPoly(6) * x)) == MPoly(2) * x);
    CHECK(normalize_sign(-x) == x);
}

TEST_CASE("fraction-free rank agrees with rational elimination") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> v(-3, 3), dim(1, 7);
    for (int trial = 0; trial < 200; ++trial) {
        const int rows = dim(rng), cols = dim(rng);
        std::vector<std::vector<mpz_class>> M(rows, std::vector<mpz_class>(cols));
        std::vector<std::vector<mpq_class>> Q(rows, std::vector<mpq_class>(cols));
        // Low-rank products make deficient matrices common.
        const int k = dim(rng);
        std::vector<std::vector<int>> L(rows, std::vector<int>(k)), R(k, std::vector<int>(cols));
        for (auto& row : L)
            for (int& e : row) e = v(rng);
        for (auto& row : R)
            for (int& e : row) e = v(rng);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) {
                long s = 0;
                for (int t = 0; t < k; ++t) s += static_cast<long>(L[i][t]) * R[t][j];
                M[i][j] = s;
                Q[i][j] = s;
            }
        CHECK(bareiss_rank(M) == rational_rank(Q));
    }
}

TEST_CASE("polynomial kernel of a parametric matrix") {
    MPoly t = MPoly::var(0), s = MPoly::var(1);
    // Rows (1, t, s) and (t, t^2, t s): rank 1, kernel of dimension 2.
    std::vector<std::vector<MPoly>> M{{MPoly(1), t, s}, {t, t * t, t * s}};
    PolyKernel K = poly_kernel(M, 3);
    CHECK(K.rank == 1);
    REQUIRE(K.basis.size() == 2);
    for (const auto& v : K.basis) {
        MPoly r = v[0] + t * v[1] + s * v[2];
        CHECK(r.is_zero());
    }
    std::vector<std::vector<MPoly>> F{{MPoly(1), t}, {s, MPoly(1)}};
    CHECK(poly_kernel(F, 2).rank == 2);
    CHECK(poly_kernel(F, 2).basis.empty());
}
