#pragma once

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "prym/datum.hpp"
#include "prym/linalg.hpp"
#include "prym/poly.hpp"

namespace prym {

// Matrix of an abelian cover: column j is the monodromy at t_j in (Z/N)^m,
// stored with entries lifted to [0, N).
struct CoverMatrix {
    int N = 0;
    int m = 0;
    int r = 0;
    std::vector<std::vector<int>> A;  // m rows, r columns
    std::vector<int> sigma;           // coordinates of the involution
    std::vector<bool> parity_mask;    // coordinates equal to N/2 in sigma
};

// Requires abelian provenance.
CoverMatrix cover_matrix(const PrymDatum& d);

// One character of the group, represented by the lexicographically smallest
// n in [0, N)^m with the given values on the columns.
struct CharacterEigen {
    std::vector<int> n;
    std::vector<long> alpha_lift;  // sum_i n_i A_ij, not reduced
    long dim = 0;                  // d_n
    bool odd = false;              // sigma acts by -1
};

// Every character of the group with its eigenspace dimension, in lex order of n.
std::vector<CharacterEigen> eigen_dims(const CoverMatrix& C);

// x^nu w^n prod (x - t_j)^floor_exps[j] dx
struct FormExponent {
    std::vector<int> n;
    int nu = 0;
    std::vector<long> floor_exps;
    std::vector<long> alpha_lift;
};

std::vector<FormExponent> anti_invariant_basis(const CoverMatrix& C);

// Image of basis[i] * basis[j]: x^k prod (x - t_j)^E_j (dx)^2 up to a constant.
struct ProductPair {
    int i = 0;
    int j = 0;
    int k = 0;
    std::vector<long> E;
};

struct ProductSystem {
    int r = 0;
    std::vector<FormExponent> basis;
    std::vector<ProductPair> pairs;
    std::vector<long> shift;  // per branch point, min over pairs of E_j

    // Label of a product in the kernel notation, e.g. "a24".
    std::string label(int pair) const;
    // Exponent of (x - t_j) in the image after clearing denominators.
    long cleared_exp(int pair, int j) const { return pairs[pair].E[j] - shift[j]; }
};

// Basis of the invariants of S^2 V_-; checked against expected_dim when given.
ProductSystem build_product_system(const CoverMatrix& C, std::optional<long> expected_dim = std::nullopt);

// Rank of the multiplication map with branch points at t (pairwise distinct).
int rank_at_sample(const ProductSystem& P, const std::vector<mpz_class>& t);

// Distinct pseudo-random integers in [1, 1e9], deterministic in the seed.
std::vector<mpz_class> sample_points(int r, std::uint64_t seed);

inline constexpr int kMaxSymbolicProducts = 12;
inline constexpr int kMaxSymbolicPoints = 12;

struct SymbolicRank {
    int rank = 0;
    std::vector<std::vector<MPoly>> kernel;  // coefficients indexed by pair, in t_1..t_r
};

// Rank over Q(t_1, ..., t_r) with a polynomial kernel basis.
SymbolicRank generic_rank_symbolic(const ProductSystem& P);

// Expands sum_p v_p x^k_p prod (x - t_j)^e_pj in Z[t, x] from scratch;
// true iff it is identically zero.
bool kernel_vanishes(const ProductSystem& P, const std::vector<MPoly>& v);

// Human-readable kernel element, e.g. "a24 - a33".
std::string format_kernel_element(const ProductSystem& P, const std::vector<MPoly>& v);

}  // namespace prym
