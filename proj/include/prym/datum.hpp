#pragma once

#include <vector>

#include "prym/characters.hpp"
#include "prym/group.hpp"

namespace prym {

// Monodromy data of a tower C~ -> C -> P^1 branched over r points.
struct PrymDatum {
    FiniteGroup group;
    std::vector<Elem> tuple;
    Elem sigma = 0;

    int r = 0;
    long b = 0;
    long g_tilde = 0;
    long g = 0;
    long p = 0;
    std::vector<int> orders;
};

PrymDatum validate_datum(const FiniteGroup& G, std::vector<Elem> tuple, Elem sigma);

long branch_degree_b(const PrymDatum& d);

struct Genera {
    long g_tilde = 0;
    long g = 0;
    long p = 0;
};

// Riemann-Hurwitz, cross-checked against the gcd formula for abelian covers.
Genera genera(const PrymDatum& d);

// 2g - 2 = |G| (-2 + sum (1 - 1/m_j)).
long riemann_hurwitz_genus(int group_order, const std::vector<int>& orders);

// Genus of the abelian cover whose matrix has the given columns in (Z/N)^m.
long abelian_cover_genus(int N, int group_order, const std::vector<std::vector<int>>& columns);

// Chevalley-Weil multiplicities of the irreducibles in H^0(C~, K).
RepDecomposition hodge_decomposition(const PrymDatum& d);

enum class BraidDirection { left, right };

// Elementary braid move at 1-based position i (swaps positions i and i+1).
std::vector<Elem> braid_move(const FiniteGroup& G, std::vector<Elem> tuple, int i, BraidDirection dir);

}  // namespace prym
