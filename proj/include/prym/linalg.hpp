#pragma once

#include <vector>

#include <gmpxx.h>

#include "prym/poly.hpp"

namespace prym {

// Rank of an integer matrix by fraction-free (Bareiss) elimination.
int bareiss_rank(std::vector<std::vector<mpz_class>> M);

struct PolyKernel {
    int rank = 0;
    // Each vector has one entry per column, content 1 and positive leading term.
    std::vector<std::vector<MPoly>> basis;
};

// Rank over the fraction field and a polynomial basis of {v : M v = 0}.
PolyKernel poly_kernel(std::vector<std::vector<MPoly>> M, int cols);

}  // namespace prym
