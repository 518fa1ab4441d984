#pragma once

#include <memory>
#include <vector>

#include "prym/cyclotomic.hpp"
#include "prym/group.hpp"

namespace prym {

struct ConjClass {
    Elem rep = 0;
    int size = 0;
    std::vector<Elem> members;
};

// Irreducible characters over Z[zeta_e], e the group exponent.
// Character 0 is trivial; the rest are sorted by degree and then by values.
// For groups with abelian provenance labels[i] is the lexicographically
// smallest n in (Z/N)^rank whose character n.x restricts to character i.
struct CharacterTable {
    FiniteGroup group;
    std::vector<ConjClass> classes;
    std::vector<int> class_of;
    std::vector<int> inverse_class;
    std::vector<int> square_class;
    int exponent = 1;
    std::shared_ptr<const CycloContext> ctx;
    std::vector<std::vector<Cyclo>> values;  // [character][class]
    std::vector<int> degrees;
    std::vector<int> duals;
    std::vector<std::vector<int>> labels;

    int size() const { return static_cast<int>(values.size()); }
    const Cyclo& value(int chi, Elem g) const { return values[chi][class_of[g]]; }
    int dual(int chi) const { return duals[chi]; }
};

// Memoised per group contents; safe to call from several threads.
std::shared_ptr<const CharacterTable> character_table(const FiniteGroup& G);

// Row orthogonality, class count and degree sum; throws InternalError.
void verify_character_table(const CharacterTable& T);
void verify_column_orthogonality(const CharacterTable& T);

int frobenius_schur(const CharacterTable& T, int chi);

enum class Part { plus, minus, all };

struct RepDecomposition {
    std::shared_ptr<const CharacterTable> table;
    std::vector<long> mult;
    std::vector<int> sigma_sign;

    bool in_part(int chi, Part part) const;
    long dimension(Part part) const;
};

// dim (S^2 V_part)^G from the class-function formula.
long sym2_by_character(const RepDecomposition& V, Part part);
// The same dimension assembled block by block from duals and Frobenius-Schur indicators.
long sym2_by_blocks(const RepDecomposition& V, Part part);
// Both of the above; throws InternalError if they disagree.
long sym2_invariant_dimension(const RepDecomposition& V, Part part);

}  // namespace prym
