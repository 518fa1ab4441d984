#include "prym/group.hpp"

namespace prym {

// Fingerprints: order, abelian invariants of G/G', element-order counts,
// centre size, derived-subgroup size. Ids follow the SmallGroups library.
const std::vector<CatalogEntry>& small_group_catalog() {
    static const std::vector<CatalogEntry> catalog{
        {{1, 1}, "C1", true, {1, {}, {{1, 1}}, 1, 1}},
        {{2, 1}, "C2", true, {2, {2}, {{1, 1}, {2, 1}}, 2, 1}},
        {{3, 1}, "C3", true, {3, {3}, {{1, 1}, {3, 2}}, 3, 1}},
        {{4, 1}, "C4", true, {4, {4}, {{1, 1}, {2, 1}, {4, 2}}, 4, 1}},
        {{4, 2}, "C2^2", true, {4, {2, 2}, {{1, 1}, {2, 3}}, 4, 1}},
        {{5, 1}, "C5", true, {5, {5}, {{1, 1}, {5, 4}}, 5, 1}},
        {{6, 1}, "S3", false, {6, {2}, {{1, 1}, {2, 3}, {3, 2}}, 1, 3}},
        {{6, 2}, "C6", true, {6, {2, 3}, {{1, 1}, {2, 1}, {3, 2}, {6, 2}}, 6, 1}},
        {{8, 1}, "C8", true, {8, {8}, {{1, 1}, {2, 1}, {4, 2}, {8, 4}}, 8, 1}},
        {{8, 2}, "C2xC4", true, {8, {2, 4}, {{1, 1}, {2, 3}, {4, 4}}, 8, 1}},
        {{8, 3}, "D4", false, {8, {2, 2}, {{1, 1}, {2, 5}, {4, 2}}, 2, 2}},
        {{8, 4}, "Q8", false, {8, {2, 2}, {{1, 1}, {2, 1}, {4, 6}}, 2, 2}},
        {{8, 5}, "C2^3", true, {8, {2, 2, 2}, {{1, 1}, {2, 7}}, 8, 1}},
        {{10, 2}, "C10", true, {10, {2, 5}, {{1, 1}, {2, 1}, {5, 4}, {10, 4}}, 10, 1}},
        {{12, 1}, "Dic3", false, {12, {4}, {{1, 1}, {2, 1}, {3, 2}, {4, 6}, {6, 2}}, 2, 3}},
        {{12, 2}, "C12", true, {12, {3, 4}, {{1, 1}, {2, 1}, {3, 2}, {4, 2}, {6, 2}, {12, 4}}, 12, 1}},
        {{12, 4}, "D12", false, {12, {2, 2}, {{1, 1}, {2, 7}, {3, 2}, {6, 2}}, 2, 3}},
        {{12, 5}, "C2xC6", true, {12, {2, 2, 3}, {{1, 1}, {2, 3}, {3, 2}, {6, 6}}, 12, 1}},
        {{16, 2}, "C4^2", true, {16, {4, 4}, {{1, 1}, {2, 3}, {4, 12}}, 16, 1}},
        {{16, 4}, "C4:C4", false, {16, {2, 4}, {{1, 1}, {2, 3}, {4, 12}}, 4, 2}},
        {{16, 5}, "C2xC8", true, {16, {2, 8}, {{1, 1}, {2, 3}, {4, 4}, {8, 8}}, 16, 1}},
        {{16, 7}, "D8", false, {16, {2, 2}, {{1, 1}, {2, 9}, {4, 2}, {8, 4}}, 2, 4}},
        {{16, 8}, "QD16", false, {16, {2, 2}, {{1, 1}, {2, 5}, {4, 6}, {8, 4}}, 2, 4}},
        {{16, 10}, "C2^2xC4", true, {16, {2, 2, 4}, {{1, 1}, {2, 7}, {4, 8}}, 16, 1}},
        {{16, 11}, "C2xD4", false, {16, {2, 2, 2}, {{1, 1}, {2, 11}, {4, 4}}, 4, 2}},
        {{16, 12}, "C2xQ8", false, {16, {2, 2, 2}, {{1, 1}, {2, 3}, {4, 12}}, 4, 2}},
        {{16, 13}, "C4oD4", false, {16, {2, 2, 2}, {{1, 1}, {2, 7}, {4, 8}}, 4, 2}},
        {{16, 14}, "C2^4", true, {16, {2, 2, 2, 2}, {{1, 1}, {2, 15}}, 16, 1}},
        {{20, 5}, "C2xC10", true, {20, {2, 2, 5}, {{1, 1}, {2, 3}, {5, 4}, {10, 12}}, 20, 1}},
        {{24, 7}, "C2xDic3", false, {24, {2, 4}, {{1, 1}, {2, 3}, {3, 2}, {4, 12}, {6, 6}}, 4, 3}},
        {{24, 8}, "C3:D4", false, {24, {2, 2}, {{1, 1}, {2, 9}, {3, 2}, {4, 6}, {6, 6}}, 2, 6}},
        {{32, 38}, "C8oD4", false, {32, {2, 2, 4}, {{1, 1}, {2, 7}, {4, 8}, {8, 16}}, 8, 2}},
        {{32, 42}, "C4oD8", false, {32, {2, 2, 2}, {{1, 1}, {2, 11}, {4, 12}, {8, 8}}, 4, 4}},
        {{32, 46}, "C2^2xD4", false, {32, {2, 2, 2, 2}, {{1, 1}, {2, 23}, {4, 8}}, 8, 2}},
        {{32, 48}, "C2xC4oD4", false, {32, {2, 2, 2, 2}, {{1, 1}, {2, 15}, {4, 16}}, 8, 2}},
        {{32, 50}, "D4oQ8", false, {32, {2, 2, 2, 2}, {{1, 1}, {2, 11}, {4, 20}}, 2, 2}},
        {{48, 32}, "C2xSL(2,3)", false, {48, {2, 3}, {{1, 1}, {2, 3}, {3, 8}, {4, 12}, {6, 24}}, 4, 8}},
        {{64, 259}, "Q8oD8", false, {64, {2, 2, 2, 2}, {{1, 1}, {2, 15}, {4, 32}, {8, 16}}, 2, 4}},
    };
    return catalog;
}

}  // namespace prym
