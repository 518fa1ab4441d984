#include <doctest.h>

#include <random>

#include "support.hpp"

using namespace prym;
using namespace prym::testing;

TEST_CASE("invariants on random abelian data") {
    std::mt19937_64 rng(20240601);
    PropertyStats st;
    for (int i = 0; i < 150; ++i) {
        RandomAbelian ra = random_abelian_datum(rng);
        check_properties(ra, rng, st);
    }
    for (const auto& v : st.violations) MESSAGE(v);
    CHECK(st.violations.empty());
    CHECK(st.data == 150);
    CHECK(st.symbolic_checked > 20);
}
