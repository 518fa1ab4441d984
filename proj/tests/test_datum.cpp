#include <doctest.h>

#include "prym/datum.hpp"
#include "prym/error.hpp"
#include "prym/io.hpp"
#include "support.hpp"

using namespace prym;
using namespace prym::testing;

TEST_CASE("genera of the cyclic example") {
    PrymDatum d = c10_r5();
    CHECK(d.r == 5);
    CHECK(d.b == 2);
    CHECK(d.g_tilde == 12);
    CHECK(d.g == 6);
    CHECK(d.p == 6);
    CHECK(riemann_hurwitz_genus(10, {10, 10, 5, 5, 5}) == 12);
}

TEST_CASE("branch degree counts the subgroups containing the involution") {
    // Columns 1, 1 have order 10 and contain 5; columns 2, 2, 4 have order 5.
    CHECK(branch_degree_b(c10_r5()) == 2 * (10 / 10));
    CHECK(c2cubed_r6().b == 0);
    CHECK(c2squared_r10().b == 4);
}

TEST_CASE("datum validation errors") {
    FiniteGroup G = abelian_from_columns(10, {{1, 9}});
    auto e = [&](int x) { return G.find_coords(std::vector<int>{x}); };
    CHECK_THROWS_WITH_AS(validate_datum(G, {e(1), e(1), e(2), e(2), e(3)}, e(5)), "product ≠ identity", DatumError);
    CHECK_THROWS_AS(validate_datum(G, {e(1), e(9), e(1)}, e(5)), DatumError);
    CHECK_THROWS_AS(validate_datum(G, {e(2), e(8), e(2), e(8)}, e(5)), DatumError);
    CHECK_THROWS_AS(validate_datum(G, {e(1), e(9), e(1), e(9)}, e(2)), DatumError);
    CHECK_THROWS_AS(validate_datum(G, {e(1), e(9), e(0), e(1), e(9)}, e(5)), DatumError);
}

TEST_CASE("braid moves preserve the product and the genera") {
    FiniteGroup G = read_cayley_file(data_path("groups/c2_x_sl23.cayley"));
    PrymDatum d = validate_datum(G, {39, 30, 9, 20, 3}, 15);
    for (int i = 1; i < d.r; ++i)
        for (auto dir : {BraidDirection::left, BraidDirection::right}) {
            auto t = braid_move(G, d.tuple, i, dir);
            PrymDatum m = validate_datum(G, t, d.sigma);
            CHECK(m.g_tilde == d.g_tilde);
            CHECK(m.b == d.b);
            auto back = braid_move(G, t, i, dir == BraidDirection::left ? BraidDirection::right : BraidDirection::left);
            CHECK(back == d.tuple);
        }
}

TEST_CASE("hodge decomposition of the order-48 example") {
    PrymDatum d = read_datum_file(data_path("examples/order48_r5.json"));
    CHECK(d.g_tilde == 25);
    CHECK(d.g == 13);
    CHECK(d.b == 0);
    RepDecomposition V = hodge_decomposition(d);
    CHECK(V.dimension(Part::all) == 25);
    CHECK(V.dimension(Part::minus) == 12);
    CHECK(sym2_invariant_dimension(V, Part::minus) == 2);
}
